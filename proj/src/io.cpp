#include "mstd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mstd/error.hpp"

namespace mstd::io {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) {
        const auto first = current.find_first_not_of(" \t");
        const auto last = current.find_last_not_of(" \t");
        if (first == std::string::npos) continue;
        parts.push_back(current.substr(first, last - first + 1));
    }
    return parts;
}

}  // namespace

Json group_to_json(const FiniteGroup& group) {
    const std::size_t n = group.order();
    Json table = Json::array();
    for (std::uint32_t x = 0; x < n; ++x) {
        Json row = Json::array();
        for (std::uint32_t y = 0; y < n; ++y) row.push_back(group.mul(x, y));
        table.push_back(std::move(row));
    }
    return Json{{"name", group.name()},
                {"order", n},
                {"identity", group.identity().index},
                {"table", std::move(table)},
                {"labels", group.labels()},
                {"descriptor", group.descriptor().to_string()}};
}

FiniteGroup group_from_json(const Json& j) {
    try {
        const auto descriptor = GroupDescriptor::parse(j.at("descriptor").get<std::string>());
        const auto rows = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
        const auto order = j.at("order").get<std::size_t>();
        if (rows.size() != order) throw Error(ErrorKind::Parse, "order field does not match table size");
        std::optional<std::vector<std::string>> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        const auto name = j.value("name", std::string("custom"));

        if (descriptor.kind == GroupKind::Custom) {
            auto g = from_table(rows, labels, name);
            if (g.identity().index != j.at("identity").get<std::uint32_t>())
                throw Error(ErrorKind::NotAGroup, "identity: stored identity does not match table");
            return g;
        }
        auto g = descriptor.kind == GroupKind::Cyclic ? make_cyclic(descriptor.parameter)
                                                      : make_dihedral(descriptor.parameter);
        if (g.order() != order) throw Error(ErrorKind::NotAGroup, "descriptor order does not match table");
        for (std::uint32_t x = 0; x < order; ++x)
            for (std::uint32_t y = 0; y < order; ++y)
                if (rows[x][y] != g.mul(x, y))
                    throw Error(ErrorKind::NotAGroup, "table disagrees with descriptor " + descriptor.to_string());
        return g;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("group JSON: ") + e.what());
    }
}

FiniteGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open group file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, "group file '" + path + "': " + e.what());
    }
    return group_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec == "klein4") return catalog::klein_four();
    if (spec == "q8") return catalog::quaternion();
    if (spec.starts_with("cyclic:") || spec.starts_with("dihedral:")) {
        const auto d = GroupDescriptor::parse(spec);
        return d.kind == GroupKind::Cyclic ? make_cyclic(d.parameter) : make_dihedral(d.parameter);
    }
    return read_group_file(spec);
}

SubsetMask parse_subset(const FiniteGroup& group, const std::string& text) {
    auto s = SubsetMask::empty(group);
    for (const auto& part : split_commas(text)) s.insert(group.parse_element(part).index);
    return s;
}

SubsetMask parse_interval_subset(std::size_t n, const std::string& text) {
    SubsetMask s(Universe::interval(n));
    for (const auto& part : split_commas(text)) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw Error(ErrorKind::Parse, "bad interval member '" + part + "'");
        s.insert(v);
    }
    return s;
}

std::vector<std::string> labels_of(const FiniteGroup& group, const SubsetMask& s) {
    std::vector<std::string> out;
    for (auto i : s.elements()) out.push_back(group.label({i}));
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

Json miss_probability_json(const FiniteGroup& group, Element g, Mode mode) {
    const auto decomposition = chains(group, g, mode);
    const auto p = miss_probability(group, g, mode);
    return Json{{"group", group.descriptor().kind == GroupKind::Custom ? group.name() : group.descriptor().to_string()},
                {"element", group.label(g)},
                {"mode", to_string(mode)},
                {"chain_lengths", decomposition.cycle_lengths()},
                {"miss_count", p.count.str()},
                {"log2_denominator", p.log2_denominator},
                {"exact", p.to_string()},
                {"probability", p.to_double()},
                {"tool", kToolVersion}};
}

Json chains_json(const FiniteGroup& group, Element g, Mode mode) {
    const auto decomposition = chains(group, g, mode);
    Json list = Json::array();
    for (const auto& chain : decomposition.chains) {
        Json c = Json::array();
        for (auto x : chain) c.push_back(group.label({x}));
        list.push_back(std::move(c));
    }
    return Json{{"group", group.descriptor().kind == GroupKind::Custom ? group.name() : group.descriptor().to_string()},
                {"element", group.label(g)},
                {"mode", to_string(mode)},
                {"chains", std::move(list)},
                {"chain_lengths", decomposition.cycle_lengths()},
                {"tool", kToolVersion}};
}

Json classification_json(const FiniteGroup& group, const SubsetMask& s) {
    const auto c = classify(group, s);
    return Json{{"group", group.descriptor().kind == GroupKind::Custom ? group.name() : group.descriptor().to_string()},
                {"set", labels_of(group, s)},
                {"sumset", labels_of(group, sumset(group, s))},
                {"diffset", labels_of(group, diffset(group, s))},
                {"sumset_size", c.sumset_size},
                {"diffset_size", c.diffset_size},
                {"label", to_string(c.label)},
                {"tool", kToolVersion}};
}

Json interval_classification_json(std::size_t n, const SubsetMask& s) {
    const auto c = interval_classify(n, s);
    Json diffs = Json::array();
    for (auto d : interval_diffset(n, s).elements()) diffs.push_back(static_cast<long long>(d) - static_cast<long long>(n));
    return Json{{"universe", "interval:" + std::to_string(n)},
                {"set", s.elements()},
                {"sumset", interval_sumset(n, s).elements()},
                {"diffset", std::move(diffs)},
                {"sumset_size", c.sumset_size},
                {"diffset_size", c.diffset_size},
                {"label", to_string(c.label)},
                {"tool", kToolVersion}};
}

Json audit_json(const AuditReport& report) {
    Json list = Json::array();
    for (const auto& e : report.entries) {
        list.push_back(Json{{"group", report.group},
                            {"element", e.element.index},
                            {"mode", to_string(e.mode)},
                            {"bound", e.bound},
                            {"chain_lengths", e.chain_lengths},
                            {"exact", e.exact.to_string()},
                            {"stated_bound", e.stated.to_double()},
                            {"corrected_bound", e.corrected.to_double()},
                            {"stated_bound_holds", e.stated_holds},
                            {"corrected_bound_holds", e.corrected_holds}});
    }
    return list;
}

Json sample_report_json(const SampleReport& r) {
    return Json{{"universe", r.universe},
                {"order", r.order},
                {"trials", r.trials},
                {"seed", r.seed},
                {"rng_id", r.rng_id},
                {"sum_dominant", r.counts.sum_dominant},
                {"balanced", r.counts.balanced},
                {"diff_dominant", r.counts.diff_dominant},
                {"both_full", r.both_full},
                {"frac_sum_dominant", r.fraction(Dominance::SumDominant)},
                {"frac_balanced", r.fraction(Dominance::Balanced)},
                {"frac_diff_dominant", r.fraction(Dominance::DiffDominant)},
                {"tool", kToolVersion}};
}

Json census_report_json(const CensusReport& r, const FiniteGroup& group) {
    Json examples = Json::array();
    for (auto m : r.sum_dominant_examples) examples.push_back(labels_of(group, SubsetMask::from_bits(group, m)));
    return Json{{"group", r.group},
                {"order", r.order},
                {"total_subsets", r.total},
                {"sum_dominant", r.counts.sum_dominant},
                {"balanced", r.counts.balanced},
                {"diff_dominant", r.counts.diff_dominant},
                {"sum_dominant_examples", std::move(examples)},
                {"tool", kToolVersion}};
}

Json verification_json(const VerificationReport& report) {
    Json list = Json::array();
    for (const auto& c : report.cases) {
        list.push_back(Json{{"group", c.group},
                            {"element", c.element},
                            {"mode", to_string(c.mode)},
                            {"check", c.check},
                            {"formula_count", c.formula_count},
                            {"oracle_count", c.oracle_count},
                            {"pass", c.pass}});
    }
    return list;
}

std::string sweep_csv_row(const SampleReport& r) {
    std::ostringstream out;
    out << r.universe << ',' << r.order << ',' << r.trials << ',' << r.seed << ',' << r.rng_id << ','
        << format_double(r.fraction(Dominance::SumDominant)) << ',' << format_double(r.fraction(Dominance::Balanced))
        << ',' << format_double(r.fraction(Dominance::DiffDominant));
    return out.str();
}

std::string census_csv_row(const CensusReport& r) {
    std::ostringstream out;
    out << r.group << ',' << r.order << ',' << r.total << ',' << r.counts.sum_dominant << ',' << r.counts.balanced << ','
        << r.counts.diff_dominant;
    return out.str();
}

}  // namespace mstd::io

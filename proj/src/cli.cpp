#include "mstd/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mstd/error.hpp"
#include "mstd/io.hpp"

namespace mstd::cli {

namespace {

struct Options {
    std::string group;
    std::string element;
    std::string mode = "sum";
    std::string set;
    std::string out_path;
    std::string format = "json";
    std::string table_path;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 10000;
    int workers = 0;
    std::size_t max_order = 16;
    std::size_t from = 10;
    std::size_t to = 100;
    std::size_t interval_n = 0;
    bool half = false;
    bool force = false;
    bool has_interval = false;
};

void add_out(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out_path, "Write the result to this file instead of stdout");
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_sampling(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Generator seed (default " + std::to_string(kDefaultSeed) + ")");
    cmd->add_option("--trials", o.trials, "Number of sampled subsets")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "OpenMP worker count (0 = default)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Sumsets, difference sets and MSTD statistics in finite groups", "mstd"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::kToolVersion);

    std::function<void(std::ostream&)> action;
    int status = kExitOk;

    auto* group_cmd = app.add_subcommand("group", "Group utilities")->require_subcommand(1);
    auto* group_make = group_cmd->add_subcommand("make", "Emit a group as JSON");
    group_make->add_option("--group", o.group, "cyclic:n | dihedral:n | klein4 | q8 | group JSON file");
    group_make->add_option("--from-table", o.table_path, "JSON file holding a square table (array of rows) to validate");
    add_out(group_make, o);
    group_make->callback([&] {
        action = [&](std::ostream& os) {
            if (o.group.empty() == o.table_path.empty())
                throw Error(ErrorKind::InvalidParameter, "give exactly one of --group or --from-table");
            if (!o.group.empty()) {
                os << io::dump(io::group_to_json(io::parse_group_spec(o.group)));
                return;
            }
            std::ifstream in(o.table_path);
            if (!in) throw Error(ErrorKind::Parse, "cannot open '" + o.table_path + "'");
            io::Json j;
            try {
                in >> j;
                os << io::dump(io::group_to_json(from_table(j.get<std::vector<std::vector<std::uint32_t>>>())));
            } catch (const io::Json::exception& e) {
                throw Error(ErrorKind::Parse, e.what());
            }
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Sumset, difference set and dominance class of one subset");
    classify_cmd->add_option("--group", o.group, "Group spec");
    classify_cmd->add_option("--interval", o.interval_n, "Classify S ⊆ {0..N} as integers instead of in a group");
    classify_cmd->add_option("--set", o.set, "Comma-separated labels, indices or integers")->required();
    add_out(classify_cmd, o);
    classify_cmd->callback([&] {
        o.has_interval = classify_cmd->count("--interval") > 0;
        action = [&](std::ostream& os) {
            if (o.has_interval == !o.group.empty())
                throw Error(ErrorKind::InvalidParameter, "give exactly one of --group or --interval");
            if (o.has_interval) {
                os << io::dump(io::interval_classification_json(o.interval_n, io::parse_interval_subset(o.interval_n, o.set)));
                return;
            }
            const auto g = io::parse_group_spec(o.group);
            os << io::dump(io::classification_json(g, io::parse_subset(g, o.set)));
        };
    });

    auto* miss_cmd = app.add_subcommand("missprob", "Exact probability that an element misses S+S or S-S");
    miss_cmd->add_option("--group", o.group, "Group spec")->required();
    miss_cmd->add_option("--element", o.element, "Element label or index (all elements when omitted)");
    miss_cmd->add_option("--mode", o.mode, "sum or diff")->check(CLI::IsMember({"sum", "diff"}));
    add_out(miss_cmd, o);
    miss_cmd->callback([&] {
        action = [&](std::ostream& os) {
            const auto g = io::parse_group_spec(o.group);
            const auto mode = parse_mode(o.mode);
            if (!o.element.empty()) {
                os << io::dump(io::miss_probability_json(g, g.parse_element(o.element), mode));
                return;
            }
            io::Json list = io::Json::array();
            for (std::uint32_t x = 0; x < g.order(); ++x) list.push_back(io::miss_probability_json(g, {x}, mode));
            os << io::dump(list);
        };
    });

    auto* chains_cmd = app.add_subcommand("chains", "Chain decomposition of the group for a target element");
    chains_cmd->add_option("--group", o.group, "Group spec")->required();
    chains_cmd->add_option("--element", o.element, "Element label or index")->required();
    chains_cmd->add_option("--mode", o.mode, "sum or diff")->check(CLI::IsMember({"sum", "diff"}));
    add_out(chains_cmd, o);
    chains_cmd->callback([&] {
        action = [&](std::ostream& os) {
            const auto g = io::parse_group_spec(o.group);
            os << io::dump(io::chains_json(g, g.parse_element(o.element), parse_mode(o.mode)));
        };
    });

    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds")->require_subcommand(1);
    auto* audit_cmd = bounds_cmd->add_subcommand("audit", "Compare exact miss probabilities with the analytic bounds");
    audit_cmd->add_option("--group", o.group, "Group spec")->required();
    add_out(audit_cmd, o);
    audit_cmd->callback([&] {
        action = [&](std::ostream& os) { os << io::dump(io::audit_json(bound_audit(io::parse_group_spec(o.group)))); };
    });

    auto* census_cmd = app.add_subcommand("census", "Exhaustive dominance census of every subset");
    census_cmd->add_option("--group", o.group, "Group spec")->required();
    census_cmd->add_option("--workers", o.workers, "OpenMP worker count (0 = default)")->check(CLI::NonNegativeNumber);
    census_cmd->add_flag("--force", o.force, "Allow groups above order " + std::to_string(kCensusMaxOrder));
    add_format(census_cmd, o);
    add_out(census_cmd, o);
    census_cmd->callback([&] {
        action = [&](std::ostream& os) {
            const auto g = io::parse_group_spec(o.group);
            const auto report = census(g, {.workers = o.workers, .force = o.force});
            if (o.format == "csv") os << io::kCensusCsvHeader << '\n' << io::census_csv_row(report) << '\n';
            else os << io::dump(io::census_report_json(report, g));
        };
    });

    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo dominance frequencies for uniform random subsets");
    sample_cmd->add_option("--group", o.group, "Group spec")->required();
    add_sampling(sample_cmd, o);
    add_format(sample_cmd, o);
    add_out(sample_cmd, o);
    sample_cmd->callback([&] {
        action = [&](std::ostream& os) {
            const auto report = monte_carlo_group(io::parse_group_spec(o.group), o.trials, o.seed, o.workers);
            if (o.format == "csv") os << io::kSweepCsvHeader << '\n' << io::sweep_csv_row(report) << '\n';
            else os << io::dump(io::sample_report_json(report));
        };
    });

    auto* sweep_cmd = app.add_subcommand("sweep", "Experiment sweeps (CSV)")->require_subcommand(1);
    auto* sweep_cyclic_cmd = sweep_cmd->add_subcommand("cyclic", "Monte Carlo over Z/nZ for a range of n");
    sweep_cyclic_cmd->add_option("--from", o.from, "Smallest n")->check(CLI::PositiveNumber);
    sweep_cyclic_cmd->add_option("--to", o.to, "Largest n")->check(CLI::PositiveNumber);
    add_sampling(sweep_cyclic_cmd, o);
    add_out(sweep_cyclic_cmd, o);
    sweep_cyclic_cmd->callback([&] {
        action = [&](std::ostream& os) {
            if (o.from > o.to) throw Error(ErrorKind::InvalidParameter, "--from must not exceed --to");
            os << io::kSweepCsvHeader << '\n';
            for (std::size_t n = o.from; n <= o.to; ++n) {
                auto rows = sweep_cyclic(n, n, o.trials, o.seed, o.workers);
                os << io::sweep_csv_row(rows.front()) << '\n' << std::flush;
            }
        };
    });
    auto* sweep_dihedral_cmd = sweep_cmd->add_subcommand("dihedral", "Exhaustive census of D6 .. D(max-order)");
    sweep_dihedral_cmd->add_option("--max-order", o.max_order, "Largest group order")->check(CLI::Range(6, 30));
    sweep_dihedral_cmd->add_option("--workers", o.workers, "OpenMP worker count (0 = default)")
        ->check(CLI::NonNegativeNumber);
    add_out(sweep_dihedral_cmd, o);
    sweep_dihedral_cmd->callback([&] {
        action = [&](std::ostream& os) {
            os << io::kCensusCsvHeader << '\n';
            for (std::size_t n = 3; 2 * n <= o.max_order; ++n)
                os << io::census_csv_row(census(make_dihedral(n), {.workers = o.workers})) << '\n' << std::flush;
        };
    });

    auto* interval_cmd = app.add_subcommand("interval", "Integer-interval baseline")->require_subcommand(1);
    auto* interval_sample = interval_cmd->add_subcommand("sample", "Monte Carlo over subsets of {0..n}");
    interval_sample->add_option("--n", o.interval_n, "Interval end n (universe {0..n})")->required();
    interval_sample->add_flag("--half", o.half, "Draw from {0..floor(n/2)} and classify in Z/(n+1)");
    add_sampling(interval_sample, o);
    add_format(interval_sample, o);
    add_out(interval_sample, o);
    interval_sample->callback([&] {
        action = [&](std::ostream& os) {
            const auto report = o.half ? half_interval_monte_carlo(o.interval_n, o.trials, o.seed, o.workers)
                                       : interval_monte_carlo(o.interval_n, o.trials, o.seed, o.workers);
            if (o.format == "csv") os << io::kSweepCsvHeader << '\n' << io::sweep_csv_row(report) << '\n';
            else os << io::dump(io::sample_report_json(report));
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "Check chain formulas and closed forms against brute force");
    verify_cmd->add_option("--max-order", o.max_order, "Largest group order")
        ->check(CLI::Range(std::size_t{1}, kOracleMaxOrder));
    verify_cmd->add_option("--workers", o.workers, "OpenMP worker count (0 = default)")->check(CLI::NonNegativeNumber);
    add_out(verify_cmd, o);
    verify_cmd->callback([&] {
        action = [&](std::ostream& os) {
            const auto report = verify_suite(o.max_order, o.workers);
            os << io::dump(io::verification_json(report));
            if (!report.all_pass()) {
                err << "verify: " << report.failures() << " of " << report.cases.size() << " checks failed\n";
                status = kExitValidationFailure;
            }
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << io::kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kExitInvalidInput;
    }

    try {
        if (o.out_path.empty()) {
            action(out);
        } else {
            std::ostringstream buffer;
            action(buffer);
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file) throw Error(ErrorKind::InvalidParameter, "cannot write '" + o.out_path + "'");
            file << buffer.str();
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::NotAGroup ? kExitValidationFailure : kExitInvalidInput;
    }
    return status;
}

}  // namespace mstd::cli

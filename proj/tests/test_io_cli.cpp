#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mstd/cli.hpp"
#include "mstd/error.hpp"
#include "mstd/io.hpp"

using namespace mstd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("mstd_test_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("group JSON round-trips byte for byte") {
    for (const auto& g : {make_cyclic(7), make_dihedral(5), catalog::quaternion(), catalog::klein_four()}) {
        CAPTURE(g.name());
        const std::string text = io::dump(io::group_to_json(g));
        auto back = io::group_from_json(io::Json::parse(text));
        CHECK(io::dump(io::group_to_json(back)) == text);
        CHECK(back.fingerprint() == g.fingerprint());
        CHECK(back.descriptor() == g.descriptor());
    }
    auto j = io::group_to_json(make_dihedral(3));
    CHECK(j["descriptor"] == "dihedral:3");
    CHECK(j["order"] == 6);
    CHECK(j["identity"] == 0);
    CHECK(j["table"][1][3] == 4);
}

TEST_CASE("group JSON rejects inconsistent input") {
    auto j = io::group_to_json(make_cyclic(4));
    j["table"][1][1] = 3;
    CHECK_THROWS_AS(io::group_from_json(j), Error);

    auto custom = io::group_to_json(catalog::klein_four());
    custom["table"][1][2] = 1;
    try {
        io::group_from_json(custom);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAGroup);
    }

    auto missing = io::group_to_json(make_cyclic(3));
    missing.erase("table");
    try {
        io::group_from_json(missing);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("group specs and subset literals") {
    CHECK(io::parse_group_spec("cyclic:9").order() == 9);
    CHECK(io::parse_group_spec("dihedral:4").order() == 8);
    CHECK(io::parse_group_spec("q8").name() == "Q8");
    CHECK(io::parse_group_spec("klein4").order() == 4);
    CHECK_THROWS_AS(io::parse_group_spec("cyclic:x"), Error);
    CHECK_THROWS_AS(io::parse_group_spec("/nonexistent/group.json"), Error);

    const auto path = temp_path("q8.json");
    write_file(path, io::dump(io::group_to_json(catalog::quaternion())));
    CHECK(io::parse_group_spec(path.string()).fingerprint() == catalog::quaternion().fingerprint());

    auto d6 = make_dihedral(3);
    CHECK(io::parse_subset(d6, "a, b").elements() == std::vector<std::uint32_t>{1, 3});
    CHECK(io::parse_subset(d6, "1,3") == io::parse_subset(d6, "a,b"));
    CHECK(io::parse_subset(d6, "").empty());
    CHECK_THROWS_AS(io::parse_subset(d6, "c"), Error);
    CHECK(io::parse_interval_subset(14, "0,2,3").count() == 3);
    CHECK_THROWS_AS(io::parse_interval_subset(3, "5"), Error);
    CHECK_THROWS_AS(io::parse_interval_subset(3, "x"), Error);
}

TEST_CASE("CSV rows") {
    SampleReport r;
    r.universe = "cyclic:10";
    r.order = 10;
    r.trials = 4;
    r.seed = 1;
    r.counts = {1, 2, 1};
    CHECK(io::sweep_csv_row(r) == "cyclic:10,10,4,1,splitmix64-per-trial-v1,0.25,0.5,0.25");
    CHECK(std::string(io::kSweepCsvHeader) ==
          "group,order,trials,seed,rng_id,frac_sum_dominant,frac_balanced,frac_diff_dominant");
    CHECK(std::string(io::kCensusCsvHeader) == "group,order,total_subsets,sum_dominant,balanced,diff_dominant");
    CHECK(io::format_double(0.000462) == "0.000462");
}

TEST_CASE("cli: missprob reproduces the D6 example") {
    auto r = run({"missprob", "--group", "dihedral:3", "--element", "ab", "--mode", "sum"});
    REQUIRE(r.code == 0);
    auto j = io::Json::parse(r.out);
    CHECK(j["chain_lengths"] == io::Json::array({2, 4}));
    CHECK(j["miss_count"] == "21");
    CHECK(j["log2_denominator"] == 6);
    CHECK(j["element"] == "ab");
    CHECK(j["mode"] == "sum");
    CHECK(j["probability"].get<double>() == doctest::Approx(21.0 / 64));

    auto all = run({"missprob", "--group", "cyclic:6", "--mode", "diff"});
    REQUIRE(all.code == 0);
    CHECK(io::Json::parse(all.out).size() == 6);
}

TEST_CASE("cli: classify") {
    auto r = run({"classify", "--group", "dihedral:3", "--set", "a,b"});
    REQUIRE(r.code == 0);
    auto j = io::Json::parse(r.out);
    CHECK(j["label"] == "sum-dominant");
    CHECK(j["sumset_size"] == 4);
    CHECK(j["diffset_size"] == 2);

    auto conway = run({"classify", "--interval", "14", "--set", "0,2,3,4,7,11,12,14"});
    REQUIRE(conway.code == 0);
    auto c = io::Json::parse(conway.out);
    CHECK(c["label"] == "sum-dominant");
    CHECK(c["sumset_size"] == 26);
    CHECK(c["diffset_size"] == 25);

    CHECK(run({"classify", "--group", "dihedral:3", "--set", "z"}).code == 2);
    CHECK(run({"classify", "--set", "1"}).code == 2);
}

TEST_CASE("cli: chains and bounds audit") {
    auto r = run({"chains", "--group", "dihedral:3", "--element", "ab"});
    REQUIRE(r.code == 0);
    CHECK(io::Json::parse(r.out)["chain_lengths"] == io::Json::array({2, 4}));

    auto audit = run({"bounds", "audit", "--group", "dihedral:6"});
    REQUIRE(audit.code == 0);
    auto list = io::Json::parse(audit.out);
    bool violation = false;
    for (const auto& e : list) {
        violation = violation || !e["stated_bound_holds"].get<bool>();
        CHECK(e.contains("exact"));
        CHECK(e.contains("corrected_bound"));
    }
    CHECK(violation);
}

TEST_CASE("cli: group make") {
    auto r = run({"group", "make", "--group", "dihedral:4"});
    REQUIRE(r.code == 0);
    CHECK(io::Json::parse(r.out)["order"] == 8);

    const auto table = temp_path("bad_table.json");
    write_file(table, "[[0,1],[1,1]]");
    auto bad = run({"group", "make", "--from-table", table.string()});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("cancellation") != std::string::npos);

    const auto good = temp_path("v4_table.json");
    write_file(good, "[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]");
    auto ok = run({"group", "make", "--from-table", good.string()});
    CHECK(ok.code == 0);
    CHECK(io::Json::parse(ok.out)["descriptor"] == "custom");

    // round trip through the CLI
    const auto file = temp_path("d4.json");
    write_file(file, r.out);
    auto again = run({"group", "make", "--group", file.string()});
    CHECK(again.out == r.out);
}

TEST_CASE("cli: usage errors") {
    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("missprob") != std::string::npos);
    CHECK(run({"missprob", "--group", "cyclic:3", "--bogus"}).code == 2);
    CHECK(run({"missprob", "--group", "cyclic:0", "--element", "0"}).code == 2);
    CHECK(run({"missprob", "--group", "cyclic:3", "--element", "0", "--mode", "product"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"census", "--group", "cyclic:31"}).code == 2);
}

TEST_CASE("cli: verify") {
    auto r = run({"verify", "--max-order", "12"});
    CHECK(r.code == 0);
    auto list = io::Json::parse(r.out);
    CHECK(!list.empty());
    for (const auto& c : list) CHECK(c["pass"].get<bool>());
}

TEST_CASE("cli: sampled output is reproducible and worker independent") {
    auto a = run({"sweep", "cyclic", "--from", "10", "--to", "20", "--trials", "500", "--seed", "5", "--workers", "1"});
    auto b = run({"sweep", "cyclic", "--from", "10", "--to", "20", "--trials", "500", "--seed", "5", "--workers", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, a.out.find('\n')) == io::kSweepCsvHeader);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 12);

    auto s1 = run({"sample", "--group", "dihedral:5", "--trials", "1000", "--format", "csv"});
    auto s2 = run({"sample", "--group", "dihedral:5", "--trials", "1000", "--format", "csv", "--workers", "3"});
    CHECK(s1.out == s2.out);

    auto census = run({"sweep", "dihedral", "--max-order", "12", "--workers", "2"});
    REQUIRE(census.code == 0);
    CHECK(census.out.substr(0, census.out.find('\n')) == io::kCensusCsvHeader);

    const auto out = temp_path("interval.json");
    auto i = run({"interval", "sample", "--n", "20", "--trials", "2000", "--out", out.string()});
    CHECK(i.code == 0);
    CHECK(i.out.empty());
    auto j = io::Json::parse(read_file(out));
    CHECK(j["trials"] == 2000);
    CHECK(j["rng_id"] == "splitmix64-per-trial-v1");
    CHECK(j["seed"] == kDefaultSeed);
}

TEST_CASE("cli: census") {
    auto r = run({"census", "--group", "dihedral:3"});
    REQUIRE(r.code == 0);
    auto j = io::Json::parse(r.out);
    CHECK(j["sum_dominant"] == 18);
    CHECK(j["diff_dominant"] == 0);
    bool witness = false;
    for (const auto& s : j["sum_dominant_examples"]) witness = witness || s == io::Json::array({"a", "b"});
    CHECK(witness);
}

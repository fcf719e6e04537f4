#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "leghopf_app/cli.hpp"

using nlohmann::json;

namespace {

struct Out {
    int code = 0;
    std::string out, err;
};

Out run(std::vector<std::string> args) {
    args.insert(args.begin(), "leghopf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Out r;
    r.code = leghopf::app::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

using Row = std::tuple<long long, long long, long long, long long, std::string>;

std::multiset<Row> rows_of(const std::string& text) {
    std::multiset<Row> out;
    const json j = json::parse(text);
    for (const auto& r : j["rows"])
        out.insert({r["t0"].get<long long>(), r["r0"].get<long long>(), r["t1"].get<long long>(),
                    r["r1"].get<long long>(), r["d3"].get<std::string>()});
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count and cfrac examples [known]") {
    auto r = run({"count", "--t0", "3", "--t1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    r = run({"count", "--t0", "1", "--t1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("integral") != std::string::npos);
    r = run({"cfrac", "-s", "-2/1"});
    CHECK(r.code == 0);
    CHECK(r.out == "[-2] N=2\n");
}

TEST_CASE("classify example [known]") {
    auto r = run({"classify", "--t0", "1", "--t1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,0,1,0) d3=1/2 exc/exc\n");
}

TEST_CASE("bad input exits with 2 and a JSON error [trivial]") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cfrac", "-s", "1/2"},
             {"cfrac", "-s", "1/0"},
             {"count", "--t0", "x", "--t1", "1"},
             {"twisting", "--t0", "1", "--t1", "1", "-n", "0"},
             {"family", "--id", "NOPE"},
             {"loose", "--t0", "0", "--r0", "1", "--t1", "0", "--r1", "1", "--d", "1"},
             {"invariants", "-f", "/nonexistent/diagram.json"},
             {"bogus"}}) {
        auto r = run(args);
        CAPTURE(args[0]);
        CHECK(r.code == 2);
        auto j = json::parse(r.err);
        CHECK(j.contains("error"));
        CHECK(j.contains("message"));
    }
}

TEST_CASE("json and tsv carry the same rows [trivial]") {
    auto js = run({"--format", "json", "classify", "--t0", "-2", "--t1", "3"});
    REQUIRE(js.code == 0);
    auto rows = rows_of(js.out);
    CHECK(rows.size() == 6);
    CHECK(json::parse(js.out)["notes"].size() == 1);
    auto tsv = run({"--format", "tsv", "classify", "--t0", "-2", "--t1", "3"});
    REQUIRE(tsv.code == 0);
    std::istringstream in(tsv.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("t0\tr0", 0) == 0);
    std::multiset<Row> from_tsv;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long t0, r0, t1, r1;
        std::string d3;
        ls >> t0 >> r0 >> t1 >> r1 >> d3;
        from_tsv.insert({t0, r0, t1, r1, d3});
    }
    CHECK(from_tsv == rows);
}

TEST_CASE("family emit round-trips through invariants [derived]") {
    const auto path = (std::filesystem::temp_directory_path() / "leghopf_cli_test_d3.json").string();
    auto e = run({"family", "--id", "D", "--n", "3", "-o", path});
    REQUIRE(e.code == 0);
    CHECK(e.out.find("OK") != std::string::npos);
    auto inv = run({"--format", "json", "invariants", "-f", path});
    std::remove(path.c_str());
    REQUIRE(inv.code == 0);
    auto j = json::parse(inv.out);
    CHECK(j["d3"] == "1/2");
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][0]["tb"] == 0);
    CHECK(j["components"][1]["tb"] == -1);
    CHECK(j["parity"] == "ok");
}

TEST_CASE("emit prints parseable JSON [trivial]") {
    auto e = run({"family", "--id", "C2_31", "--side", "L", "--emit"});
    REQUIRE(e.code == 0);
    auto j = json::parse(e.out);
    CHECK(j.contains("knots"));
    CHECK(j.contains("components"));
}

TEST_CASE("se table is the union of the exceptional cells [derived]") {
    auto t = run({"--format", "json", "table", "--which", "se", "--t-min", "-3", "--t-max", "3"});
    REQUIRE(t.code == 0);
    std::multiset<Row> unioned;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            auto c = run({"--format", "json", "classify", "--t0", std::to_string(a), "--t1", std::to_string(b),
                          "--case", "exceptional"});
            REQUIRE(c.code == 0);
            auto rows = rows_of(c.out);
            unioned.insert(rows.begin(), rows.end());
        }
    CHECK(rows_of(t.out) == unioned);
}

TEST_CASE("loose plan notes [known]") {
    auto r = run({"loose", "--t0", "-3", "--r0", "0", "--t1", "1", "--r1", "0", "--d", "-1/2", "--plan"});
    CHECK(r.code == 0);
    CHECK(r.out.find("L0 from (-1,0): stab+ stab-") != std::string::npos);
    CHECK(r.out.find("L1 from (-1,0): sumK10") != std::string::npos);
}

TEST_CASE("output is deterministic [trivial]") {
    const std::vector<std::string> args{"--format", "json", "table", "--which", "summary", "--t-min", "1", "--t-max", "5"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("selfcheck subset [trivial]") {
    auto r = run({"selfcheck", "--only", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

}

#include <doctest.h>

#include <filesystem>
#include <set>
#include <unistd.h>
#include <sstream>

#include <json.hpp>

#include "dbatk/cli.hpp"
#include "dbatk/concepts.hpp"
#include "dbatk/context_io.hpp"
#include "dbatk/dba_io.hpp"
#include "dbatk/topology.hpp"
#include "support.hpp"

using namespace dbatk;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("dbatk_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_context(const std::string& name, const FormalContext& k) {
    auto p = (scratch() / name).string();
    save_context(p, k);
    return p;
}

bool has_element(const nlohmann::json& elements, std::vector<std::string> ext, std::vector<std::string> in) {
    for (const auto& e : elements)
        if (e["extent"].get<std::vector<std::string>>() == ext && e["intent"].get<std::vector<std::string>>() == in)
            return true;
    return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate on Table 1") {
    auto r = run({"enumerate", "--kind", "oo-proto", fixtures::data_path("table1.cxt")});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "oo-proto");
    CHECK(has_element(j["elements"], {"q1", "q2", "q4"}, {"s3", "s7", "s10"}));
    CHECK(j["meet"].size() == j["elements"].size());
}

TEST_CASE("enumerate on a 1×1 empty context") {
    auto path = write_context("empty.cxt", fixtures::make_context(1, 1, {}));
    auto r = run({"enumerate", "--kind", "oo-semi", path});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["elements"].size() == 3);
    CHECK(has_element(j["elements"], {}, {}));
    CHECK(has_element(j["elements"], {}, {"m1"}));
    CHECK(has_element(j["elements"], {"g1"}, {"m1"}));
}

TEST_CASE("enumerate writes DOT") {
    auto path = write_context("diag.cxt", fixtures::make_context(2, 2, {{0, 0}, {1, 1}}));
    auto r = run({"enumerate", "--kind", "oo-proto", "--dot", path});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("digraph", 0) == 0);
    auto json_out = (scratch() / "diag.json").string();
    CHECK(run({"enumerate", "--kind", "oo-proto", "--dot", "--out", json_out, path}).code == kExitOk);
    CHECK(fs::exists(scratch() / "diag.dot"));
    CHECK(read_file((scratch() / "diag.dot").string()) == r.out);
    auto j = nlohmann::json::parse(read_file(json_out));
    CHECK(j["elements"].size() == j["meet"].size());
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({"enumerate", "--kind", "oo-proto", "/nonexistent/x.cxt"}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "bogus", fixtures::data_path("table1.cxt")}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "nope", fixtures::data_path("table1.cxt")}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "oo-proto", "--cap", "25", fixtures::data_path("table1.cxt")}).code ==
          kExitUsage);
    CHECK(run({}).code == kExitUsage);
    auto bad = (scratch() / "bad.cxt").string();
    write_file(bad, "B\n\n1\n1\ng\nm\nQ\n");
    auto r = run({"enumerate", "--kind", "semi", bad});
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("resource cap exits with 3") {
    auto big = write_context("big.cxt", fixtures::make_context(12, 12, {}));
    CHECK(run({"enumerate", "--kind", "oo-proto", big}).code == kExitCap);
}

TEST_CASE("verify reports") {
    auto path = write_context("small.cxt", fixtures::make_context(2, 2, {{0, 0}, {0, 1}, {1, 1}}));
    auto r = run({"verify", "--suite", "representation", "--algebra", "semi", path});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    for (const auto& rep : j) {
        CHECK(rep["verdict"] == true);
        CHECK(rep["counterexample"].is_null());
        CHECK(rep["elapsed_ms"] == 0);
        CHECK(rep["input"].get<std::string>().size() == 16);
    }
    CHECK(run({"verify", "--suite", "all", path}).code == kExitOk);
}

TEST_CASE("verify catches a corrupted dBa") {
    auto d = build_semi_dba(fixtures::make_context(2, 2, {{0, 1}, {1, 0}})).dba();
    auto j = dba_to_json(d);
    auto& row = j["meet"][0];
    row[1] = (row[1].get<int>() + 1) % static_cast<int>(d.size());
    auto path = (scratch() / "corrupted-dba.json").string();
    write_file(path, j.dump());
    auto r = run({"verify", "--suite", "axioms", path});
    CHECK(r.code == kExitVerificationFailed);
    auto reports = nlohmann::json::parse(r.out);
    bool named = false;
    for (const auto& rep : reports)
        if (rep["verdict"] == false && rep["counterexample"].is_string() &&
            rep["counterexample"].get<std::string>().find('(') != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("verify stone round trip") {
    auto ctx = fixtures::make_context(2, 3, {{0, 0}, {1, 1}, {1, 2}});
    auto path = (scratch() / "ctx.json").string();
    save_context(path, ctx);
    auto r = run({"verify", "--suite", "stone-roundtrip", "--discrete", path});
    CHECK(r.code == kExitOk);
    auto cts_path = (scratch() / "ex.json").string();
    save_cts(cts_path, fixtures::constant_column_cts(2, 3, {0, 2}));
    CHECK(run({"verify", "--suite", "stone-roundtrip", cts_path}).code == kExitOk);
    save_cts(cts_path, fixtures::example_cts());
    CHECK(run({"verify", "--suite", "stone-roundtrip", cts_path}).code == kExitVerificationFailed);
}

TEST_CASE("verify writes a summary when --out is given") {
    auto path = write_context("tiny.cxt", fixtures::make_context(1, 2, {{0, 1}}));
    auto out = (scratch() / "rep.json").string();
    auto r = run({"verify", "--suite", "axioms", "--out", out, path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(nlohmann::json::parse(read_file(out)).is_array());
}

TEST_CASE("random instances are deterministic") {
    auto a = run({"random", "--seed", "42", "-g", "3", "-m", "3"});
    auto b = run({"random", "--seed", "42", "-g", "3", "-m", "3"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    auto k = parse_cxt(a.out);
    CHECK(k.num_objects() == 3);
    CHECK(k.num_attributes() == 3);
    CHECK(k.name() == "random seed=42");

    auto f1 = (scratch() / "r1.json").string(), f2 = (scratch() / "r2.json").string();
    CHECK(run({"random", "--seed", "42", "--cts", "--out", f1}).code == kExitOk);
    CHECK(run({"random", "--seed", "42", "--cts", "--out", f2}).code == kExitOk);
    CHECK(read_file(f1) == read_file(f2));
    CHECK_NOTHROW(load_cts(f1));

    // the incidence, not just the name, changes with the seed
    std::set<std::string> seen;
    for (int s = 43; s < 143; ++s) {
        auto c = parse_cxt(run({"random", "--seed", std::to_string(s)}).out);
        seen.insert(format_cxt(FormalContext(c.objects(), c.attributes(), c.incidence_matrix(), "")));
    }
    CHECK(seen.size() > 50);
    CHECK(run({"random", "-g", "21"}).code == kExitUsage);
}

}  // TEST_SUITE

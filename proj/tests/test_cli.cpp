#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ncproj/cli.hpp"
#include "ncproj/dsl.hpp"
#include "ncproj/report.hpp"
#include "support.hpp"

using namespace ncproj;

namespace {

std::string scenario_dir() {
    const char* d = std::getenv("NCPROJ_SCENARIOS");
    REQUIRE(d != nullptr);
    return d;
}

std::string scenario(const std::string& name) { return scenario_dir() + "/" + name; }

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json body_of(const RunResult& r) { return report_json(parse_report(r.out)); }

} // namespace

TEST_CASE("report emit and parse round trip") {
    Report r;
    r.command = "ncproj hilbert a.alg -D 3";
    r.seed = 42;
    r.verdict = "pass";
    r.body["dims"] = Json::array({1, 2, 3});
    Json rows = Json::array();
    rows.push_back(Json{{"degree", 0}, {"value", 1}});
    rows.push_back(Json{{"degree", 1}, {"value", "1/2"}});
    r.body["table"] = rows;

    Report back = parse_report(emit_report(r, ReportFormat::Json));
    CHECK(back == r);

    // a fresh report is still a valid document with a verdict
    Report empty;
    Report eb = parse_report(emit_report(empty, ReportFormat::Json));
    CHECK(eb.verdict == "pass");
    CHECK(eb.body.empty());

    // the csv rendering of a table keeps one line per row
    std::string csv = emit_report(r, ReportFormat::Csv);
    std::istringstream is(csv);
    std::string line;
    int in_table = -1, rows_seen = 0;
    while (std::getline(is, line)) {
        if (line.rfind("table,table,", 0) == 0) {
            in_table = 0;
            continue;
        }
        if (in_table >= 0) ++in_table;
    }
    (void)rows_seen;
    CHECK(in_table == 3); // header plus two rows, nothing after

    CHECK_THROWS_AS(parse_report("{"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"schema\": 2}"), Error);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
}

TEST_CASE("hilbert command") {
    RunResult r = run({"hilbert", scenario("qplane.alg"), "-D", "8", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    Json doc = body_of(r);
    CHECK(doc["schema"] == 1);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["field"] == "Q");
    std::vector<int> dims = doc["dims"].get<std::vector<int>>();
    REQUIRE(dims.size() == 9);
    for (int e = 0; e <= 8; ++e) CHECK(dims[(std::size_t)e] == e + 1);
    std::string cmd = doc["command"].get<std::string>();
    CHECK(cmd.rfind("ncproj hilbert", 0) == 0);
}

TEST_CASE("exit codes split usage, failure and success") {
    RunResult missing = run({"hilbert", scenario("nope.alg"), "-D", "4"});
    CHECK(missing.code == 2);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());

    RunResult noflag = run({"hilbert", scenario("qplane.alg")});
    CHECK(noflag.code == 2);

    RunResult badsub = run({"frobnicate"});
    CHECK(badsub.code == 2);

    RunResult badfmt = run({"hilbert", scenario("qplane.alg"), "-D", "4", "--format", "yaml"});
    CHECK(badfmt.code == 2);

    // an honest negative answer is a property failure, not an error
    RunResult unequal = run({"tails-equal", scenario("qplane.alg"), "-D", "6", "--left", "A",
                             "--right", "A(1)", "-s", "1"});
    CHECK(unequal.code == 1);
    CHECK(unequal.out.find("verdict: fail") != std::string::npos);

    // a window that cannot certify the request surfaces the degree
    RunResult window = run({"check-lemma-i", scenario("wtd12.alg"), "-n", "2", "-D", "3"});
    CHECK(window.code == 1);
    CHECK(window.err.find("WindowInsufficient") != std::string::npos);

    setenv("NCPROJ_THREADS", "zero", 1);
    RunResult badthreads = run({"hilbert", scenario("qplane.alg"), "-D", "4"});
    unsetenv("NCPROJ_THREADS");
    CHECK(badthreads.code == 2);

    setenv("NCPROJ_THREADS", "3", 1);
    RunResult okthreads = run({"hilbert", scenario("qplane.alg"), "-D", "4"});
    unsetenv("NCPROJ_THREADS");
    CHECK(okthreads.code == 0);
}

TEST_CASE("worked examples through the command line") {
    // the odd part generates (x), the even part is the whole ring
    RunResult fam = run({"ideal-family", scenario("wtd12.alg"), "-n", "2", "-D", "12",
                         "--format", "json"});
    REQUIRE(fam.code == 0);
    Json doc = body_of(fam);
    CHECK(doc["components"][0]["gens"] == Json::array({"x"}));
    CHECK(doc["components"][1]["gens"] == Json::array({"1"}));
    CHECK(doc["intersection"]["twosided"] == true);
    CHECK(doc["intersection"]["dims"][0] == 0);
    CHECK(doc["intersection"]["dims"][1] == 1);

    // the pushforward of the shifted point module vanishes
    RunResult ver = run({"verevkin", scenario("wtd12.alg"), "-n", "2", "-D", "8", "--module",
                         "A/(x)(1)", "--format", "json"});
    REQUIRE(ver.code == 0);
    Json vd = body_of(ver);
    CHECK(vd["cokernel"]["dims"] == Json::array({1, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(vd["kernel"]["annihilated"] == true);

    RunResult mv = run({"min-veronese", scenario("wtd23.alg"), "--max", "8", "-D", "18",
                        "--format", "json"});
    REQUIRE(mv.code == 0);
    CHECK(body_of(mv)["d"] == 6);

    // skew plane: (x+y)A is one-sided only, and the witness parses back
    RunResult ts = run({"largest-twosided", scenario("qplane.alg"), "-D", "8", "--gen", "x+y",
                        "--format", "json"});
    REQUIRE(ts.code == 0);
    Json td = body_of(ts);
    CHECK(td["ideal"]["twosided"] == false);
    auto Q = testsupport::algebra_from(testsupport::qplane(), 8);
    FreePoly w = parse_poly(td["ideal"]["witness"]["product"].get<std::string>(), Q->table());
    CHECK(w.degree() == 2);
    CHECK(w.to_string() == td["ideal"]["witness"]["product"].get<std::string>());

    RunResult comm = run({"largest-twosided", scenario("qplane_q1.alg"), "-D", "8", "--gen",
                          "x+y", "--format", "json"});
    REQUIRE(comm.code == 0);
    CHECK(body_of(comm)["ideal"]["twosided"] == true);
}

TEST_CASE("module expressions cover sums, quotients and shifts") {
    RunResult ok = run({"projector", scenario("kx2.alg"), "-n", "2", "-D", "8", "--module",
                        "A/(x*x)(2)+m", "--format", "json"});
    CHECK(ok.code == 0);

    RunResult bad = run({"projector", scenario("kx2.alg"), "-n", "2", "-D", "8", "--module",
                         "B(1)"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("module expression") != std::string::npos);

    RunResult lopsided = run({"projector", scenario("kx2.alg"), "-n", "2", "-D", "8",
                              "--module", "A((2)"});
    CHECK(lopsided.code == 1);
}

TEST_CASE("morphism and ore files validate their maps") {
    std::string dir = scenario_dir();

    {
        std::ofstream f("cli_tmp_partial.map");
        f << "source " << dir << "/free2.alg\ntarget " << dir << "/qplane.alg\nmap x -> x\n";
    }
    RunResult partial = run({"check-affine", "cli_tmp_partial.map", "-D", "4"});
    CHECK(partial.code == 1);
    CHECK(partial.err.find("no image") != std::string::npos);

    {
        std::ofstream f("cli_tmp_unknown.map");
        f << "source " << dir << "/ky.alg\ntarget " << dir << "/qplane.alg\nmap y -> y\nmap q -> x\n";
    }
    RunResult unknown = run({"check-affine", "cli_tmp_unknown.map", "-D", "4"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("not a source generator") != std::string::npos);

    {
        std::ofstream f("cli_tmp_skew.ore");
        f << "base " << dir << "/qplane.alg\ntweight 1\nder x -> x*x\n";
    }
    RunResult notder = run({"ore-extend", "cli_tmp_skew.ore", "-D", "6"});
    CHECK(notder.code == 1);
    CHECK(notder.err.find("NotADerivation") != std::string::npos);

    std::remove("cli_tmp_partial.map");
    std::remove("cli_tmp_unknown.map");
    std::remove("cli_tmp_skew.ore");
}

TEST_CASE("scenario suite is deterministic") {
    std::ifstream suite(scenario("suite.txt"));
    REQUIRE(suite.good());
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(suite, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::vector<std::string> args;
        std::string tok;
        while (is >> tok) {
            auto dot = tok.rfind('.');
            if (dot != std::string::npos &&
                (tok.substr(dot) == ".alg" || tok.substr(dot) == ".map" || tok.substr(dot) == ".ore"))
                tok = scenario(tok);
            args.push_back(tok);
        }
        lines.push_back(std::move(args));
    }
    REQUIRE(lines.size() >= 25);

    auto run_all = [&]() {
        std::string all;
        for (const auto& args : lines) {
            RunResult r = run(args);
            CHECK(r.code == 0);
            all += r.out;
        }
        return all;
    };
    std::string first = run_all();
    std::string second = run_all();
    CHECK(first == second);
    CHECK(first.size() > 1000);
}

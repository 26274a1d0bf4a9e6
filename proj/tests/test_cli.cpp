#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hg/cli.hpp"

namespace {

struct RunResult {
    int exit;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hg::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("hgcli_" + name);
    std::ofstream f(p);
    f << content;
    return p;
}

const std::string kTriangle = "hg 3 3\n1 2\n2 3\n1 3\n";

}  // namespace

TEST_CASE("decide: YES prints the witness, exit 0") {
    auto in = write_temp("tri.hg", kTriangle);
    auto r = run_cli({"decide", "--mode", "tour", "--spanning", in.string()});
    CHECK(r.exit == 0);
    CHECK(r.out == "YES\n1 e1 2 e2 3 e3\n");
}

TEST_CASE("decide: NO carries a reason, exit 1") {
    // vertex 4 of degree 1
    auto in = write_temp("pendant.hg", "hg 4 3\n1 2\n2 3\n1 3 4\n");
    auto r = run_cli({"decide", "--spanning", in.string()});
    CHECK(r.exit == 1);
    CHECK(r.out == "NO\nreason: necessary condition (ii)\n");
    // without --spanning the family exists
    CHECK(run_cli({"decide", in.string()}).exit == 0);
}

TEST_CASE("decide: --direct and --reduce agree") {
    auto in = write_temp("two.hg", "hg 5 6\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n");
    for (std::string mode : {"family", "tour"}) {
        auto direct = run_cli({"decide", "--mode", mode, "--spanning", "--direct",
                               in.string()});
        auto reduced = run_cli({"decide", "--mode", mode, "--spanning", "--reduce",
                                in.string()});
        CHECK(direct.exit == reduced.exit);
        CHECK(direct.exit == 0);
    }
    // identical invocations are byte-identical
    auto a = run_cli({"decide", "--mode", "tour", "--spanning", in.string()});
    auto b = run_cli({"decide", "--mode", "tour", "--spanning", in.string()});
    CHECK(a.out == b.out);
}

TEST_CASE("decide: flag misuse exits 2") {
    auto in = write_temp("tri2.hg", kTriangle);
    CHECK(run_cli({"decide", "--reduce", in.string()}).exit == 2);
    CHECK(run_cli({"decide", "--direct", "--reduce", "--spanning", in.string()}).exit ==
          2);
    CHECK(run_cli({"decide", "--frobnicate", in.string()}).exit == 2);
    CHECK(run_cli({"decide"}).exit == 2);
    CHECK(run_cli({"decide", "/no/such/file.hg"}).exit == 2);
}

TEST_CASE("decide: parse errors report the line") {
    auto in = write_temp("bad.hg", "hg 3 3\n1 2\n2 9\n1 3\n");
    auto r = run_cli({"decide", in.string()});
    CHECK(r.exit == 2);
    CHECK(r.err.find("parse error at line 3") != std::string::npos);
}

TEST_CASE("decide: witness file and verify round-trip") {
    auto in = write_temp("tri3.hg", kTriangle);
    auto wpath = std::filesystem::temp_directory_path() / "hgcli_tri3.witness";
    auto r = run_cli({"decide", "--mode", "tour", "--spanning", "--witness",
                      wpath.string(), in.string()});
    CHECK(r.exit == 0);
    CHECK(r.out == "YES\n");
    auto v = run_cli({"verify", "--mode", "tour", "--spanning", "--witness",
                      wpath.string(), in.string()});
    CHECK(v.exit == 0);
    CHECK(v.out == "ok\n");

    auto bad = write_temp("tri3.bad.witness", "1 e1 2 e2 3\n");
    CHECK(run_cli({"verify", "--witness", bad.string(), in.string()}).exit == 2);
    auto wrong = write_temp("tri3.wrong.witness", "1 e1 2 e2 3 e2\n");
    auto w = run_cli({"verify", "--witness", wrong.string(), in.string()});
    CHECK(w.exit == 1);
    CHECK(w.out.find("violation:") == 0);
}

TEST_CASE("cuts lists annotated cuts, requires connectivity") {
    auto in = write_temp("glued.hg", "hg 5 6\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n");
    auto r = run_cli({"cuts", in.string()});
    CHECK(r.exit == 0);
    CHECK(r.out.find("S={3} components=2 minimal") != std::string::npos);
    auto disc = write_temp("disc.hg", "hg 4 2\n1 2\n3 4\n");
    CHECK(run_cli({"cuts", disc.string()}).exit == 2);
}

TEST_CASE("reduce prints a trace and the verdict") {
    auto in = write_temp("glued2.hg", "hg 5 6\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n");
    auto r = run_cli({"reduce", "--mode", "tour", in.string()});
    CHECK(r.exit == 0);
    CHECK(r.out.find("cut-vertex S={3}") != std::string::npos);
    CHECK(r.out.find("YES\n") != std::string::npos);

    auto no = write_temp("bridge.hg",
                         "hg 7 8\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 7\n4 7\n");
    auto rn = run_cli({"reduce", no.string()});
    CHECK(rn.exit == 1);
    CHECK(rn.out.find("NO\n") != std::string::npos);
}

TEST_CASE("gen is reproducible and --expect annotates the verdicts") {
    auto a = run_cli({"gen", "--seed", "5"});
    auto b = run_cli({"gen", "--seed", "5"});
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("hg ", 0) == 0);

    auto e = run_cli({"gen", "--seed", "5", "--expect"});
    CHECK(e.out.rfind("# expect family=", 0) == 0);
    CHECK(run_cli({"gen", "--structure", "nonsense"}).exit == 2);
    // impossible parameter combination
    CHECK(run_cli({"gen", "--size-min", "9", "--size-max", "9"}).exit == 2);
}

TEST_CASE("oracle subcommand decides small inputs") {
    auto in = write_temp("tri4.hg", kTriangle);
    CHECK(run_cli({"oracle", "--mode", "tour", "--spanning", in.string()}).exit == 0);
    auto twin = write_temp("twin.hg", "hg 3 2\n1 2 3\n1 2 3\n");
    CHECK(run_cli({"oracle", "--spanning", twin.string()}).exit == 1);
}

TEST_CASE("help exits 0, missing subcommand exits 2") {
    CHECK(run_cli({"--help"}).exit == 0);
    CHECK(run_cli({}).exit == 2);
}

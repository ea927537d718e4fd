#include <doctest.h>

#include <sstream>

#include "povs/cli.hpp"
#include "povs/json_io.hpp"

using namespace povs;

namespace {

CommandResult cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    return run_cli(args, in);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("command examples") {
    auto q = cli({"qe", "--theory", "povs", "E x1. (0 < x1 & x1 < x2 & Q(x1))"});
    CHECK(q.exit_code == 0);
    CHECK(q.out == "0 < x2\n");
    auto d = cli({"decide", "--theory", "povs", "E x1. (Q(x1) & !Q(x1))"});
    CHECK(d.exit_code == 0);
    CHECK(d.out == "false\n");
    auto m = cli({"measure", "Q(x1)"});
    CHECK(m.exit_code == 0);
    CHECK(m.out == "0\n");
}

TEST_CASE("other commands") {
    CHECK(cli({"measure", "x1 > r2 - 1 & x1 < 1", "--precision", "6"}).out == "2 - r2\n~ 0.585786\n");
    CHECK(cli({"small", "Q(x1) | x1 = r2"}).out == "true\n");
    CHECK(cli({"generic", "u1 != pi(r2)"}).out == "true\n");
    CHECK(cli({"split", "Q(2*x1 - x2)"}).out == "home: none\nquotient: 2*pi(x1) = pi(x2)\n");
    CHECK(cli({"decompose", "x1 = 0"}).out == "points: {0}\n");
    CHECK(cli({"decompose", "x1 < x2", "--assign", "x2=r3"}).out == "points: {}\npiece: (-inf, r3) cofinite {}\n");
    CHECK(cli({"code-fn", "x1 = 1 & x2 = 5"}).out == "point: (1, 5)\n");
    CHECK(cli({"qe"}, "E x1. pi(x1) = u1").out == "true\n");
    auto v = cli({"qe", "--verbose", "x1 <= 2"});
    CHECK(v.err.find("input: x1 < 2 | x1 = 2") != std::string::npos);
}

TEST_CASE("json output for every command") {
    const std::vector<std::vector<std::string>> runs = {
        {"qe", "E x1. x1 < x2"},        {"decide", "E x1. Q(x1)"}, {"decompose", "x1 > 0 & !Q(x1)"},
        {"measure", "x1 < r2 - 1"},      {"small", "Q(x1)"},        {"generic", "u1 = u1"},
        {"code-set", "x1 = 0 | Q(x1)"},  {"code-fn", "x2 = 2*x1"},  {"split", "pi(x1) = u1"},
        {"oracle-check", "--count", "5"}};
    for (auto args : runs) {
        args.push_back("--format");
        args.push_back("json");
        auto r = cli(args);
        INFO(args.front());
        REQUIRE(r.exit_code == 0);
        CHECK(Json::accept(r.out));
    }
    Json m = Json::parse(cli({"measure", "x1 < 1/2", "--format", "json"}).out);
    CHECK(m.at("value") == Json::parse(R"({"0": "1/2"})"));
}

TEST_CASE("exit codes") {
    CHECK(cli({"qe", "x1 <"}).exit_code == 2);
    CHECK(cli({"qe", "x1 = u1"}).exit_code == 2);
    CHECK(cli({"qe", "--theory", "ovs", "Q(x1)"}).exit_code == 2);
    CHECK(cli({"qe", "--model-dim", "1", "x1 < 0"}).exit_code == 2);
    CHECK(cli({"qe", "x1 < r5"}).exit_code == 2);
    CHECK(cli({"qe", "--model-dim", "4", "x1 < r5"}).exit_code == 0);
    CHECK(cli({"bogus", "x1 < 0"}).exit_code == 2);
    CHECK(cli({"decide", "x1 < 0"}).exit_code == 3);
    CHECK(cli({"decompose", "x1 < x2"}).exit_code == 3);
    CHECK(cli({"code-fn", "x2 = x1 | x2 = 0"}).exit_code == 3);
    CHECK(cli({"split", "x1 <= 0"}).exit_code == 3);
    auto e = cli({"qe", "x1 < x2 &"});
    CHECK(e.err.find("parse error at 9") != std::string::npos);
}

TEST_CASE("oracle-check is reproducible") {
    auto a = cli({"oracle-check", "--seed", "17", "--count", "40", "--format", "json"});
    auto b = cli({"oracle-check", "--seed", "17", "--count", "40", "--format", "json"});
    auto c = cli({"oracle-check", "--seed", "18", "--count", "40", "--format", "json"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    CHECK(j.at("agree") == 40);
    CHECK(j.at("disagree") == 0);
    CHECK(c.out != a.out);
    CHECK(cli({"oracle-check", "--theory", "povs-prec", "--count", "30"}).exit_code == 0);
    CHECK(cli({"oracle-check", "--theory", "ovs", "--count", "30"}).exit_code == 0);
}

} // TEST_SUITE

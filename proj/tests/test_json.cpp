#include <doctest.h>

#include "povs/json_io.hpp"
#include "povs/parser.hpp"
#include "povs/random_formulas.hpp"

using namespace povs;

namespace {

const Variable x1 = Variable::home(1), x2 = Variable::home(2);

bool is_melem(const Json& j) {
    if (!j.is_object())
        return false;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string() || k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
            return false;
        Rational::parse(v.get<std::string>());
    }
    return true;
}

bool is_endpoint(const Json& j) { return j == "-inf" || j == "+inf" || is_melem(j); }

bool is_piece(const Json& p) {
    if (!p.is_object() || p.size() != 4 || !is_endpoint(p.at("a")) || !is_endpoint(p.at("b")))
        return false;
    if (p.at("polarity") != "finite" && p.at("polarity") != "cofinite")
        return false;
    for (const auto& w : p.at("cosets"))
        if (!is_melem(w) || w.contains("0"))
            return false;
    return true;
}

bool is_decomposition(const Json& j) {
    if (!j.is_object() || j.size() != 2 || !j.at("points").is_array() || !j.at("pieces").is_array())
        return false;
    for (const auto& p : j.at("points"))
        if (!is_melem(p))
            return false;
    for (const auto& p : j.at("pieces"))
        if (!is_piece(p))
            return false;
    return true;
}

} // namespace

TEST_SUITE("json") {

TEST_CASE("elements are keyed by radicand") {
    Json j = to_json(parse_element("3/2 + 1/3*r2 - r5"));
    CHECK(j == Json::parse(R"({"0": "3/2", "2": "1/3", "5": "-1"})"));
    CHECK(element_from_json(j) == parse_element("3/2 + 1/3*r2 - r5"));
    CHECK(to_json(project(parse_element("7 + r3"))) == Json::parse(R"({"3": "1"})"));
    CHECK(to_json(ModelElement()) == Json::object());
}

TEST_CASE("decomposition schema and round trip") {
    FormulaGenerator g(81);
    for (int i = 0; i < 100; ++i) {
        Decomposition d = decompose(g.unary(x1, 5), x1);
        Json j = to_json(d);
        REQUIRE(is_decomposition(j));
        REQUIRE(decomposition_from_json(Json::parse(j.dump())) == d);
    }
    Json q = to_json(decompose(parse("Q(x1)", TheoryMode::POVS), x1));
    CHECK(q == Json::parse(R"({"points": [], "pieces": [{"a": "-inf", "b": "+inf", "polarity": "finite", "cosets": [{}]}]})"));
}

TEST_CASE("code and report schemas") {
    Json c = to_json(code_unary_set(parse("x1 = 1 | Q(x1)", TheoryMode::POVS), x1));
    CHECK(c.at("frontier").is_array());
    for (const auto& p : c.at("pieces"))
        CHECK(is_piece(p));
    Json f = to_json(code_function(parse("x1 = 1 & x2 = 5 | x1 > 2 & x2 = 3*x1", TheoryMode::POVS), x1, x2));
    REQUIRE(f.at("exceptional").size() == 1);
    CHECK(f.at("exceptional")[0] == Json::parse(R"({"x": {"0": "1"}, "y": {"0": "5"}})"));
    REQUIRE(f.at("pieces").size() == 1);
    CHECK(f.at("pieces")[0].at("slope") == "3");

    std::vector<Assignment> params(1);
    params[0].set(x2, ModelElement(Rational(1, 4)));
    Json r = to_json(bucket_partition(parse("0 < x1 & x1 < x2", TheoryMode::POVS), x1, params, 10));
    CHECK(r == Json::parse(R"({"k": 10, "assignments": [{"params": {"x2": {"0": "1/4"}}, "bucket": 3, "mu": {"0": "1/4"}}]})"));
}

} // TEST_SUITE

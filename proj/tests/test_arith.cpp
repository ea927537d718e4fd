#include <doctest.h>

#include "povs/errors.hpp"
#include "povs/parser.hpp"
#include "povs/random_formulas.hpp"
#include "support.hpp"

using namespace povs;

namespace {

ModelElement el(const char* s) { return parse_element(s); }

Ordering sign_to_ordering(int s) { return s < 0 ? Ordering::Less : s == 0 ? Ordering::Equal : Ordering::Greater; }

} // namespace

TEST_SUITE("arith") {

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
}

TEST_CASE("element examples") {
    CHECK(compare(el("3/2"), el("r2")) == Ordering::Greater);
    CHECK(compare(el("r2 + r3"), el("r2 + r3")) == Ordering::Equal);
    CHECK(compare(el("r2 + r3"), el("7/2")) == Ordering::Less);
    CHECK(el("3/2 + 1/3*r2 - r5").str() == "3/2 + 1/3*r2 - r5");
    CHECK(el("r2 - r2").is_zero());
    CHECK(project(el("2/3 + r2")) == project(el("r2")));
    CHECK(project(el("5/7")).is_zero());
    CHECK(project(el("5/7")).str() == "0_Q");
}

TEST_CASE("hard signs near cancellation") {
    // 5 + 2*sqrt6 = (sqrt2 + sqrt3)^2, so sqrt2 + sqrt3 - 3.1462643699 is tiny.
    CHECK(el("r2 + r3 - 31462643699/10000000000").sign() > 0);
    CHECK(el("r2 + r3 - 31462643700/10000000000").sign() < 0);
    // Continued-fraction convergents of sqrt 2 alternate around it.
    CHECK(el("r2 - 99/70").sign() < 0);
    CHECK(el("r2 - 577/408").sign() < 0);
    CHECK(el("r2 - 665857/470832").sign() < 0);
    CHECK(el("r2 - 275807/195025").sign() > 0);
    CHECK(el("r2 + r3 + r5 - r7 - 4").sign() == test::mpf_sign(el("r2 + r3 + r5 - r7 - 4")));
}

TEST_CASE("sign agrees with a high-precision float oracle") {
    FormulaGenerator g(11, 5);
    for (int i = 0; i < 10000; ++i) {
        ModelElement a = g.element(), b = g.element();
        ModelElement d = a - b;
        INFO(a.str(), " vs ", b.str());
        REQUIRE(d.sign() == test::mpf_sign(d));
        REQUIRE(compare(a, b) == sign_to_ordering(test::mpf_sign(d)));
    }
}

TEST_CASE("compare is a total order compatible with + and positive scaling") {
    FormulaGenerator g(12);
    for (int i = 0; i < 2000; ++i) {
        ModelElement a = g.element(), b = g.element(), c = g.element();
        Rational s(g.uniform(1, 9), g.uniform(1, 9));
        if (less(a, b) && less(b, c))
            REQUIRE(less(a, c));
        REQUIRE((compare(a, b) == Ordering::Equal) == (a == b));
        REQUIRE(compare(a, b) == compare(a + c, b + c));
        REQUIRE(compare(a, b) == compare(a * s, b * s));
        REQUIRE(less(a, b) != (less(b, a) || a == b));
    }
}

TEST_CASE("decimal expansion") {
    CHECK(el("r2").decimal(10) == "1.4142135624");
    CHECK(el("-1/3").decimal(5) == "-0.33333");
    CHECK(el("2 - r2").decimal(8) == "0.58578644");
}

TEST_CASE("project is linear with kernel Q") {
    FormulaGenerator g(13);
    for (int i = 0; i < 1000; ++i) {
        ModelElement a = g.element(), b = g.element();
        Rational s = g.small_rational(), t = g.small_rational();
        REQUIRE(project(a * s + b * t) == project(a) * s + project(b) * t);
        REQUIRE(project(a).is_zero() == a.is_rational());
        REQUIRE(project(project(a).section()) == project(a));
    }
}

TEST_CASE("quotient order is lexicographic, dense and without endpoints") {
    QuotientElement r2 = project(el("r2")), r3 = project(el("r3"));
    CHECK(quotient_compare(r3, r2) == Ordering::Less);
    CHECK(quotient_compare(r2 - r3 * Rational(1000), QuotientElement()) == Ordering::Greater);
    FormulaGenerator g(14);
    for (int i = 0; i < 2000; ++i) {
        QuotientElement a = g.quotient_element(), b = g.quotient_element(), c = g.quotient_element();
        if (quotient_compare(a, b) == Ordering::Less) {
            QuotientElement mid = (a + b) * Rational(1, 2);
            REQUIRE(quotient_compare(a, mid) == Ordering::Less);
            REQUIRE(quotient_compare(mid, b) == Ordering::Less);
        }
        // No endpoints, in every direction of the basis.
        for (int k = 1; k < g.model_dim(); ++k) {
            QuotientElement e = project(ModelElement::sqrt_prime(k));
            REQUIRE(quotient_compare(a - e, a) == Ordering::Less);
            REQUIRE(quotient_compare(a, a + e) == Ordering::Less);
        }
        // Compatible with the vector structure.
        REQUIRE(quotient_compare(a, b) == quotient_compare(a + c, b + c));
        REQUIRE(quotient_compare(a, b) == quotient_compare(b * Rational(-1), a * Rational(-1)));
    }
}

TEST_CASE("rational_between") {
    auto q = rational_between(el("r2"), el("r2 + 1/1000000"));
    CHECK(less(el("r2"), ModelElement(q)));
    CHECK(less(ModelElement(q), el("r2 + 1/1000000")));
    CHECK(less(el("-r3"), ModelElement(rational_between(el("-r3"), std::nullopt))));
    CHECK(less(ModelElement(rational_between(std::nullopt, el("-r3"))), el("-r3")));
}

} // TEST_SUITE

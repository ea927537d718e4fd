#include <doctest.h>

#include "povs/errors.hpp"
#include "povs/parser.hpp"
#include "povs/qe.hpp"
#include "povs/random_formulas.hpp"
#include "povs/reference_model.hpp"

using namespace povs;

namespace {

Formula P(const char* s, TheoryMode m = TheoryMode::POVS) { return parse(s, m); }

const Variable x1 = Variable::home(1), x2 = Variable::home(2), x3 = Variable::home(3);
const Variable u1 = Variable::quot(1);

bool has_only_literals(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Atom: return true;
    case FormulaKind::Not: return f.children().front().kind() == FormulaKind::Atom;
    case FormulaKind::And:
    case FormulaKind::Or:
        for (const auto& c : f.children())
            if (!has_only_literals(c))
                return false;
        return true;
    default: return false;
    }
}

bool is_dnf(const Formula& f) {
    auto conj_of_literals = [](const Formula& c) {
        if (c.kind() != FormulaKind::And)
            return has_only_literals(c) && c.kind() != FormulaKind::Or;
        for (const auto& l : c.children())
            if (l.kind() != FormulaKind::Atom && l.kind() != FormulaKind::Not)
                return false;
        return has_only_literals(c);
    };
    if (f.kind() != FormulaKind::Or)
        return conj_of_literals(f);
    for (const auto& c : f.children())
        if (!conj_of_literals(c))
            return false;
    return true;
}

} // namespace

TEST_SUITE("formula") {

TEST_CASE("parse and render") {
    CHECK(P("x1 < x2").str() == "x1 < x2");
    CHECK(P("Q(x2 + 1)").str() == "Q(x2 + 1)");
    CHECK(P("pi(x1) = u1").str() == "pi(x1) = u1");
    CHECK(P("2*x1 - x2 + 3/2 < r2").str() == P(P("2*x1 - x2 + 3/2 < r2").str().c_str()).str());
    CHECK(P("x1 != 0").kind() == FormulaKind::Not);
    CHECK(P("x1 <= x2").kind() == FormulaKind::Or);
    CHECK(P("true").is_true());
    CHECK(P("E x1 x2. x1 < x2").str() == P("E x1. E x2. x1 < x2").str());
    CHECK(P("pi(x1) preceq u1", TheoryMode::POVS_PREC).kind() == FormulaKind::Or);
}

TEST_CASE("implication and biconditional are desugared") {
    Formula f = P("Q(x1) -> x1 < 0");
    CHECK(f.kind() == FormulaKind::Or);
    Formula g = P("Q(x1) <-> x1 < 0");
    Assignment a;
    a.set(x1, ModelElement(Rational(-1)));
    CHECK(eval(g, a));
    a.set(x1, ModelElement(Rational(1)));
    CHECK(!eval(g, a));
}

TEST_CASE("sort and mode errors") {
    CHECK_THROWS_AS(P("x1 = u1"), SortError);
    CHECK_THROWS_AS(P("u1 < u2"), SortError);
    CHECK_THROWS_AS(P("Q(u1)"), SortError);
    CHECK_THROWS_AS(P("Q(x1)", TheoryMode::OVS), ModeError);
    CHECK_THROWS_AS(P("pi(x1) = u1", TheoryMode::OVS), ModeError);
    CHECK_THROWS_AS(P("pi(x1) prec u1"), ModeError);
    CHECK_THROWS_AS(P("x1 prec x2", TheoryMode::POVS_PREC), SortError);
    CHECK_THROWS_AS(P("x1 < r4"), ParseError);
    CHECK_THROWS_AS(P("x1 <"), ParseError);
    CHECK_THROWS_AS(P("(x1 < x2"), ParseError);
    try {
        P("x1 < x2 &");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("nnf and dnf examples") {
    Formula nn = to_nnf(P("!(x1 < 0 & Q(x1))"));
    CHECK(nn.kind() == FormulaKind::Or);
    CHECK(nn.str() == "!(x1 < 0) | !Q(x1)");
    CHECK(to_dnf(P("Q(x1)")).str() == "Q(x1)");
    Formula d = to_dnf(P("(x1 < 0 | Q(x1)) & x2 = 1"));
    CHECK(d.kind() == FormulaKind::Or);
    CHECK(d.children().size() == 2);
    CHECK_THROWS_AS(to_nnf(P("E x1. x1 < x2")), QuantifiedInputError);
}

TEST_CASE("to_dnf preserves truth pointwise") {
    FormulaGenerator g(21);
    for (int i = 0; i < 300; ++i) {
        Formula f = g.unary(x1, 5);
        Formula d = to_dnf(f);
        REQUIRE(is_dnf(d));
        for (int j = 0; j < 20; ++j) {
            Assignment a = g.assignment({x1});
            REQUIRE(eval(f, a) == eval(d, a));
        }
    }
}

TEST_CASE("render then parse is the identity up to normal form") {
    FormulaGenerator g(22);
    for (int i = 0; i < 300; ++i) {
        TheoryMode mode = i % 3 == 0 ? TheoryMode::POVS_PREC : TheoryMode::POVS;
        Variable v = g.coin() ? x1 : u1;
        Formula f = Formula::exists(v, Formula::from_conjunction(g.conjunction(mode, v, {x2, x3}, {Variable::quot(2)})));
        Formula back = parse(f.str(), mode);
        REQUIRE(back.str() == f.str());
        Formula n = g.nested(TheoryMode::POVS);
        REQUIRE(parse(n.str(), TheoryMode::POVS).str() == n.str());
    }
}

TEST_CASE("term normal form is canonical") {
    HomeTerm a = HomeTerm::var(x1, Rational(2)) + HomeTerm::var(x2) - HomeTerm::var(x1);
    HomeTerm b = HomeTerm::var(x2) + HomeTerm::var(x1);
    CHECK(a == b);
    CHECK((HomeTerm::var(x1) - HomeTerm::var(x1)).is_zero());
    QuotientTerm s = QuotientTerm::pi(HomeTerm::var(x1) + HomeTerm(ModelElement(Rational(3))));
    CHECK(s == QuotientTerm::pi(HomeTerm::var(x1)));
    CHECK(P("x1 + x2 < x2 + 2*x1 - x1 + 1").str() == P("0 < 1").str());
}

TEST_CASE("substitute") {
    CHECK(substitute(P("Q(x1)"), x1, HomeTerm::var(x2) + HomeTerm(ModelElement(Rational(1)))).str() == "Q(x2 + 1)");
    Formula s = substitute(P("pi(x1) = u1"), x1, HomeTerm::var(x3, Rational(2)));
    CHECK(s.str() == "2*pi(x3) = u1");
    CHECK(s.atom().quot().pushed() == HomeTerm::var(x3, Rational(2)));
    Formula t = substitute(P("x1 < x2"), x2, HomeTerm::var(x1));
    CHECK(t.str() == "0 < 0"); // x1 < x1 in linear normal form
    CHECK(simplify(t).is_false());
    CHECK_THROWS_AS(substitute(P("E x2. x1 < x2"), x1, HomeTerm::var(x2)), CaptureError);
    CHECK_THROWS_AS(substitute(P("x1 < 0"), x1, QuotientTerm::var(u1)), SortError);
    // Bound occurrences are untouched.
    CHECK(substitute(P("E x1. x1 < x2"), x1, HomeTerm::var(x3)).str() == P("E x1. x1 < x2").str());
}

TEST_CASE("pi never nests") {
    FormulaGenerator g(23);
    for (int i = 0; i < 200; ++i)
        REQUIRE(pi_is_flat(g.nested(TheoryMode::POVS)));
    CHECK_THROWS_AS(P("pi(pi(x1)) = u1"), SortError);
}

TEST_CASE("rename_apart separates bound variables") {
    Formula f = P("(E x1. x1 < x2) & (E x1. Q(x1)) & x1 = 0");
    VarSet bound = f.bound_vars();
    CHECK(bound.size() == 2);
    CHECK(!bound.count(x1));
    CHECK(f.free_vars() == VarSet{x1, x2});
}

} // TEST_SUITE

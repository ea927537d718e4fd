#include <doctest.h>

#include "povs/errors.hpp"
#include "povs/parser.hpp"
#include "povs/qe.hpp"
#include "povs/random_formulas.hpp"

using namespace povs;

namespace {

const Variable x1 = Variable::home(1), x2 = Variable::home(2), x3 = Variable::home(3);
const Variable u1 = Variable::quot(1), u2 = Variable::quot(2);

std::string qe_str(const char* s, TheoryMode m = TheoryMode::POVS) { return qe(parse(s, m), m).str(); }
bool decide(const char* s, TheoryMode m = TheoryMode::POVS) { return decide_sentence(parse(s, m), m); }

bool holds(const Formula& f, const Assignment& a) { return eval(f, a); }

} // namespace

TEST_SUITE("qe") {

TEST_CASE("home elimination examples") {
    CHECK(qe_str("E x1. (0 < x1 & x1 < x2 & Q(x1))") == "0 < x2");
    CHECK(qe_str("E x1. (x1 = x2 + 1 & Q(x1))") == "Q(x2 + 1)");
    CHECK(qe_str("E x1. (pi(x1) = u1 & pi(x1) != u2)") == "u1 != u2");
    CHECK(qe_str("E x1. pi(x1) = u1") == "true");
    CHECK(qe_str("E x1. (x1 < x2 & x3 < x1)") == "x3 < x2");
}

TEST_CASE("quotient elimination examples") {
    CHECK(qe_str("E u1. (u1 != pi(x1) & u1 != pi(x2))") == "true");
    CHECK(qe_str("E u1. (u1 = pi(x1) & u1 != pi(x2))") == "pi(x1) != pi(x2)");
    CHECK(qe_str("E u1. (pi(x1) prec u1 & u1 prec pi(x2))", TheoryMode::POVS_PREC) == "pi(x1) prec pi(x2)");
}

TEST_CASE("worked example against the oracle") {
    Formula f = parse("E x1. (0 < x1 & x1 < x2 & Q(x1))", TheoryMode::POVS);
    Formula r = qe(f, TheoryMode::POVS);
    Conjunction body = dnf_clauses(f.body()).front();
    FormulaGenerator g(41);
    for (int i = 0; i < 50; ++i) {
        Assignment a;
        a.set(x2, g.element());
        REQUIRE(holds(r, a) == oracle_exists_home(body, f.bound_var(), a).satisfiable);
    }
}

TEST_CASE("decide examples") {
    CHECK(!decide("A x1. (Q(x1) -> x1 >= 0)"));
    CHECK(decide("E x1 E x2. (x1 < x2 & Q(x2 - x1))"));
    CHECK(!decide("E x1. (Q(x1) & !Q(x1))"));
    CHECK(decide("E x1. (0 < x1 & x1 < 1 & !Q(x1))"));
    CHECK(decide("A u1. E x1. (pi(x1) = u1 & 0 < x1 & x1 < 1)"));
    CHECK_THROWS_AS(decide("E x1. x1 < x2"), FreeVariableError);
}

TEST_CASE("mode checks") {
    Formula f = parse("E u1. pi(x1) prec u1", TheoryMode::POVS_PREC);
    CHECK_THROWS_AS(qe(f, TheoryMode::POVS), ModeError);
}

TEST_CASE("single quantifier soundness against the oracles") {
    FormulaGenerator g(42);
    for (int i = 0; i < 150; ++i) {
        TheoryMode mode = i % 3 == 0 ? TheoryMode::OVS : i % 3 == 1 ? TheoryMode::POVS : TheoryMode::POVS_PREC;
        Variable v = mode != TheoryMode::OVS && g.coin() ? Variable::quot(1) : Variable::home(1);
        std::vector<Variable> qv;
        if (mode != TheoryMode::OVS)
            qv.push_back(u2);
        Conjunction c = g.conjunction(mode, v, {x2, x3}, qv);
        Formula f = Formula::exists(v, Formula::from_conjunction(c));
        Formula r = qe(f, mode);
        REQUIRE(r.is_quantifier_free());
        VarSet free = {x2, x3};
        free.insert(qv.begin(), qv.end());
        for (int j = 0; j < 10; ++j) {
            Assignment a = g.assignment(free);
            bool oracle = v.is_home() ? oracle_exists_home(c, v, a).satisfiable
                                      : oracle_exists_quotient(c, v, a, mode == TheoryMode::POVS_PREC).satisfiable;
            INFO(f.str(), " => ", r.str());
            REQUIRE(holds(r, a) == oracle);
        }
    }
}

TEST_CASE("forall and exists are dual") {
    FormulaGenerator g(43);
    for (int i = 0; i < 100; ++i) {
        Variable v = g.coin() ? x1 : u1;
        Formula body = Formula::from_conjunction(g.conjunction(TheoryMode::POVS, v, {x2}, {u2}, 3));
        Formula all = qe(Formula::forall(v, body), TheoryMode::POVS);
        Formula dual = Formula::negate(qe(Formula::exists(v, Formula::negate(body)), TheoryMode::POVS));
        for (int j = 0; j < 10; ++j) {
            Assignment a = g.assignment({x2, u2});
            REQUIRE(holds(all, a) == holds(dual, a));
        }
    }
}

TEST_CASE("nested elimination is quantifier-free and idempotent") {
    FormulaGenerator g(44);
    for (int i = 0; i < 100; ++i) {
        TheoryMode mode = i % 4 == 0 ? TheoryMode::OVS : TheoryMode::POVS;
        Formula f = g.nested(mode);
        Formula r = qe(f, mode);
        REQUIRE(r.is_quantifier_free());
        Formula rr = qe(r, mode);
        for (int j = 0; j < 10; ++j) {
            Assignment a = g.assignment(f.free_vars());
            REQUIRE(holds(r, a) == holds(rr, a));
        }
    }
}

TEST_CASE("two-level elimination agrees with the oracle on the outer quantifier") {
    FormulaGenerator g(48);
    const Variable v1 = Variable::home(5), w1 = Variable::quot(5), inner_h = Variable::home(6), inner_q = Variable::quot(6);
    int nonconstant = 0;
    for (int i = 0; i < 120; ++i) {
        Variable outer = g.coin() ? v1 : w1;
        Variable inner = g.coin() ? inner_h : inner_q;
        std::vector<Variable> hv = {x3}, qv = {u2};
        (outer.is_home() ? hv : qv).push_back(outer);
        Conjunction c = g.conjunction(TheoryMode::POVS, inner, hv, qv, 4);
        Formula inner_free = qe(Formula::exists(inner, Formula::from_conjunction(c)), TheoryMode::POVS);
        bool universal = g.coin();
        Formula body = Formula::exists(inner, Formula::from_conjunction(c));
        Formula full = qe(universal ? Formula::forall(outer, body) : Formula::exists(outer, body), TheoryMode::POVS);
        nonconstant += !full.is_true() && !full.is_false();
        auto clauses = elimination_clauses(universal ? Formula::negate(inner_free) : inner_free);
        for (int j = 0; j < 10; ++j) {
            Assignment a = g.assignment({x3, u2});
            bool some = false;
            for (const auto& cl : clauses)
                some = some || (outer.is_home() ? oracle_exists_home(cl, outer, a).satisfiable
                                                : oracle_exists_quotient(cl, outer, a, false).satisfiable);
            INFO(full.str());
            REQUIRE(holds(full, a) == (universal ? !some : some));
        }
    }
    CHECK(nonconstant > 20);
}

TEST_CASE("the expansion is conservative") {
    FormulaGenerator g(46);
    for (int i = 0; i < 100; ++i) {
        Formula f = g.nested(TheoryMode::POVS);
        Formula a = qe(f, TheoryMode::POVS), b = qe(f, TheoryMode::POVS_PREC);
        for (int j = 0; j < 10; ++j) {
            Assignment s = g.assignment(f.free_vars());
            REQUIRE(holds(a, s) == holds(b, s));
        }
    }
}

TEST_CASE("split_atom examples") {
    auto s = split_atom(parse("Q(2*x1 - x2)", TheoryMode::POVS).atom());
    CHECK(!s.home_part);
    REQUIRE(s.quotient_part);
    CHECK(s.quotient_part->str() == "2*pi(x1) = pi(x2)");
    auto h = split_atom(parse("x1 < x2", TheoryMode::POVS).atom());
    REQUIRE(h.home_part);
    CHECK(h.home_part->str() == "x1 < x2");
    CHECK(!h.quotient_part);
    auto p = split_atom(parse("pi(x1) prec u1", TheoryMode::POVS_PREC).atom());
    REQUIRE(p.quotient_part);
    CHECK(p.quotient_part->str() == "pi(x1) prec u1");
}

TEST_CASE("split_atom is sound for every kind") {
    FormulaGenerator g(47);
    for (int i = 0; i < 2000; ++i) {
        Literal l = g.literal(TheoryMode::POVS_PREC, {x1, x2}, {u1});
        AtomSplit s = split_atom(l.atom);
        REQUIRE(s.home_part.has_value() != s.quotient_part.has_value());
        Formula parts = s.home_part ? *s.home_part : *s.quotient_part;
        Assignment a = g.assignment({x1, x2, u1});
        REQUIRE(eval(l.atom, a) == holds(parts, a));
    }
}

} // TEST_SUITE

#include <doctest.h>

#include "povs/errors.hpp"
#include "povs/parser.hpp"
#include "povs/random_formulas.hpp"
#include "povs/reference_model.hpp"

using namespace povs;

namespace {

const Variable x1 = Variable::home(1), x2 = Variable::home(2), v = Variable::home(9);
const Variable u1 = Variable::quot(1), w = Variable::quot(9);

ModelElement el(const char* s) { return parse_element(s); }

// Literals of a flat conjunction, taken as written.
Conjunction lits(const char* s, TheoryMode mode = TheoryMode::POVS) {
    Formula f = parse(s, mode);
    std::vector<Formula> parts = f.kind() == FormulaKind::And ? f.children() : std::vector<Formula>{f};
    Conjunction c;
    for (const auto& p : parts) {
        if (p.kind() == FormulaKind::Not)
            c.push_back({p.children().front().atom(), false});
        else
            c.push_back({p.atom(), true});
    }
    return c;
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("eval examples") {
    Assignment a;
    a.set(x1, el("5/7"));
    CHECK(eval(parse("Q(x1)", TheoryMode::POVS), a));
    a.set(x1, el("5/7 + r2"));
    CHECK(!eval(parse("Q(x1)", TheoryMode::POVS), a));
    Assignment b;
    b.set(x1, el("1 + r2")).set(x2, el("3 + r2"));
    CHECK(eval(parse("pi(x1) = pi(x2)", TheoryMode::POVS), b));
    CHECK_THROWS_AS(eval(parse("Q(x1)", TheoryMode::POVS), Assignment()), UnboundVariableError);
    CHECK_THROWS_AS(eval(parse("E x1. Q(x1)", TheoryMode::POVS), Assignment()), QuantifiedInputError);
    CHECK_THROWS_AS(Assignment().set(u1, el("r2")), SortError);
}

TEST_CASE("model membership") {
    ReferenceModel m;
    CHECK(m.contains(el("r2 + r3")));
    CHECK(!m.contains(el("r5")));
    CHECK(ReferenceModel{4}.contains(el("r5")));
}

TEST_CASE("home oracle examples") {
    auto r = oracle_exists_home(lits("0 < x9 & x9 < 1 & Q(x9)"), v, {});
    CHECK(r.satisfiable);
    REQUIRE(r.witness);
    CHECK(r.witness->is_rational());
    CHECK(!oracle_exists_home(lits("x9 < 0 & x9 > 1"), v, {}).satisfiable);
    Assignment s;
    s.set(x1, el("r2"));
    CHECK(!oracle_exists_home(lits("Q(x9) & pi(x9) = pi(x1)"), v, s).satisfiable);
    CHECK_THROWS_AS(oracle_exists_home(lits("x9 < x1"), v, {}), NotGroundError);
}

TEST_CASE("quotient oracle examples") {
    Assignment s;
    s.set(x1, el("r2")).set(x2, el("r3"));
    CHECK(oracle_exists_quotient(lits("u9 != pi(x1) & u9 != pi(x2)"), w, s, false).satisfiable);
    CHECK(!oracle_exists_quotient(lits("u9 = pi(x1) & u9 != pi(x1)"), w, s, false).satisfiable);
    Assignment t;
    t.set(x1, el("r3")).set(x2, el("r2"));
    auto r = oracle_exists_quotient(lits("pi(x1) prec u9 & u9 prec pi(x2)", TheoryMode::POVS_PREC), w, t, true);
    CHECK(r.satisfiable);
    CHECK_THROWS_AS(oracle_exists_quotient(lits("pi(x1) prec u9", TheoryMode::POVS_PREC), w, t, false), ModeError);
}

TEST_CASE("Q is dense") {
    FormulaGenerator g(31);
    for (int i = 0; i < 500; ++i) {
        ModelElement a = g.element(), b = g.element();
        if (!less(a, b))
            std::swap(a, b);
        if (a == b)
            continue;
        Conjunction c = {{Atom::home_lt(HomeTerm(a) - HomeTerm::var(v)), true},
                         {Atom::home_lt(HomeTerm::var(v) - HomeTerm(b)), true},
                         {Atom::in_q(HomeTerm::var(v)), true}};
        REQUIRE(oracle_exists_home(c, v, {}).satisfiable);
        // Every coset is dense too.
        c.back() = {Atom::quot_eq(QuotientTerm::pi(HomeTerm::var(v)) - QuotientTerm(g.quotient_element())), true};
        REQUIRE(oracle_exists_home(c, v, {}).satisfiable);
    }
}

TEST_CASE("oracle witnesses hold and refusals survive random probes") {
    FormulaGenerator g(32);
    int refused = 0;
    for (int i = 0; i < 300; ++i) {
        bool home = g.coin();
        Variable bound = home ? v : w;
        TheoryMode mode = i % 2 ? TheoryMode::POVS_PREC : TheoryMode::POVS;
        Conjunction c = g.conjunction(mode, bound, {x1, x2}, {u1});
        Assignment s = g.assignment({x1, x2, u1});
        bool sat;
        if (home) {
            auto r = oracle_exists_home(c, bound, s);
            sat = r.satisfiable;
            if (sat) {
                Assignment t = s;
                t.set(bound, *r.witness);
                REQUIRE(eval(c, t));
            }
        } else {
            auto r = oracle_exists_quotient(c, bound, s, mode == TheoryMode::POVS_PREC);
            sat = r.satisfiable;
            if (sat) {
                Assignment t = s;
                t.set(bound, *r.witness);
                REQUIRE(eval(c, t));
            }
        }
        if (sat)
            continue;
        ++refused;
        for (int k = 0; k < 1000; ++k) {
            Assignment t = s;
            if (home)
                t.set(bound, g.element());
            else
                t.set(bound, g.quotient_element());
            REQUIRE(!eval(c, t));
        }
    }
    CHECK(refused > 20);
}

} // TEST_SUITE

#include <doctest.h>

#include "povs/decomposition.hpp"
#include "povs/errors.hpp"
#include "povs/parser.hpp"
#include "povs/random_formulas.hpp"

using namespace povs;

namespace {

const Variable x1 = Variable::home(1), u1 = Variable::quot(1);

Formula P(const char* s) { return parse(s, TheoryMode::POVS); }
Decomposition D(const char* s) { return decompose(P(s), x1); }
ModelElement el(const char* s) { return parse_element(s); }

bool member(const Formula& f, const ModelElement& m) {
    Assignment a;
    a.set(x1, m);
    return eval(f, a);
}

// Points strictly increasing, pieces nonempty, ordered and disjoint.
void check_structure(const Decomposition& d) {
    for (std::size_t i = 1; i < d.points.size(); ++i)
        REQUIRE(less(d.points[i - 1], d.points[i]));
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        REQUIRE(compare(p.a, p.b) == Ordering::Less);
        REQUIRE(!p.cosets.is_empty());
        if (i > 0)
            REQUIRE(compare(d.pieces[i - 1].b, p.a) != Ordering::Greater);
    }
    for (const auto& m : d.points)
        for (const auto& p : d.pieces)
            REQUIRE(!p.contains(m));
}

} // namespace

TEST_SUITE("decomposition") {

TEST_CASE("decompose examples") {
    Decomposition q = D("Q(x1)");
    CHECK(q.points.empty());
    REQUIRE(q.pieces.size() == 1);
    CHECK(q.pieces[0].a == Endpoint::neg_inf());
    CHECK(q.pieces[0].b == Endpoint::pos_inf());
    CHECK(q.pieces[0].cosets == CosetSet::only(QuotientElement()));

    Decomposition iv = D("0 < x1 & x1 < 1");
    REQUIRE(iv.pieces.size() == 1);
    CHECK(iv.pieces[0].a == Endpoint::at(ModelElement(0)));
    CHECK(iv.pieces[0].b == Endpoint::at(ModelElement(1)));
    CHECK(iv.pieces[0].cosets == CosetSet::all());

    Decomposition mix = D("x1 = 1 | (!Q(x1) & x1 > 0)");
    CHECK(mix.points == std::vector<ModelElement>{ModelElement(1)});
    REQUIRE(mix.pieces.size() == 1);
    CHECK(mix.pieces[0].a == Endpoint::at(ModelElement(0)));
    CHECK(mix.pieces[0].b == Endpoint::pos_inf());
    CHECK(mix.pieces[0].cosets == CosetSet::except(QuotientElement()));
}

TEST_CASE("mixed example agrees with eval on a thousand probes") {
    Formula f = P("x1 = 1 | (!Q(x1) & x1 > 0)");
    Decomposition d = decompose(f, x1);
    FormulaGenerator g(51);
    for (const auto& m : g.probes(d, 1000))
        REQUIRE(d.contains(m) == member(f, m));
}

TEST_CASE("near interior examples") {
    auto q = near_interior(D("Q(x1)"));
    CHECK(q.frontier.empty());
    CHECK(q.interior == D("Q(x1)"));
    auto pt = near_interior(D("x1 = 0"));
    CHECK(pt.interior.empty());
    CHECK(pt.frontier == std::vector<ModelElement>{ModelElement(0)});
    auto mixed = near_interior(D("Q(x1) | x1 = r2"));
    CHECK(mixed.interior == D("Q(x1)"));
    CHECK(mixed.frontier == std::vector<ModelElement>{el("r2")});
}

TEST_CASE("near frontier points fail the window test") {
    // Probes just either side of r2 stay in the Q pattern, r2 itself does not.
    Formula f = P("Q(x1) | x1 = r2");
    for (int k = 1; k < 40; ++k) {
        Rational eps(1, 1 << (k % 30 + 1));
        CHECK(!member(f, el("r2") + ModelElement(eps)));
        CHECK(member(f, ModelElement(rational_between(el("r2"), el("r2") + ModelElement(eps)))));
    }
    CHECK(member(f, el("r2")));
}

TEST_CASE("is_small examples") {
    CHECK(is_small(D("Q(x1)")));
    CHECK(!is_small(D("0 < x1 & x1 < 1")));
    CHECK(is_small(D("x1 < 0 & x1 > 0")));
    CHECK(D("x1 < 0 & x1 > 0").empty());
    CHECK(is_small(D("Q(x1) | pi(x1) = pi(r2) | x1 = r3")));
    CHECK(!is_small(D("!Q(x1) & x1 < 5")));
}

TEST_CASE("generic type examples") {
    CHECK(generic_type_contains(P("u1 != pi(r2)"), u1));
    CHECK(!generic_type_contains(P("u1 = 0_Q"), u1));
    CHECK(generic_type_contains(P("u1 = u1"), u1));
    CHECK_THROWS_AS(generic_type_contains(P("u1 = u2"), u1), ArityError);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(decompose(P("x1 < x2"), x1), ArityError);
    CHECK_THROWS_AS(decompose(P("Q(x1)"), Variable::quot(1)), ArityError);
    CHECK_THROWS_AS(decompose(parse("pi(x1) prec 0_Q", TheoryMode::POVS_PREC), x1), ModeError);
    Assignment a;
    a.set(Variable::home(2), el("r3"));
    CHECK(decompose(P("x1 < x2"), x1, a) == D("x1 < r3"));
}

TEST_CASE("quantified input is eliminated first") {
    CHECK(D("E x2. (x2 < x1 & Q(x2) & x1 < 3)") == D("x1 < 3"));
    CHECK(D("A x2. (Q(x2) -> x2 != x1)") == D("!Q(x1)"));
}

TEST_CASE("partition correctness on random unary formulas") {
    FormulaGenerator g(52);
    for (int i = 0; i < 150; ++i) {
        Formula f = g.unary(x1, 5);
        Decomposition d = decompose(f, x1);
        check_structure(d);
        for (const auto& m : g.probes(d, 400)) {
            INFO(f.str(), " at ", m.str(), " -> ", d.str());
            REQUIRE(d.contains(m) == member(f, m));
        }
    }
}

TEST_CASE("complement and intersection") {
    FormulaGenerator g(53);
    for (int i = 0; i < 100; ++i) {
        Formula f = g.unary(x1), h = g.unary(x1);
        Decomposition df = decompose(f, x1), dn = decompose(Formula::negate(f), x1);
        Decomposition dh = decompose(h, x1), both = decompose(Formula::conj({f, h}), x1);
        CHECK(UnarySet::from(dn).decomposition() == UnarySet::from(df).complement().decomposition());
        Decomposition all = df;
        all.points.insert(all.points.end(), dh.points.begin(), dh.points.end());
        for (const auto& m : g.probes(all, 200)) {
            REQUIRE(dn.contains(m) != df.contains(m));
            REQUIRE(both.contains(m) == (df.contains(m) && dh.contains(m)));
        }
    }
}

TEST_CASE("equivalent formulas decompose identically") {
    FormulaGenerator g(54);
    for (int i = 0; i < 100; ++i) {
        Formula f = g.unary(x1);
        Formula same = Formula::negate(Formula::negate(Formula::disj({f, Formula::conj({f, g.unary(x1)})})));
        REQUIRE(decompose(f, x1) == decompose(same, x1));
        REQUIRE(UnarySet::from(decompose(f, x1)).decomposition() == decompose(f, x1));
    }
}

TEST_CASE("E-invariant sets are small or co-small, never both") {
    FormulaGenerator g(55);
    for (int i = 0; i < 200; ++i) {
        Formula f = g.pullback(x1);
        bool s = is_small(decompose(f, x1));
        bool c = is_small(decompose(Formula::negate(f), x1));
        INFO(f.str());
        REQUIRE(s != c);
    }
}

} // TEST_SUITE

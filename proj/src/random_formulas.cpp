#include "povs/random_formulas.hpp"

#include <algorithm>
#include <limits>

namespace povs {

std::vector<Variable> home_vars(int n, int first) {
    std::vector<Variable> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Variable::home(first + i));
    return out;
}

std::vector<Variable> quot_vars(int n, int first) {
    std::vector<Variable> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Variable::quot(first + i));
    return out;
}

int FormulaGenerator::uniform(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % range + 1) % range;
    std::uint64_t r;
    do
        r = next();
    while (r > limit);
    return lo + static_cast<int>(r % range);
}

Rational FormulaGenerator::coefficient() {
    int c = uniform(1, 3);
    return Rational(coin() ? c : -c);
}

Rational FormulaGenerator::small_rational() { return Rational(uniform(-6, 6), uniform(1, 3)); }

ModelElement FormulaGenerator::element() {
    static const std::vector<Rational> irrational_coeffs = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                                            Rational(1, 2), Rational(-1, 2)};
    CoeffMap c;
    if (chance(80))
        c[0] = small_rational();
    for (int k = 1; k < dim_; ++k)
        if (chance(40))
            c[k] = pick(irrational_coeffs);
    return ModelElement(c);
}

QuotientElement FormulaGenerator::quotient_element() { return project(element()); }

HomeTerm FormulaGenerator::home_term(const std::vector<Variable>& vars) {
    HomeTerm t;
    for (auto v : vars)
        if (chance(50))
            t += HomeTerm::var(v, coefficient());
    if (chance(70))
        t += HomeTerm(element());
    return t;
}

QuotientTerm FormulaGenerator::quotient_term(const std::vector<Variable>& hv, const std::vector<Variable>& qv) {
    QuotientTerm s;
    for (auto v : qv)
        if (chance(50))
            s += QuotientTerm::var(v, coefficient());
    HomeTerm pushed;
    for (auto v : hv)
        if (chance(40))
            pushed += HomeTerm::var(v, coefficient());
    s += QuotientTerm::pi(pushed);
    if (chance(60))
        s += QuotientTerm(quotient_element());
    return s;
}

Literal FormulaGenerator::literal(TheoryMode mode, const std::vector<Variable>& hv, const std::vector<Variable>& qv,
                                  std::optional<Variable> focus) {
    std::vector<AtomKind> kinds;
    bool home_ok = !focus || focus->is_home();
    if (home_ok && !hv.empty()) {
        kinds.push_back(AtomKind::HomeEq);
        kinds.push_back(AtomKind::HomeLt);
        kinds.push_back(AtomKind::HomeLt);
    }
    if (mode != TheoryMode::OVS) {
        if (home_ok && !hv.empty())
            kinds.push_back(AtomKind::InQ);
        kinds.push_back(AtomKind::QuotEq);
        if (mode == TheoryMode::POVS_PREC)
            kinds.push_back(AtomKind::QuotPrec);
    }
    AtomKind kind = pick(kinds);
    auto others = [&](const std::vector<Variable>& vs) {
        std::vector<Variable> out;
        for (auto v : vs)
            if (!focus || v != *focus)
                out.push_back(v);
        return out;
    };
    Atom atom = Atom::home_eq(HomeTerm());
    if (kind == AtomKind::HomeEq || kind == AtomKind::HomeLt || kind == AtomKind::InQ) {
        HomeTerm t = home_term(others(hv));
        if (focus)
            t += HomeTerm::var(*focus, coefficient());
        atom = kind == AtomKind::HomeEq ? Atom::home_eq(t) : kind == AtomKind::HomeLt ? Atom::home_lt(t) : Atom::in_q(t);
    } else {
        QuotientTerm s = quotient_term(others(hv), others(qv));
        if (focus)
            s += focus->is_home() ? QuotientTerm::pi(HomeTerm::var(*focus, coefficient()))
                                  : QuotientTerm::var(*focus, coefficient());
        atom = kind == AtomKind::QuotEq ? Atom::quot_eq(s) : Atom::quot_prec(s);
    }
    return {atom, chance(60)};
}

Conjunction FormulaGenerator::conjunction(TheoryMode mode, Variable v, const std::vector<Variable>& home_free,
                                          const std::vector<Variable>& quot_free, int max_literals) {
    std::vector<Variable> hv = home_free, qv = quot_free;
    (v.is_home() ? hv : qv).push_back(v);
    std::vector<Variable> all = hv;
    all.insert(all.end(), qv.begin(), qv.end());
    Conjunction c;
    int n = uniform(1, max_literals);
    for (int i = 0; i < n; ++i) {
        Variable focus = chance(80) ? v : pick(all);
        c.push_back(literal(mode, hv, qv, focus));
    }
    return c;
}

Formula FormulaGenerator::boolean_combination(std::vector<Formula> parts) {
    while (parts.size() > 1) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(parts.size()) - 2));
        Formula a = parts[i], b = parts[i + 1];
        if (chance(20))
            a = Formula::negate(a);
        Formula joined = coin() ? Formula::conj({a, b}) : Formula::disj({a, b});
        parts.erase(parts.begin() + static_cast<long>(i), parts.begin() + static_cast<long>(i) + 2);
        parts.insert(parts.begin() + static_cast<long>(i), joined);
    }
    return chance(15) ? Formula::negate(parts.front()) : parts.front();
}

Formula FormulaGenerator::nested(TheoryMode mode) {
    bool two_sorts = mode != TheoryMode::OVS;
    std::vector<Variable> hv = {Variable::home(1)};
    std::vector<Variable> qv;
    if (two_sorts && coin())
        qv.push_back(Variable::quot(1));
    int depth = uniform(2, 3);
    std::vector<Variable> bound;
    for (int i = 0; i < depth; ++i) {
        bool home = !two_sorts || chance(60);
        Variable v = home ? Variable::home(2 + i) : Variable::quot(2 + i);
        bound.push_back(v);
        (home ? hv : qv).push_back(v);
    }
    bool universal = coin();
    std::vector<Formula> matrix;
    int atoms = uniform(2, 4);
    std::vector<Variable> free_vars = {Variable::home(1)};
    if (!qv.empty() && qv.front() == Variable::quot(1))
        free_vars.push_back(Variable::quot(1));
    for (int i = 0; i < atoms; ++i) {
        // Literals on the free variables keep the result from collapsing to a constant.
        Variable focus = i < depth && !chance(30) ? bound[static_cast<std::size_t>(depth - 1 - i)] : pick(free_vars);
        matrix.push_back(Formula::literal(literal(mode, hv, qv, focus)));
    }
    Formula body = boolean_combination(matrix);
    for (int i = depth - 1; i >= 0; --i) {
        Variable v = bound[static_cast<std::size_t>(i)];
        bool forall = ((depth - 1 - i) % 2 == 0) == universal;
        body = forall ? Formula::forall(v, body) : Formula::exists(v, body);
        if (i > 0 && chance(30)) {
            std::vector<Variable> outer_h, outer_q;
            for (auto w : hv)
                if (std::find(bound.begin() + i, bound.end(), w) == bound.end())
                    outer_h.push_back(w);
            for (auto w : qv)
                if (std::find(bound.begin() + i, bound.end(), w) == bound.end())
                    outer_q.push_back(w);
            Formula extra = Formula::literal(literal(mode, outer_h, outer_q, bound[static_cast<std::size_t>(i - 1)]));
            body = coin() ? Formula::conj({extra, body}) : Formula::disj({extra, body});
        }
    }
    return body;
}

Formula FormulaGenerator::unary(Variable x, int max_atoms) {
    // A small pool of constants makes coincidences between atoms likely.
    std::vector<ModelElement> pool;
    for (int i = 0; i < 3; ++i)
        pool.push_back(element());
    std::vector<Formula> atoms;
    int n = uniform(1, max_atoms);
    for (int i = 0; i < n; ++i) {
        HomeTerm t = HomeTerm::var(x) - HomeTerm(pick(pool));
        switch (uniform(0, 4)) {
        case 0: atoms.push_back(Formula::atom(Atom::home_eq(t))); break;
        case 1: atoms.push_back(Formula::atom(Atom::home_lt(t))); break;
        case 2: atoms.push_back(Formula::atom(Atom::home_lt(-t))); break;
        case 3: atoms.push_back(Formula::atom(Atom::in_q(t * coefficient()))); break;
        default:
            atoms.push_back(Formula::atom(Atom::quot_eq(QuotientTerm::pi(HomeTerm::var(x, coefficient())) -
                                                        QuotientTerm(project(pick(pool)))))); break;
        }
    }
    return boolean_combination(atoms);
}

Formula FormulaGenerator::pullback(Variable x, int max_atoms) {
    std::vector<Formula> atoms;
    int n = uniform(1, max_atoms);
    for (int i = 0; i < n; ++i) {
        if (coin())
            atoms.push_back(Formula::atom(Atom::in_q(HomeTerm::var(x, coefficient()) + HomeTerm(element()))));
        else
            atoms.push_back(Formula::atom(
                Atom::quot_eq(QuotientTerm::pi(HomeTerm::var(x, coefficient())) - QuotientTerm(quotient_element()))));
    }
    return boolean_combination(atoms);
}

Formula FormulaGenerator::function_graph(Variable x, Variable y) {
    int regions = uniform(1, 3);
    std::vector<Formula> conds;
    for (int i = 0; i + 1 < regions; ++i)
        conds.push_back(unary(x, 2));
    bool total = chance(70);
    std::vector<Formula> clauses;
    for (int i = 0; i < regions; ++i) {
        if (i + 1 == regions && !total && regions > 1)
            break;
        std::vector<Formula> parts;
        if (i + 1 < regions)
            parts.push_back(conds[static_cast<std::size_t>(i)]);
        for (int j = 0; j < i; ++j)
            parts.push_back(Formula::negate(conds[static_cast<std::size_t>(j)]));
        HomeTerm line = HomeTerm::var(x, Rational(uniform(-3, 3))) + HomeTerm(element());
        parts.push_back(Formula::atom(Atom::home_eq(HomeTerm::var(y) - line)));
        clauses.push_back(Formula::conj(parts));
    }
    return Formula::disj(clauses);
}

Formula FormulaGenerator::boolean_variant(const Formula& f, Variable x) {
    Formula out = f;
    int steps = uniform(1, 3);
    for (int i = 0; i < steps; ++i) {
        switch (uniform(0, 4)) {
        case 0: out = Formula::disj({out, Formula::conj({out, unary(x, 2)})}); break;
        case 1: {
            Formula h = unary(x, 2);
            out = Formula::disj({Formula::conj({out, h}), Formula::conj({out, Formula::negate(h)})});
            break;
        }
        case 2: out = to_dnf(out); break;
        case 3: out = Formula::negate(to_nnf(Formula::negate(out))); break;
        default: out = Formula::conj({out, Formula::disj({out, unary(x, 2)})}); break;
        }
    }
    return out;
}

Assignment FormulaGenerator::assignment(const VarSet& vars) {
    Assignment a;
    for (auto v : vars) {
        if (v.is_home())
            a.set(v, element());
        else
            a.set(v, quotient_element());
    }
    return a;
}

namespace {

// Random rational strictly between lo and hi (either may be unbounded).
Rational rational_inside(const std::optional<ModelElement>& lo, const std::optional<ModelElement>& hi,
                         FormulaGenerator& g) {
    Rational mid = rational_between(lo, hi);
    if (!lo && !hi)
        return mid + Rational(g.uniform(-20, 20), g.uniform(1, 4));
    if (!lo)
        return mid - Rational(g.uniform(0, 40), g.uniform(1, 4));
    if (!hi)
        return mid + Rational(g.uniform(0, 40), g.uniform(1, 4));
    Rational l = lo->enclosure(48).second, h = hi->enclosure(48).first;
    if (!(l < h))
        return mid;
    const int n = 1 << 20;
    return l + (h - l) * Rational(g.uniform(1, n - 1), n);
}

} // namespace

std::vector<ModelElement> FormulaGenerator::probes(const Decomposition& d, int count) {
    std::vector<ModelElement> out;
    std::vector<ModelElement> marks = d.points;
    for (const auto& p : d.pieces) {
        if (p.a.finite())
            marks.push_back(p.a.value);
        if (p.b.finite())
            marks.push_back(p.b.value);
    }
    std::sort(marks.begin(), marks.end(), RealLess{});
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const auto& m : marks)
        out.push_back(m);

    auto in_coset = [&](const QuotientElement& w, const std::optional<ModelElement>& lo,
                        const std::optional<ModelElement>& hi) {
        ModelElement base = w.section();
        std::optional<ModelElement> l, h;
        if (lo)
            l = *lo - base;
        if (hi)
            h = *hi - base;
        return base + ModelElement(rational_inside(l, h, *this));
    };

    while (static_cast<int>(out.size()) < count) {
        int strategy = uniform(0, 3);
        // Cell between consecutive marks (or beyond the outermost ones).
        int cell = uniform(0, static_cast<int>(marks.size()));
        std::optional<ModelElement> lo, hi;
        if (cell > 0)
            lo = marks[static_cast<std::size_t>(cell - 1)];
        if (cell < static_cast<int>(marks.size()))
            hi = marks[static_cast<std::size_t>(cell)];
        std::vector<QuotientElement> listed;
        for (const auto& p : d.pieces)
            for (const auto& w : p.cosets.members())
                listed.push_back(w);
        if (strategy == 0 && !listed.empty()) {
            out.push_back(in_coset(pick(listed), lo, hi));
        } else if (strategy == 1) {
            out.push_back(in_coset(quotient_element(), lo, hi));
        } else if (strategy == 2 && !marks.empty()) {
            // Just off an edge, inside a listed coset or the rational one.
            const ModelElement& m = pick(marks);
            Rational eps(1, 1 << uniform(4, 30));
            out.push_back(m + ModelElement(coin() ? eps : -eps));
        } else {
            out.push_back(in_coset(QuotientElement(), lo, hi));
        }
    }
    return out;
}

} // namespace povs

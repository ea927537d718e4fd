#include "povs/reference_model.hpp"

#include <algorithm>

#include "povs/errors.hpp"

namespace povs {

bool eval(const Atom& a, const Assignment& sigma) {
    switch (a.kind()) {
    case AtomKind::HomeEq: return a.home().evaluate(sigma).is_zero();
    case AtomKind::HomeLt: return a.home().evaluate(sigma).sign() < 0;
    case AtomKind::InQ: return a.home().evaluate(sigma).is_rational();
    case AtomKind::QuotEq: return a.quot().evaluate(sigma).is_zero();
    case AtomKind::QuotPrec: return quotient_sign(a.quot().evaluate(sigma)) < 0;
    }
    return false;
}

bool eval(const Literal& l, const Assignment& sigma) { return eval(l.atom, sigma) == l.positive; }

bool eval(const Conjunction& c, const Assignment& sigma) {
    return std::all_of(c.begin(), c.end(), [&](const Literal& l) { return eval(l, sigma); });
}

bool eval(const Formula& f, const Assignment& sigma) {
    switch (f.kind()) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Atom: return eval(f.atom(), sigma);
    case FormulaKind::Not: return !eval(f.children().front(), sigma);
    case FormulaKind::And:
        for (const auto& c : f.children())
            if (!eval(c, sigma))
                return false;
        return true;
    case FormulaKind::Or:
        for (const auto& c : f.children())
            if (eval(c, sigma))
                return true;
        return false;
    default: throw QuantifiedInputError("eval requires a quantifier-free formula: " + f.str());
    }
}

Atom ground(const Atom& a, const Assignment& sigma) {
    Atom r = a;
    for (auto v : a.vars()) {
        if (!sigma.binds(v))
            continue;
        if (v.is_home())
            r = r.substitute(v, HomeTerm(sigma.home(v)));
        else
            r = r.substitute(v, QuotientTerm(sigma.quot(v)));
    }
    return r;
}

Formula ground(const Formula& f, const Assignment& sigma) {
    Formula r = f;
    for (const auto& [v, value] : sigma.values()) {
        if (v.is_home())
            r = substitute(r, v, HomeTerm(std::get<ModelElement>(value)));
        else
            r = substitute(r, v, QuotientTerm(std::get<QuotientElement>(value)));
    }
    return r;
}

namespace {

template <typename Elem>
struct BoundPair {
    std::optional<Elem> value;
    bool closed = false;
};

// Ground literal `a*v + c (rel) 0` where only v remains free.
void check_ground(const Atom& a, Variable v) {
    for (auto w : a.vars())
        if (w != v)
            throw NotGroundError("variable " + w.str() + " is not bound by the assignment");
}

// Tightest bounds for a linear order given as comparison callbacks.
template <typename Elem, typename Cmp>
void tighten_lower(BoundPair<Elem>& lo, const Elem& value, bool closed, Cmp cmp) {
    if (!lo.value) {
        lo = {value, closed};
        return;
    }
    Ordering o = cmp(value, *lo.value);
    if (o == Ordering::Greater || (o == Ordering::Equal && !closed))
        lo = {value, closed};
}

template <typename Elem, typename Cmp>
void tighten_upper(BoundPair<Elem>& hi, const Elem& value, bool closed, Cmp cmp) {
    if (!hi.value) {
        hi = {value, closed};
        return;
    }
    Ordering o = cmp(value, *hi.value);
    if (o == Ordering::Less || (o == Ordering::Equal && !closed))
        hi = {value, closed};
}

enum class IntervalShape { Empty, Point, Open };

template <typename Elem, typename Cmp>
IntervalShape shape(const BoundPair<Elem>& lo, const BoundPair<Elem>& hi, Cmp cmp) {
    if (!lo.value || !hi.value)
        return IntervalShape::Open;
    Ordering o = cmp(*lo.value, *hi.value);
    if (o == Ordering::Less)
        return IntervalShape::Open;
    if (o == Ordering::Equal && lo.closed && hi.closed)
        return IntervalShape::Point;
    return IntervalShape::Empty;
}

template <typename Elem, typename Cmp>
bool inside(const Elem& x, const BoundPair<Elem>& lo, const BoundPair<Elem>& hi, Cmp cmp) {
    if (lo.value) {
        Ordering o = cmp(x, *lo.value);
        if (o == Ordering::Less || (o == Ordering::Equal && !lo.closed))
            return false;
    }
    if (hi.value) {
        Ordering o = cmp(x, *hi.value);
        if (o == Ordering::Greater || (o == Ordering::Equal && !hi.closed))
            return false;
    }
    return true;
}

// Collected constraints on pi(v) for some variable ranging over a sort whose
// image in the quotient is being constrained.
struct CosetConstraints {
    std::vector<QuotientElement> required;
    std::vector<QuotientElement> excluded;
    BoundPair<QuotientElement> lo, hi;
    bool ordered = false;
};

// A quotient element satisfying the constraints, if one exists.
std::optional<QuotientElement> pick_coset(const CosetConstraints& cc) {
    auto cmp = [](const QuotientElement& a, const QuotientElement& b) { return quotient_compare(a, b); };
    auto excluded = [&](const QuotientElement& w) {
        return std::find(cc.excluded.begin(), cc.excluded.end(), w) != cc.excluded.end();
    };
    if (!cc.required.empty()) {
        const QuotientElement& w = cc.required.front();
        for (const auto& r : cc.required)
            if (!(r == w))
                return std::nullopt;
        if (excluded(w) || !inside(w, cc.lo, cc.hi, cmp))
            return std::nullopt;
        return w;
    }
    switch (shape(cc.lo, cc.hi, cmp)) {
    case IntervalShape::Empty: return std::nullopt;
    case IntervalShape::Point:
        if (excluded(*cc.lo.value))
            return std::nullopt;
        return *cc.lo.value;
    case IntervalShape::Open: break;
    }
    // pi(sqrt 2) is positive in the quotient order and lies in every M_d, d >= 2.
    const QuotientElement unit = project(ModelElement::sqrt_prime(1));
    for (int n = 1;; ++n) {
        for (int i = 0; i <= n; ++i) {
            QuotientElement w;
            if (cc.lo.value && cc.hi.value) {
                if (i == 0 || i == n)
                    continue;
                w = *cc.lo.value + (*cc.hi.value - *cc.lo.value) * Rational(i, n);
            } else if (cc.lo.value) {
                w = *cc.lo.value + unit * Rational(n * (n + 1) / 2 + i + 1);
            } else if (cc.hi.value) {
                w = *cc.hi.value - unit * Rational(n * (n + 1) / 2 + i + 1);
            } else {
                w = unit * Rational(n * (n + 1) / 2 + i);
            }
            if (!excluded(w))
                return w;
        }
    }
}

ModelElement pick_in_coset(const QuotientElement& w, const BoundPair<ModelElement>& lo, const BoundPair<ModelElement>& hi,
                           const std::vector<ModelElement>& excluded_points) {
    ModelElement base = w.section();
    std::optional<ModelElement> l, h;
    if (lo.value)
        l = *lo.value - base;
    if (hi.value)
        h = *hi.value - base;
    // Any rational offset in (l, h) lands in the coset; finitely many are excluded.
    for (int attempt = 0;; ++attempt) {
        Rational q = rational_between(l, h);
        ModelElement v = base + ModelElement(q);
        if (std::find(excluded_points.begin(), excluded_points.end(), v) == excluded_points.end())
            return v;
        if (attempt % 2 == 0)
            h = ModelElement(q);
        else
            l = ModelElement(q);
    }
}

} // namespace

HomeWitness oracle_exists_home(const Conjunction& literals, Variable v, const Assignment& sigma,
                               const ReferenceModel& model) {
    if (!v.is_home())
        throw SortError("oracle_exists_home called on quotient variable " + v.str());
    (void)model;
    std::vector<Literal> lits;
    for (const auto& l : literals) {
        Atom g = ground(l.atom, sigma);
        check_ground(g, v);
        lits.push_back({g, l.positive});
    }
    auto check = [&](const ModelElement& m) {
        Assignment a;
        a.set(v, m);
        return eval(Conjunction(lits), a);
    };

    auto cmp = [](const ModelElement& a, const ModelElement& b) { return compare(a, b); };
    BoundPair<ModelElement> lo, hi;
    std::vector<ModelElement> excluded_points;
    CosetConstraints cc;
    for (const auto& l : lits) {
        const Atom& a = l.atom;
        if (!a.mentions(v)) {
            if (!eval(l, Assignment()))
                return {};
            continue;
        }
        if (a.is_home_kind()) {
            Rational k = a.home().coeff(v);
            ModelElement point = -a.home().constant() / k;
            switch (a.kind()) {
            case AtomKind::HomeEq:
                if (l.positive) {
                    if (check(point))
                        return {true, point};
                    return {};
                }
                excluded_points.push_back(point);
                break;
            case AtomKind::HomeLt:
                // k*v + c < 0, or its negation k*v + c >= 0.
                if ((k.sign() > 0) == l.positive)
                    tighten_upper(hi, point, !l.positive, cmp);
                else
                    tighten_lower(lo, point, !l.positive, cmp);
                break;
            case AtomKind::InQ:
                (l.positive ? cc.required : cc.excluded).push_back(project(point));
                break;
            default: break;
            }
            continue;
        }
        Rational k = a.quot().pushed().coeff(v);
        QuotientElement target = a.quot().constant() * (Rational(-1) / k);
        if (a.kind() == AtomKind::QuotEq) {
            (l.positive ? cc.required : cc.excluded).push_back(target);
        } else {
            auto qcmp = [](const QuotientElement& x, const QuotientElement& y) { return quotient_compare(x, y); };
            if ((k.sign() > 0) == l.positive)
                tighten_upper(cc.hi, target, !l.positive, qcmp);
            else
                tighten_lower(cc.lo, target, !l.positive, qcmp);
        }
    }

    switch (shape(lo, hi, cmp)) {
    case IntervalShape::Empty: return {};
    case IntervalShape::Point:
        if (check(*lo.value))
            return {true, *lo.value};
        return {};
    case IntervalShape::Open: break;
    }
    auto w = pick_coset(cc);
    if (!w)
        return {};
    ModelElement m = pick_in_coset(*w, lo, hi, excluded_points);
    if (!check(m))
        throw InvariantError("home oracle produced a non-witness " + m.str());
    return {true, m};
}

QuotientWitness oracle_exists_quotient(const Conjunction& literals, Variable v, const Assignment& sigma, bool ordered,
                                       const ReferenceModel& model) {
    if (v.is_home())
        throw SortError("oracle_exists_quotient called on home variable " + v.str());
    (void)model;
    std::vector<Literal> lits;
    for (const auto& l : literals) {
        if (l.atom.kind() == AtomKind::QuotPrec && !ordered)
            throw ModeError("prec literal in the unordered quotient");
        Atom g = ground(l.atom, sigma);
        check_ground(g, v);
        lits.push_back({g, l.positive});
    }
    auto check = [&](const QuotientElement& w) {
        Assignment a;
        a.set(v, w);
        return eval(Conjunction(lits), a);
    };
    auto qcmp = [](const QuotientElement& x, const QuotientElement& y) { return quotient_compare(x, y); };
    CosetConstraints cc;
    cc.ordered = ordered;
    for (const auto& l : lits) {
        const Atom& a = l.atom;
        if (!a.mentions(v)) {
            if (!eval(l, Assignment()))
                return {};
            continue;
        }
        Rational k = a.quot().coeff(v);
        QuotientElement target = a.quot().constant() * (Rational(-1) / k);
        if (a.kind() == AtomKind::QuotEq) {
            if (l.positive) {
                if (check(target))
                    return {true, target};
                return {};
            }
            cc.excluded.push_back(target);
        } else if ((k.sign() > 0) == l.positive) {
            tighten_upper(cc.hi, target, !l.positive, qcmp);
        } else {
            tighten_lower(cc.lo, target, !l.positive, qcmp);
        }
    }
    auto w = pick_coset(cc);
    if (!w)
        return {};
    if (!check(*w))
        throw InvariantError("quotient oracle produced a non-witness " + w->str());
    return {true, *w};
}

} // namespace povs

#include "povs/qe.hpp"

#include <algorithm>
#include <set>

#include "povs/errors.hpp"

namespace povs {

namespace {

Rational leading_coeff(const std::map<Variable, Rational>& coeffs) {
    return coeffs.empty() ? Rational(0) : coeffs.begin()->second;
}

Rational quotient_leading(const QuotientTerm& s) {
    if (!s.coeffs().empty())
        return leading_coeff(s.coeffs());
    return leading_coeff(s.pushed().coeffs());
}

bool is_literal(const Formula& f) {
    return f.kind() == FormulaKind::Atom ||
           (f.kind() == FormulaKind::Not && f.children().front().kind() == FormulaKind::Atom);
}

} // namespace

Formula normalize_atom(const Atom& a) {
    if (a.is_ground())
        return Formula::boolean(eval(a, Assignment()));
    switch (a.kind()) {
    case AtomKind::HomeEq: return Formula::atom(Atom::home_eq(a.home() * (Rational(1) / leading_coeff(a.home().coeffs()))));
    case AtomKind::InQ: return Formula::atom(Atom::in_q(a.home() * (Rational(1) / leading_coeff(a.home().coeffs()))));
    case AtomKind::HomeLt:
        return Formula::atom(Atom::home_lt(a.home() * (Rational(1) / leading_coeff(a.home().coeffs()).abs())));
    case AtomKind::QuotEq: return Formula::atom(Atom::quot_eq(a.quot() * (Rational(1) / quotient_leading(a.quot()))));
    case AtomKind::QuotPrec:
        return Formula::atom(Atom::quot_prec(a.quot() * (Rational(1) / quotient_leading(a.quot()).abs())));
    }
    return Formula::atom(a);
}

Formula simplify(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False: return f;
    case FormulaKind::Atom: return normalize_atom(f.atom());
    case FormulaKind::Not: return Formula::negate(simplify(f.children().front()));
    case FormulaKind::And:
    case FormulaKind::Or: {
        const bool is_and = f.kind() == FormulaKind::And;
        std::vector<Formula> parts;
        for (const auto& c : f.children())
            parts.push_back(simplify(c));
        Formula joined = is_and ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
        if (joined.kind() != f.kind())
            return joined;
        std::vector<Formula> kept;
        std::set<std::string> seen;
        std::set<std::string> positive, negative;
        for (const auto& c : joined.children()) {
            if (!seen.insert(c.str()).second)
                continue;
            if (c.kind() == FormulaKind::Atom)
                positive.insert(c.atom().key());
            else if (is_literal(c))
                negative.insert(c.children().front().atom().key());
            kept.push_back(c);
        }
        for (const auto& k : positive)
            if (negative.count(k))
                return Formula::boolean(!is_and);
        return is_and ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
    }
    case FormulaKind::Exists: return Formula::exists(f.bound_var(), simplify(f.body()));
    case FormulaKind::Forall: return Formula::forall(f.bound_var(), simplify(f.body()));
    }
    return f;
}

namespace {

// NNF in which negated order atoms are split into strict-or-equal cases.
Formula expand_negated_orders(const Formula& nnf) {
    switch (nnf.kind()) {
    case FormulaKind::Not: {
        const Atom& a = nnf.children().front().atom();
        if (a.kind() == AtomKind::HomeLt)
            return Formula::disj({Formula::atom(Atom::home_lt(-a.home())), Formula::atom(Atom::home_eq(a.home()))});
        if (a.kind() == AtomKind::QuotPrec)
            return Formula::disj({Formula::atom(Atom::quot_prec(-a.quot())), Formula::atom(Atom::quot_eq(a.quot()))});
        return nnf;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : nnf.children())
            cs.push_back(expand_negated_orders(c));
        return nnf.kind() == FormulaKind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    default: return nnf;
    }
}

bool needs_expansion(const Conjunction& conj) {
    for (const auto& l : conj)
        if (!l.positive && (l.atom.kind() == AtomKind::HomeLt || l.atom.kind() == AtomKind::QuotPrec))
            return true;
    return false;
}

void check_literal_mode(const Literal& l, TheoryMode mode) {
    if (l.atom.kind() == AtomKind::QuotPrec && mode != TheoryMode::POVS_PREC)
        throw ModeError("prec literal outside theory mode povs-prec: " + l.str());
    if (mode == TheoryMode::OVS && !(l.atom.kind() == AtomKind::HomeEq || l.atom.kind() == AtomKind::HomeLt))
        throw ModeError("literal outside the ordered vector space language: " + l.str());
}

int max_index(const Conjunction& conj, Variable v) {
    int m = v.index;
    for (const auto& l : conj)
        for (auto w : l.atom.vars())
            m = std::max(m, w.index);
    return m;
}

template <typename Eliminator>
Formula eliminate_split(const Conjunction& conj, Variable v, TheoryMode mode, Eliminator elim) {
    std::vector<Formula> results;
    for (const auto& c : elimination_clauses(Formula::from_conjunction(conj)))
        results.push_back(elim(c, v, mode));
    return simplify(Formula::disj(std::move(results)));
}

} // namespace

std::vector<Conjunction> elimination_clauses(const Formula& f) {
    return dnf_clauses(expand_negated_orders(to_nnf(simplify(f))));
}

Formula eliminate_exists_quotient(const Conjunction& conj, Variable v, TheoryMode mode) {
    if (v.is_home())
        throw SortError("eliminate_exists_quotient called on home variable " + v.str());
    for (const auto& l : conj)
        check_literal_mode(l, mode);
    if (needs_expansion(conj))
        return eliminate_split(conj, v, mode, eliminate_exists_quotient);

    std::vector<Formula> residue;
    std::vector<const Literal*> involved;
    for (const auto& l : conj) {
        if (l.atom.mentions(v))
            involved.push_back(&l);
        else
            residue.push_back(Formula::literal(l));
    }

    // An equality a*v + s = 0 determines v = -s/a.
    for (const Literal* l : involved) {
        if (!l->positive || l->atom.kind() != AtomKind::QuotEq)
            continue;
        const QuotientTerm& s = l->atom.quot();
        QuotientTerm value = s.without(v) * (Rational(-1) / s.coeff(v));
        for (const Literal* other : involved)
            if (other != l)
                residue.push_back(Formula::literal({other->atom.substitute(v, value), other->positive}));
        return simplify(Formula::conj(std::move(residue)));
    }

    // Otherwise v ranges over a dense order without endpoints (or an infinite
    // vector space when unordered); disequations exclude finitely many points
    // and never matter once the open interval is nonempty.
    std::vector<QuotientTerm> lowers, uppers;
    for (const Literal* l : involved) {
        if (l->atom.kind() != AtomKind::QuotPrec)
            continue;
        const QuotientTerm& s = l->atom.quot();
        Rational k = s.coeff(v);
        QuotientTerm bound = s.without(v) * (Rational(-1) / k);
        (k.sign() > 0 ? uppers : lowers).push_back(bound);
    }
    for (const auto& lo : lowers)
        for (const auto& hi : uppers)
            residue.push_back(Formula::atom(Atom::quot_prec(lo - hi)));
    return simplify(Formula::conj(std::move(residue)));
}

Formula eliminate_exists_home(const Conjunction& conj, Variable v, TheoryMode mode) {
    if (!v.is_home())
        throw SortError("eliminate_exists_home called on quotient variable " + v.str());
    for (const auto& l : conj)
        check_literal_mode(l, mode);
    if (needs_expansion(conj))
        return eliminate_split(conj, v, mode, eliminate_exists_home);

    std::vector<Formula> residue;
    std::vector<const Literal*> involved;
    for (const auto& l : conj) {
        if (l.atom.mentions(v))
            involved.push_back(&l);
        else
            residue.push_back(Formula::literal(l));
    }

    // Equality case: a*v + t = 0 gives v = -t/a.
    for (const Literal* l : involved) {
        if (!l->positive || l->atom.kind() != AtomKind::HomeEq)
            continue;
        const HomeTerm& t = l->atom.home();
        HomeTerm value = t.without(v) * (Rational(-1) / t.coeff(v));
        for (const Literal* other : involved)
            if (other != l)
                residue.push_back(Formula::literal({other->atom.substitute(v, value), other->positive}));
        return simplify(Formula::conj(std::move(residue)));
    }

    // No equality: v lies in an open interval (lowers, uppers) and pi(v) is
    // constrained by coset literals. Every coset is dense, so the two parts
    // are independent: the interval must be nonempty and the coset
    // conditions, read as constraints on a fresh quotient variable w = pi(v),
    // must be satisfiable. Disequations exclude finitely many points only.
    const Variable w = Variable::quot(max_index(conj, v) + 1);
    std::vector<HomeTerm> lowers, uppers;
    Conjunction coset_literals;
    for (const Literal* l : involved) {
        const Atom& a = l->atom;
        switch (a.kind()) {
        case AtomKind::HomeEq: break; // negative: a disequation
        case AtomKind::HomeLt: {
            Rational k = a.home().coeff(v);
            HomeTerm bound = a.home().without(v) * (Rational(-1) / k);
            (k.sign() > 0 ? uppers : lowers).push_back(bound);
            break;
        }
        case AtomKind::InQ:
        case AtomKind::QuotEq:
        case AtomKind::QuotPrec: {
            QuotientTerm s = a.kind() == AtomKind::InQ ? QuotientTerm::pi(a.home()) : a.quot();
            Rational k = s.coeff(v);
            QuotientTerm replaced = s.without(v) + QuotientTerm::var(w, k);
            Atom na = a.kind() == AtomKind::QuotPrec ? Atom::quot_prec(replaced) : Atom::quot_eq(replaced);
            coset_literals.push_back({na, l->positive});
            break;
        }
        }
    }
    for (const auto& lo : lowers)
        for (const auto& hi : uppers)
            residue.push_back(Formula::atom(Atom::home_lt(lo - hi)));
    if (!coset_literals.empty())
        residue.push_back(eliminate_exists_quotient(coset_literals, w, mode));
    return simplify(Formula::conj(std::move(residue)));
}

namespace {

Formula eliminate_in(const Formula& body, Variable v, TheoryMode mode) {
    std::vector<Formula> results;
    for (const auto& clause : elimination_clauses(body)) {
        bool mentions = std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return l.atom.mentions(v); });
        if (!mentions) {
            results.push_back(Formula::from_conjunction(clause));
            continue;
        }
        Formula r = v.is_home() ? eliminate_exists_home(clause, v, mode) : eliminate_exists_quotient(clause, v, mode);
        if (r.is_true())
            return r;
        results.push_back(r);
    }
    return simplify(Formula::disj(std::move(results)));
}

Formula qe_rec(const Formula& f, TheoryMode mode) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False: return f;
    case FormulaKind::Atom: return normalize_atom(f.atom());
    case FormulaKind::Not: return Formula::negate(qe_rec(f.children().front(), mode));
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children())
            cs.push_back(qe_rec(c, mode));
        return simplify(f.kind() == FormulaKind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs)));
    }
    case FormulaKind::Exists: return eliminate_in(qe_rec(f.body(), mode), f.bound_var(), mode);
    case FormulaKind::Forall:
        return simplify(Formula::negate(eliminate_in(Formula::negate(qe_rec(f.body(), mode)), f.bound_var(), mode)));
    }
    return f;
}

} // namespace

Formula qe(const Formula& f, TheoryMode mode) { return qe_rec(rename_apart(f), mode); }

bool decide_sentence(const Formula& f, TheoryMode mode) {
    VarSet free = f.free_vars();
    if (!free.empty())
        throw FreeVariableError("decide_sentence: free variable " + free.begin()->str());
    return eval(qe(f, mode), Assignment());
}

AtomSplit split_atom(const Atom& a) {
    switch (a.kind()) {
    case AtomKind::HomeEq:
    case AtomKind::HomeLt: return {Formula::atom(a), std::nullopt};
    case AtomKind::InQ: return {std::nullopt, Formula::atom(Atom::quot_eq(QuotientTerm::pi(a.home())))};
    case AtomKind::QuotEq:
    case AtomKind::QuotPrec: return {std::nullopt, Formula::atom(a)};
    }
    return {};
}

} // namespace povs

#include "povs/formula.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "povs/errors.hpp"

namespace povs {

std::string to_string(TheoryMode m) {
    switch (m) {
    case TheoryMode::OVS: return "ovs";
    case TheoryMode::POVS: return "povs";
    case TheoryMode::POVS_PREC: return "povs-prec";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Atom

namespace {

using VarCoeffs = std::map<Variable, Rational>;

struct HomeSides {
    std::string left, right;
};

HomeSides split_home(const HomeTerm& t) {
    VarCoeffs l, r;
    for (const auto& [v, c] : t.coeffs()) {
        if (c.sign() > 0)
            l.emplace(v, c);
        else
            r.emplace(v, -c);
    }
    // The constant goes to a side without variables when there is one.
    ModelElement lc, rc;
    bool left = l.empty() ? true : (r.empty() ? false : t.constant().sign() > 0);
    if (left)
        lc = t.constant();
    else
        rc = -t.constant();
    return {render_home_sum(l, lc), render_home_sum(r, rc)};
}

HomeSides split_quot(const QuotientTerm& s) {
    VarCoeffs l, r, pl, pr;
    for (const auto& [v, c] : s.coeffs()) {
        if (c.sign() > 0)
            l.emplace(v, c);
        else
            r.emplace(v, -c);
    }
    for (const auto& [v, c] : s.pushed().coeffs()) {
        if (c.sign() > 0)
            pl.emplace(v, c);
        else
            pr.emplace(v, -c);
    }
    QuotientElement lc, rc;
    bool left_empty = l.empty() && pl.empty(), right_empty = r.empty() && pr.empty();
    bool left = left_empty ? true : (right_empty ? false : quotient_sign(s.constant()) > 0);
    if (left)
        lc = s.constant();
    else
        rc = -s.constant();
    return {render_quotient_sum(l, pl, lc), render_quotient_sum(r, pr, rc)};
}

} // namespace

Atom::Atom(AtomKind k, HomeTerm h, QuotientTerm q) : kind_(k), home_(std::move(h)), quot_(std::move(q)) {
    key_ = std::to_string(static_cast<int>(kind_)) + "|" + (is_home_kind() ? home_.str() : quot_.str());
}

Atom Atom::home_eq(HomeTerm t) { return Atom(AtomKind::HomeEq, std::move(t), {}); }
Atom Atom::home_lt(HomeTerm t) { return Atom(AtomKind::HomeLt, std::move(t), {}); }
Atom Atom::in_q(HomeTerm t) { return Atom(AtomKind::InQ, std::move(t), {}); }
Atom Atom::quot_eq(QuotientTerm s) { return Atom(AtomKind::QuotEq, {}, std::move(s)); }
Atom Atom::quot_prec(QuotientTerm s) { return Atom(AtomKind::QuotPrec, {}, std::move(s)); }

VarSet Atom::vars() const { return is_home_kind() ? home_.vars() : quot_.vars(); }

bool Atom::mentions(Variable v) const { return is_home_kind() ? home_.mentions(v) : quot_.mentions(v); }

bool Atom::is_ground() const { return is_home_kind() ? home_.is_constant() : quot_.is_constant(); }

Atom Atom::substitute(Variable v, const HomeTerm& t) const {
    if (!v.is_home())
        throw SortError("home term substituted for quotient variable " + v.str());
    if (is_home_kind())
        return Atom(kind_, home_.substitute(v, t), {});
    return Atom(kind_, {}, quot_.substitute(v, t));
}

Atom Atom::substitute(Variable v, const QuotientTerm& t) const {
    if (v.is_home())
        throw SortError("quotient term substituted for home variable " + v.str());
    if (is_home_kind())
        return *this;
    return Atom(kind_, {}, quot_.substitute(v, t));
}

std::string Atom::str() const {
    switch (kind_) {
    case AtomKind::HomeEq: {
        auto s = split_home(home_);
        return s.left + " = " + s.right;
    }
    case AtomKind::HomeLt: {
        auto s = split_home(home_);
        return s.left + " < " + s.right;
    }
    case AtomKind::InQ: return "Q(" + home_.str() + ")";
    case AtomKind::QuotEq: {
        auto s = split_quot(quot_);
        return s.left + " = " + s.right;
    }
    case AtomKind::QuotPrec: {
        auto s = split_quot(quot_);
        return s.left + " prec " + s.right;
    }
    }
    return "?";
}

std::string Atom::negated_str() const {
    switch (kind_) {
    case AtomKind::HomeEq: {
        auto s = split_home(home_);
        return s.left + " != " + s.right;
    }
    case AtomKind::QuotEq: {
        auto s = split_quot(quot_);
        return s.left + " != " + s.right;
    }
    case AtomKind::InQ: return "!" + str();
    default: return "!(" + str() + ")";
    }
}

// ---------------------------------------------------------------------------
// Formula construction

namespace {

std::shared_ptr<const Formula::Node> make_node(FormulaKind k) {
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    return n;
}

} // namespace

Formula Formula::truth() {
    static const Formula t(make_node(FormulaKind::True));
    return t;
}

Formula Formula::falsity() {
    static const Formula f(make_node(FormulaKind::False));
    return f;
}

Formula Formula::atom(Atom a) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Atom;
    n->atom = std::move(a);
    return Formula(std::move(n));
}

Formula Formula::literal(const Literal& l) {
    Formula a = atom(l.atom);
    return l.positive ? a : negate(a);
}

Formula Formula::negate(Formula f) {
    switch (f.kind()) {
    case FormulaKind::True: return falsity();
    case FormulaKind::False: return truth();
    case FormulaKind::Not: return f.children().front();
    default: break;
    }
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Not;
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
}

namespace {

Formula make_junction(FormulaKind kind, std::vector<Formula> children) {
    const FormulaKind unit = kind == FormulaKind::And ? FormulaKind::True : FormulaKind::False;
    const FormulaKind absorbing = kind == FormulaKind::And ? FormulaKind::False : FormulaKind::True;
    std::vector<Formula> flat;
    for (auto& c : children) {
        if (c.kind() == unit)
            continue;
        if (c.kind() == absorbing)
            return c;
        if (c.kind() == kind)
            flat.insert(flat.end(), c.children().begin(), c.children().end());
        else
            flat.push_back(std::move(c));
    }
    if (flat.empty())
        return kind == FormulaKind::And ? Formula::truth() : Formula::falsity();
    if (flat.size() == 1)
        return flat.front();
    return kind == FormulaKind::And ? Formula::conj(std::move(flat)) : Formula::disj(std::move(flat));
}

} // namespace

Formula Formula::conj(std::vector<Formula> children) {
    bool normalized = children.size() >= 2;
    for (const auto& c : children)
        if (c.kind() == FormulaKind::And || c.kind() == FormulaKind::True || c.kind() == FormulaKind::False)
            normalized = false;
    if (!normalized) {
        if (children.empty())
            return truth();
        return make_junction(FormulaKind::And, std::move(children));
    }
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::And;
    n->children = std::move(children);
    return Formula(std::move(n));
}

Formula Formula::disj(std::vector<Formula> children) {
    bool normalized = children.size() >= 2;
    for (const auto& c : children)
        if (c.kind() == FormulaKind::Or || c.kind() == FormulaKind::True || c.kind() == FormulaKind::False)
            normalized = false;
    if (!normalized) {
        if (children.empty())
            return falsity();
        return make_junction(FormulaKind::Or, std::move(children));
    }
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Or;
    n->children = std::move(children);
    return Formula(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) { return disj({negate(std::move(a)), std::move(b)}); }

Formula Formula::iff(Formula a, Formula b) { return conj({implies(a, b), implies(b, a)}); }

Formula Formula::exists(Variable v, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Exists;
    n->var = v;
    n->children.push_back(std::move(body));
    return Formula(std::move(n));
}

Formula Formula::forall(Variable v, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Forall;
    n->var = v;
    n->children.push_back(std::move(body));
    return Formula(std::move(n));
}

Formula Formula::from_conjunction(const Conjunction& c) {
    std::vector<Formula> parts;
    parts.reserve(c.size());
    for (const auto& l : c)
        parts.push_back(literal(l));
    return conj(std::move(parts));
}

FormulaKind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const { return *node_->atom; }

const std::vector<Formula>& Formula::children() const { return node_->children; }

Variable Formula::bound_var() const { return node_->var; }

const Formula& Formula::body() const { return node_->children.front(); }

bool Formula::is_quantifier_free() const {
    switch (kind()) {
    case FormulaKind::Exists:
    case FormulaKind::Forall: return false;
    default:
        for (const auto& c : children())
            if (!c.is_quantifier_free())
                return false;
        return true;
    }
}

namespace {

void collect_free(const Formula& f, VarSet& bound, VarSet& out) {
    switch (f.kind()) {
    case FormulaKind::Atom:
        for (auto v : f.atom().vars())
            if (!bound.count(v))
                out.insert(v);
        return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        bool fresh = bound.insert(f.bound_var()).second;
        collect_free(f.body(), bound, out);
        if (fresh)
            bound.erase(f.bound_var());
        return;
    }
    default:
        for (const auto& c : f.children())
            collect_free(c, bound, out);
    }
}

void collect_bound(const Formula& f, VarSet& out) {
    if (f.kind() == FormulaKind::Exists || f.kind() == FormulaKind::Forall)
        out.insert(f.bound_var());
    for (const auto& c : f.children())
        collect_bound(c, out);
}

void collect_all(const Formula& f, VarSet& out) {
    if (f.kind() == FormulaKind::Atom) {
        auto vs = f.atom().vars();
        out.insert(vs.begin(), vs.end());
    }
    if (f.kind() == FormulaKind::Exists || f.kind() == FormulaKind::Forall)
        out.insert(f.bound_var());
    for (const auto& c : f.children())
        collect_all(c, out);
}

} // namespace

VarSet Formula::free_vars() const {
    VarSet bound, out;
    collect_free(*this, bound, out);
    return out;
}

VarSet Formula::bound_vars() const {
    VarSet out;
    collect_bound(*this, out);
    return out;
}

VarSet Formula::all_vars() const {
    VarSet out;
    collect_all(*this, out);
    return out;
}

int Formula::max_var_index() const {
    int m = 0;
    for (auto v : all_vars())
        m = std::max(m, v.index);
    return m;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool is_quantifier(const Formula& f) { return f.kind() == FormulaKind::Exists || f.kind() == FormulaKind::Forall; }

void render(const Formula& f, std::ostringstream& os);

void render_wrapped(const Formula& f, bool wrap, std::ostringstream& os) {
    if (wrap)
        os << '(';
    render(f, os);
    if (wrap)
        os << ')';
}

void render(const Formula& f, std::ostringstream& os) {
    switch (f.kind()) {
    case FormulaKind::True: os << "true"; return;
    case FormulaKind::False: os << "false"; return;
    case FormulaKind::Atom: os << f.atom().str(); return;
    case FormulaKind::Not: {
        const Formula& c = f.children().front();
        if (c.kind() == FormulaKind::Atom) {
            os << c.atom().negated_str();
            return;
        }
        os << '!';
        render_wrapped(c, c.kind() != FormulaKind::True && c.kind() != FormulaKind::False, os);
        return;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
        const char* sep = f.kind() == FormulaKind::And ? " & " : " | ";
        bool first = true;
        for (const auto& c : f.children()) {
            if (!first)
                os << sep;
            first = false;
            bool wrap = is_quantifier(c) || (f.kind() == FormulaKind::And && c.kind() == FormulaKind::Or);
            render_wrapped(c, wrap, os);
        }
        return;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        os << (f.kind() == FormulaKind::Exists ? "E " : "A ") << f.bound_var().str() << ". ";
        const Formula& b = f.body();
        render_wrapped(b, b.kind() == FormulaKind::And || b.kind() == FormulaKind::Or, os);
        return;
    }
    }
}

} // namespace

std::string Formula::str() const {
    std::ostringstream os;
    render(*this, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// Substitution and renaming

namespace {

template <typename TermT>
Formula substitute_impl(const Formula& f, Variable v, const TermT& t) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False: return f;
    case FormulaKind::Atom: return f.atom().mentions(v) ? Formula::atom(f.atom().substitute(v, t)) : f;
    case FormulaKind::Not: return Formula::negate(substitute_impl(f.children().front(), v, t));
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children())
            cs.push_back(substitute_impl(c, v, t));
        return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        if (f.bound_var() == v)
            return f;
        Formula b = substitute_impl(f.body(), v, t);
        return f.kind() == FormulaKind::Exists ? Formula::exists(f.bound_var(), b) : Formula::forall(f.bound_var(), b);
    }
    }
    return f;
}

template <typename TermT>
void check_capture(const Formula& f, const TermT& t) {
    VarSet bound = f.bound_vars();
    for (auto w : t.vars())
        if (bound.count(w))
            throw CaptureError("substituted term mentions bound variable " + w.str());
}

Formula rename_impl(const Formula& f, VarSet& used, int& next_home, int& next_quot,
                    std::map<Variable, Variable>& env) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False: return f;
    case FormulaKind::Atom: {
        Atom a = f.atom();
        for (const auto& [from, to] : env) {
            if (!a.mentions(from))
                continue;
            a = from.is_home() ? a.substitute(from, HomeTerm::var(to)) : a.substitute(from, QuotientTerm::var(to));
        }
        return Formula::atom(a);
    }
    case FormulaKind::Not: return Formula::negate(rename_impl(f.children().front(), used, next_home, next_quot, env));
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children())
            cs.push_back(rename_impl(c, used, next_home, next_quot, env));
        return f.kind() == FormulaKind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        Variable v = f.bound_var();
        Variable target = v;
        if (used.count(v))
            target = v.is_home() ? Variable::home(next_home++) : Variable::quot(next_quot++);
        used.insert(target);
        auto saved = env;
        if (target != v)
            env[v] = target;
        else
            env.erase(v);
        Formula b = rename_impl(f.body(), used, next_home, next_quot, env);
        env = std::move(saved);
        return f.kind() == FormulaKind::Exists ? Formula::exists(target, b) : Formula::forall(target, b);
    }
    }
    return f;
}

} // namespace

Formula rename_apart(const Formula& f) {
    VarSet used = f.free_vars();
    int next = f.max_var_index() + 1;
    int next_home = next, next_quot = next;
    std::map<Variable, Variable> env;
    return rename_impl(f, used, next_home, next_quot, env);
}

Formula substitute(const Formula& f, Variable v, const HomeTerm& t) {
    if (!v.is_home())
        throw SortError("cannot substitute a home term for quotient variable " + v.str());
    check_capture(f, t);
    return substitute_impl(f, v, t);
}

Formula substitute(const Formula& f, Variable v, const QuotientTerm& t) {
    if (v.is_home())
        throw SortError("cannot substitute a quotient term for home variable " + v.str());
    check_capture(f, t);
    return substitute_impl(f, v, t);
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

Formula nnf(const Formula& f, bool negated) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False: return negated ? Formula::negate(f) : f;
    case FormulaKind::Atom: return negated ? Formula::negate(f) : f;
    case FormulaKind::Not: return nnf(f.children().front(), !negated);
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children())
            cs.push_back(nnf(c, negated));
        bool is_and = (f.kind() == FormulaKind::And) != negated;
        return is_and ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    default: throw QuantifiedInputError("normal form requested for a quantified formula: " + f.str());
    }
}

// Sorts, removes duplicates; returns false if the clause is contradictory.
bool canonical_clause(Conjunction& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].atom == c[i - 1].atom)
            return false;
    return true;
}

bool subsumes(const Conjunction& small, const Conjunction& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Conjunction> absorb(std::vector<Conjunction> clauses) {
    std::sort(clauses.begin(), clauses.end(),
              [](const Conjunction& a, const Conjunction& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    std::vector<Conjunction> kept;
    for (auto& c : clauses) {
        bool redundant = false;
        for (const auto& k : kept)
            if (subsumes(k, c)) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(std::move(c));
    }
    return kept;
}

std::vector<Conjunction> clauses_of(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True: return {Conjunction{}};
    case FormulaKind::False: return {};
    case FormulaKind::Atom: return {Conjunction{Literal{f.atom(), true}}};
    case FormulaKind::Not: return {Conjunction{Literal{f.children().front().atom(), false}}};
    case FormulaKind::Or: {
        std::vector<Conjunction> out;
        for (const auto& c : f.children()) {
            auto sub = clauses_of(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return absorb(std::move(out));
    }
    case FormulaKind::And: {
        std::vector<Conjunction> acc{Conjunction{}};
        for (const auto& c : f.children()) {
            auto sub = clauses_of(c);
            std::vector<Conjunction> next;
            for (const auto& a : acc)
                for (const auto& b : sub) {
                    Conjunction m = a;
                    m.insert(m.end(), b.begin(), b.end());
                    if (canonical_clause(m))
                        next.push_back(std::move(m));
                }
            acc = absorb(std::move(next));
            if (acc.empty())
                break;
        }
        return acc;
    }
    default: throw QuantifiedInputError("normal form requested for a quantified formula");
    }
}

} // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

std::vector<Conjunction> dnf_clauses(const Formula& f) {
    auto out = clauses_of(to_nnf(f));
    for (auto& c : out)
        canonical_clause(c);
    return out;
}

Formula from_clauses(const std::vector<Conjunction>& clauses) {
    std::vector<Formula> ds;
    ds.reserve(clauses.size());
    for (const auto& c : clauses)
        ds.push_back(Formula::from_conjunction(c));
    return Formula::disj(std::move(ds));
}

Formula to_dnf(const Formula& f) {
    if (!f.is_quantifier_free())
        throw QuantifiedInputError("to_dnf requires a quantifier-free formula: " + f.str());
    return from_clauses(dnf_clauses(f));
}

bool pi_is_flat(const Formula& f) {
    if (f.kind() == FormulaKind::Atom) {
        const Atom& a = f.atom();
        if (a.is_home_kind())
            return true;
        for (const auto& [v, c] : a.quot().pushed().coeffs())
            if (!v.is_home())
                return false;
        return a.quot().pushed().constant().is_zero();
    }
    for (const auto& c : f.children())
        if (!pi_is_flat(c))
            return false;
    return true;
}

} // namespace povs

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "povs/terms.hpp"

namespace povs {

// OVS: ordered vector spaces (home sort only, no Q, no pi).
// POVS: the dense pair with the quotient sort.
// POVS_PREC: POVS expanded by an order on the quotient sort.
enum class TheoryMode { OVS, POVS, POVS_PREC };

std::string to_string(TheoryMode m);

enum class AtomKind {
    HomeEq,   // t = 0
    HomeLt,   // t < 0
    InQ,      // t in Q
    QuotEq,   // s = 0_Q
    QuotPrec, // s prec 0_Q
};

class Atom {
public:
    static Atom home_eq(HomeTerm t);
    static Atom home_lt(HomeTerm t);
    static Atom in_q(HomeTerm t);
    static Atom quot_eq(QuotientTerm s);
    static Atom quot_prec(QuotientTerm s);

    AtomKind kind() const { return kind_; }
    bool is_home_kind() const { return kind_ == AtomKind::HomeEq || kind_ == AtomKind::HomeLt || kind_ == AtomKind::InQ; }
    const HomeTerm& home() const { return home_; }
    const QuotientTerm& quot() const { return quot_; }

    VarSet vars() const;
    bool mentions(Variable v) const;
    bool is_ground() const;

    Atom substitute(Variable v, const HomeTerm& t) const;
    Atom substitute(Variable v, const QuotientTerm& t) const;

    std::string str() const;
    // Rendering of the negated atom, e.g. "x1 != x2" or "!Q(x1)".
    std::string negated_str() const;

    // Structural key; equal keys mean identical normal forms.
    const std::string& key() const { return key_; }
    friend bool operator==(const Atom& a, const Atom& b) { return a.key_ == b.key_; }
    friend bool operator<(const Atom& a, const Atom& b) { return a.key_ < b.key_; }

private:
    Atom(AtomKind k, HomeTerm h, QuotientTerm q);
    AtomKind kind_;
    HomeTerm home_;
    QuotientTerm quot_;
    std::string key_;
};

struct Literal {
    Atom atom;
    bool positive = true;

    Literal negated() const { return {atom, !positive}; }
    std::string str() const { return positive ? atom.str() : atom.negated_str(); }
    friend bool operator==(const Literal& a, const Literal& b) { return a.positive == b.positive && a.atom == b.atom; }
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.atom.key() != b.atom.key())
            return a.atom.key() < b.atom.key();
        return a.positive < b.positive;
    }
};

using Conjunction = std::vector<Literal>;

enum class FormulaKind { True, False, Atom, Not, And, Or, Exists, Forall };

// Immutable first-order formula. Constructors flatten nested And/Or, drop
// neutral elements and collapse single-child connectives, so And/Or nodes
// always have at least two children.
class Formula {
public:
    static Formula truth();
    static Formula falsity();
    static Formula boolean(bool b) { return b ? truth() : falsity(); }
    static Formula atom(Atom a);
    static Formula literal(const Literal& l);
    static Formula negate(Formula f);
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);
    static Formula exists(Variable v, Formula body);
    static Formula forall(Variable v, Formula body);
    static Formula from_conjunction(const Conjunction& c);

    FormulaKind kind() const;
    bool is_true() const { return kind() == FormulaKind::True; }
    bool is_false() const { return kind() == FormulaKind::False; }
    const Atom& atom() const;
    const std::vector<Formula>& children() const; // Not: one child, And/Or: >= 2
    Variable bound_var() const;
    const Formula& body() const;

    bool is_quantifier_free() const;
    VarSet free_vars() const;
    VarSet bound_vars() const;
    VarSet all_vars() const;
    // Largest variable index of either sort that appears anywhere.
    int max_var_index() const;

    std::string str() const;

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    FormulaKind kind;
    std::optional<Atom> atom;
    std::vector<Formula> children;
    Variable var;
};

// Renames bound variables so they are pairwise distinct and distinct from
// every free variable.
Formula rename_apart(const Formula& f);

// Replaces free occurrences of v. Throws SortError on sort mismatch and
// CaptureError if t mentions a variable bound in f.
Formula substitute(const Formula& f, Variable v, const HomeTerm& t);
Formula substitute(const Formula& f, Variable v, const QuotientTerm& t);

// Negation normal form: negations only directly above atoms. Requires a
// quantifier-free input.
Formula to_nnf(const Formula& f);

// Disjunctive normal form as clause lists, with contradictory clauses and
// duplicate literals removed and subsumed clauses absorbed. An empty result
// denotes False; a result containing an empty clause denotes True.
std::vector<Conjunction> dnf_clauses(const Formula& f);

// Equivalent Or of Ands of literals. Throws QuantifiedInputError on quantifiers.
Formula to_dnf(const Formula& f);

Formula from_clauses(const std::vector<Conjunction>& clauses);

// True iff no nested application of pi occurs; holds by construction and is
// exposed for structural checks.
bool pi_is_flat(const Formula& f);

} // namespace povs

#pragma once

#include <optional>
#include <vector>

#include "povs/formula.hpp"
#include "povs/reference_model.hpp"

namespace povs {

// Canonical scaling of an atom: equalities and Q-membership get leading
// coefficient 1, order atoms leading coefficient +-1. Ground atoms are
// decided in the reference model and returned as true/false.
Formula normalize_atom(const Atom& a);

// Constant folding, atom normalization, duplicate removal and detection of
// complementary literals inside a conjunction or disjunction.
Formula simplify(const Formula& f);

// DNF of a quantifier-free formula over the literal classes the eliminators
// accept: negated order atoms are rewritten (not t < 0 becomes -t < 0 or
// t = 0, likewise for prec), so the only negative literals are
// disequations and Q-exclusions.
std::vector<Conjunction> elimination_clauses(const Formula& f);

// Equivalent of E v. /\conj for a home-sort variable, quantifier-free.
Formula eliminate_exists_home(const Conjunction& conj, Variable v, TheoryMode mode);

// Equivalent of E v. /\conj for a quotient-sort variable, quantifier-free.
Formula eliminate_exists_quotient(const Conjunction& conj, Variable v, TheoryMode mode);

// Quantifier-free equivalent of f. Innermost quantifiers first; A v is
// handled as !E v !.
Formula qe(const Formula& f, TheoryMode mode);

// Truth of a sentence: eliminate quantifiers, then evaluate the ground
// residue in the reference model. Throws FreeVariableError on open input.
bool decide_sentence(const Formula& f, TheoryMode mode);

struct AtomSplit {
    std::optional<Formula> home_part;     // atoms of the ordered vector space language
    std::optional<Formula> quotient_part; // quotient-sort atoms over pi-images
};

// Sends an atom to the home or the quotient side. Q(t) becomes pi(t) = 0_Q.
AtomSplit split_atom(const Atom& a);

} // namespace povs

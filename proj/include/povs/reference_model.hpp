#pragma once

#include <optional>

#include "povs/formula.hpp"

namespace povs {

// The computable model M_d: the rational span of 1 and the square roots of
// the first d-1 primes, with Q interpreted as the rationals. The quotient
// M_d / Q has dimension d-1.
struct ReferenceModel {
    int dim = 3;

    bool contains(const ModelElement& a) const { return a.max_index() < dim; }
    bool contains(const QuotientElement& a) const {
        return a.coeffs().empty() || a.coeffs().rbegin()->first < dim;
    }
};

bool eval(const Atom& a, const Assignment& sigma);
bool eval(const Literal& l, const Assignment& sigma);
bool eval(const Conjunction& c, const Assignment& sigma);
// Tarskian truth of a quantifier-free formula.
bool eval(const Formula& f, const Assignment& sigma);

// Replaces every variable bound by sigma with its value.
Formula ground(const Formula& f, const Assignment& sigma);
Atom ground(const Atom& a, const Assignment& sigma);

struct HomeWitness {
    bool satisfiable = false;
    std::optional<ModelElement> witness;
};

struct QuotientWitness {
    bool satisfiable = false;
    std::optional<QuotientElement> witness;
};

// Decides by direct construction in the model whether some value of v makes
// every literal true, given sigma for all other variables. A returned
// witness always re-evaluates to true.
HomeWitness oracle_exists_home(const Conjunction& literals, Variable v, const Assignment& sigma,
                               const ReferenceModel& model = {});

// Quotient-sort analogue; with `ordered` the quotient order is respected,
// otherwise prec literals are rejected with ModeError.
QuotientWitness oracle_exists_quotient(const Conjunction& literals, Variable v, const Assignment& sigma, bool ordered,
                                       const ReferenceModel& model = {});

} // namespace povs

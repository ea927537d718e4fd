#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "povs/decomposition.hpp"

namespace povs {

// Deterministic generator of elements, terms and formulas. Only raw 64-bit
// draws from mt19937_64 are used, mapped to ranges by hand, so a seed gives
// the same stream with every standard library.
class FormulaGenerator {
public:
    explicit FormulaGenerator(std::uint64_t seed, int model_dim = 3) : rng_(seed), dim_(model_dim) {}

    int model_dim() const { return dim_; }

    std::uint64_t next() { return rng_(); }
    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return (next() >> 63) != 0; }
    bool chance(int percent) { return uniform(0, 99) < percent; }
    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
    }

    Rational coefficient(); // nonzero, in {-3..3}
    Rational small_rational();
    ModelElement element();
    QuotientElement quotient_element();

    HomeTerm home_term(const std::vector<Variable>& home_vars);
    QuotientTerm quotient_term(const std::vector<Variable>& home_vars, const std::vector<Variable>& quot_vars);

    // A literal mentioning `focus` (when given) with atom kinds allowed by the mode.
    Literal literal(TheoryMode mode, const std::vector<Variable>& home_vars, const std::vector<Variable>& quot_vars,
                    std::optional<Variable> focus = std::nullopt);

    // Conjunction of 1..max_literals literals, most of which mention v.
    Conjunction conjunction(TheoryMode mode, Variable v, const std::vector<Variable>& home_free,
                            const std::vector<Variable>& quot_free, int max_literals = 6);

    // 2-3 alternating quantifiers over both sorts with a small quantifier-free matrix.
    Formula nested(TheoryMode mode);

    // Quantifier-free formula in the single home variable x with constant parameters.
    Formula unary(Variable x, int max_atoms = 4);
    // Quantifier-free formula built from atoms about pi(x) only.
    Formula pullback(Variable x, int max_atoms = 3);
    // A piecewise-linear function graph in x and y, functional by construction.
    Formula function_graph(Variable x, Variable y);

    // An equivalent formula obtained by Boolean rewriting only (absorption,
    // case splits, normal forms, De Morgan); f must be quantifier-free.
    Formula boolean_variant(const Formula& f, Variable x);

    Assignment assignment(const VarSet& vars);

    // Probe points for a decomposition: inside each piece (in and out of the
    // listed cosets), at every point and endpoint, in gaps, and near edges.
    std::vector<ModelElement> probes(const Decomposition& d, int count);

private:
    Formula boolean_combination(std::vector<Formula> atoms);

    std::mt19937_64 rng_;
    int dim_;
};

std::vector<Variable> home_vars(int n, int first = 1);
std::vector<Variable> quot_vars(int n, int first = 1);

} // namespace povs

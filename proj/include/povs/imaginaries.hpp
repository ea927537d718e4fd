#pragma once

#include <optional>
#include <vector>

#include "povs/decomposition.hpp"

namespace povs {

struct CodedPiece {
    Endpoint a, b;
    CosetSet cosets = CosetSet::all();
    friend bool operator==(const CodedPiece&, const CodedPiece&) = default;
};

// Canonical tuple for a unary definable set: its near-frontier in increasing
// order and the near-interval pieces of its near-interior from left to right.
// Two sets are equal exactly when their codes are.
struct UnarySetCode {
    std::vector<ModelElement> frontier;
    std::vector<CodedPiece> pieces;

    static UnarySetCode of(const Decomposition& d);
    Decomposition decomposition() const;
    bool contains(const ModelElement& m) const;
    friend bool operator==(const UnarySetCode&, const UnarySetCode&) = default;
};

UnarySetCode code_unary_set(const Formula& f, Variable v, const Assignment& sigma = {});
bool codes_equal(const UnarySetCode& a, const UnarySetCode& b);

struct LinearPiece {
    Rational slope;
    ModelElement intercept;
    UnarySetCode domain;
    friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

// A unary definable function as finitely many graph points plus linear
// pieces x -> slope*x + intercept over pairwise disjoint domains.
struct FunctionCode {
    std::vector<std::pair<ModelElement, ModelElement>> exceptional;
    std::vector<LinearPiece> pieces;

    // Value at m, or nothing when m lies outside the coded domain.
    std::optional<ModelElement> apply(const ModelElement& m) const;
    friend bool operator==(const FunctionCode&, const FunctionCode&) = default;
};

// Codes the function whose graph is {(x, y) : f}. Throws NotFunctionalError
// when some x has two images and InfiniteResidualError when the linear pieces
// found in f leave infinitely many domain points uncovered.
FunctionCode code_function(const Formula& f, Variable x, Variable y, const Assignment& sigma = {});

} // namespace povs

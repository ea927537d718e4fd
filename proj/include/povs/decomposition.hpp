#pragma once

#include <optional>
#include <vector>

#include "povs/formula.hpp"
#include "povs/reference_model.hpp"

namespace povs {

struct Endpoint {
    enum class Kind { NegInf, Value, PosInf };
    Kind kind = Kind::NegInf;
    ModelElement value;

    static Endpoint neg_inf() { return {Kind::NegInf, {}}; }
    static Endpoint pos_inf() { return {Kind::PosInf, {}}; }
    static Endpoint at(ModelElement v) { return {Kind::Value, std::move(v)}; }

    bool finite() const { return kind == Kind::Value; }
    std::string str() const;
    friend bool operator==(const Endpoint& a, const Endpoint& b) {
        return a.kind == b.kind && (a.kind != Kind::Value || a.value == b.value);
    }
};

Ordering compare(const Endpoint& a, const Endpoint& b);

enum class Polarity { Finite, Cofinite };

// A finite set of cosets (Finite) or the complement of one (Cofinite).
// Members are kept sorted in the quotient order and free of duplicates.
class CosetSet {
public:
    static CosetSet none() { return CosetSet(Polarity::Finite, {}); }
    static CosetSet all() { return CosetSet(Polarity::Cofinite, {}); }
    static CosetSet only(QuotientElement w) { return CosetSet(Polarity::Finite, {std::move(w)}); }
    static CosetSet except(QuotientElement w) { return CosetSet(Polarity::Cofinite, {std::move(w)}); }
    CosetSet(Polarity p, std::vector<QuotientElement> members);

    Polarity polarity() const { return polarity_; }
    const std::vector<QuotientElement>& members() const { return members_; }
    bool is_empty() const { return polarity_ == Polarity::Finite && members_.empty(); }
    bool is_all() const { return polarity_ == Polarity::Cofinite && members_.empty(); }
    bool contains(const QuotientElement& w) const;

    CosetSet complement() const { return CosetSet(flip(polarity_), members_); }
    CosetSet intersect(const CosetSet& o) const;
    CosetSet unite(const CosetSet& o) const;

    friend bool operator==(const CosetSet&, const CosetSet&) = default;

private:
    static Polarity flip(Polarity p) { return p == Polarity::Finite ? Polarity::Cofinite : Polarity::Finite; }
    Polarity polarity_;
    std::vector<QuotientElement> members_;
};

// (a, b) intersected with the preimage of a coset pattern. Small when the
// pattern is Finite, large when Cofinite.
struct NearInterval {
    Endpoint a, b;
    CosetSet cosets = CosetSet::all();

    bool is_large() const { return cosets.polarity() == Polarity::Cofinite; }
    bool contains(const ModelElement& m) const;
    friend bool operator==(const NearInterval&, const NearInterval&) = default;
};

// A unary definable set as finitely many points plus pairwise disjoint
// near-intervals, in canonical form: every listed point or piece endpoint is
// a place where the set stops looking locally like a single near-interval.
struct Decomposition {
    std::vector<ModelElement> points;
    std::vector<NearInterval> pieces;

    bool contains(const ModelElement& m) const;
    bool empty() const { return points.empty() && pieces.empty(); }
    std::string str() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Boolean algebra of unary sets in cell form: sorted breakpoints, the
// membership of each breakpoint, and the coset pattern of each open cell
// between consecutive breakpoints (cells.size() == breakpoints.size() + 1).
class UnarySet {
public:
    static UnarySet everything();
    static UnarySet nothing();
    static UnarySet point(const ModelElement& p);
    static UnarySet below(const ModelElement& p); // (-inf, p)
    static UnarySet above(const ModelElement& p); // (p, +inf)
    static UnarySet cosets(CosetSet c);
    static UnarySet from(const Decomposition& d);

    UnarySet complement() const;
    UnarySet intersect(const UnarySet& o) const;
    UnarySet unite(const UnarySet& o) const;
    UnarySet minus(const UnarySet& o) const { return intersect(o.complement()); }

    bool contains(const ModelElement& m) const;
    Decomposition decomposition() const;

    const std::vector<ModelElement>& breakpoints() const { return breakpoints_; }

private:
    template <typename Op>
    UnarySet combine(const UnarySet& o, Op op) const;
    void canonicalize();
    // Pattern of the cell containing a non-breakpoint m.
    const CosetSet& cell_of(const ModelElement& m) const;

    std::vector<ModelElement> breakpoints_;
    std::vector<bool> member_;
    std::vector<CosetSet> cells_{CosetSet::none()};
};

// Canonical decomposition of { m : f[v := m] } after grounding every other
// variable with sigma. Throws ArityError if other variables stay free and
// ModeError if f mentions the quotient order.
Decomposition decompose(const Formula& f, Variable v, const Assignment& sigma = {});
UnarySet unary_set(const Formula& f, Variable v, const Assignment& sigma = {});

struct NearInteriorResult {
    Decomposition interior;
    std::vector<ModelElement> frontier;
};

NearInteriorResult near_interior(const Decomposition& d);

bool is_small(const Decomposition& d);

// Membership of a quotient-sort formula in the generic type: true iff the
// pullback along pi is large.
bool generic_type_contains(const Formula& f, Variable v, const Assignment& sigma = {});

} // namespace povs

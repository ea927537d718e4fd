#include "povs/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "povs/errors.hpp"
#include "povs/qe.hpp"

namespace povs {

std::string Endpoint::str() const {
    switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Value: return value.str();
    }
    return "?";
}

Ordering compare(const Endpoint& a, const Endpoint& b) {
    auto rank = [](const Endpoint& e) { return e.kind == Endpoint::Kind::NegInf ? 0 : (e.kind == Endpoint::Kind::Value ? 1 : 2); };
    int ra = rank(a), rb = rank(b);
    if (ra != rb)
        return ra < rb ? Ordering::Less : Ordering::Greater;
    if (ra != 1)
        return Ordering::Equal;
    return compare(a.value, b.value);
}

// ---------------------------------------------------------------------------
// CosetSet

CosetSet::CosetSet(Polarity p, std::vector<QuotientElement> members) : polarity_(p), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), QuotientLess{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool CosetSet::contains(const QuotientElement& w) const {
    bool listed = std::binary_search(members_.begin(), members_.end(), w, QuotientLess{});
    return polarity_ == Polarity::Finite ? listed : !listed;
}

namespace {

using Members = std::vector<QuotientElement>;

Members set_op_intersection(const Members& a, const Members& b) {
    Members out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), QuotientLess{});
    return out;
}

Members set_op_union(const Members& a, const Members& b) {
    Members out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), QuotientLess{});
    return out;
}

Members set_op_difference(const Members& a, const Members& b) {
    Members out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), QuotientLess{});
    return out;
}

} // namespace

CosetSet CosetSet::intersect(const CosetSet& o) const {
    if (polarity_ == Polarity::Finite && o.polarity_ == Polarity::Finite)
        return CosetSet(Polarity::Finite, set_op_intersection(members_, o.members_));
    if (polarity_ == Polarity::Finite)
        return CosetSet(Polarity::Finite, set_op_difference(members_, o.members_));
    if (o.polarity_ == Polarity::Finite)
        return CosetSet(Polarity::Finite, set_op_difference(o.members_, members_));
    return CosetSet(Polarity::Cofinite, set_op_union(members_, o.members_));
}

CosetSet CosetSet::unite(const CosetSet& o) const { return complement().intersect(o.complement()).complement(); }

// ---------------------------------------------------------------------------
// NearInterval / Decomposition

bool NearInterval::contains(const ModelElement& m) const {
    Endpoint e = Endpoint::at(m);
    return compare(a, e) == Ordering::Less && compare(e, b) == Ordering::Less && cosets.contains(project(m));
}

bool Decomposition::contains(const ModelElement& m) const {
    for (const auto& p : points)
        if (p == m)
            return true;
    for (const auto& piece : pieces)
        if (piece.contains(m))
            return true;
    return false;
}

std::string Decomposition::str() const {
    std::ostringstream os;
    os << "points {";
    for (std::size_t i = 0; i < points.size(); ++i)
        os << (i ? ", " : "") << points[i].str();
    os << "}";
    for (const auto& p : pieces) {
        os << "; (" << p.a.str() << ", " << p.b.str() << ") " << (p.is_large() ? "cofinite" : "finite") << " {";
        for (std::size_t i = 0; i < p.cosets.members().size(); ++i)
            os << (i ? ", " : "") << p.cosets.members()[i].str();
        os << "}";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// UnarySet

UnarySet UnarySet::everything() {
    UnarySet s;
    s.cells_ = {CosetSet::all()};
    return s;
}

UnarySet UnarySet::nothing() { return UnarySet(); }

UnarySet UnarySet::point(const ModelElement& p) {
    UnarySet s;
    s.breakpoints_ = {p};
    s.member_ = {true};
    s.cells_ = {CosetSet::none(), CosetSet::none()};
    return s;
}

UnarySet UnarySet::below(const ModelElement& p) {
    UnarySet s;
    s.breakpoints_ = {p};
    s.member_ = {false};
    s.cells_ = {CosetSet::all(), CosetSet::none()};
    return s;
}

UnarySet UnarySet::above(const ModelElement& p) {
    UnarySet s;
    s.breakpoints_ = {p};
    s.member_ = {false};
    s.cells_ = {CosetSet::none(), CosetSet::all()};
    return s;
}

UnarySet UnarySet::cosets(CosetSet c) {
    UnarySet s;
    s.cells_ = {std::move(c)};
    return s;
}

UnarySet UnarySet::from(const Decomposition& d) {
    UnarySet s = nothing();
    for (const auto& p : d.points)
        s = s.unite(point(p));
    for (const auto& piece : d.pieces) {
        UnarySet part = cosets(piece.cosets);
        if (piece.a.finite())
            part = part.intersect(above(piece.a.value));
        if (piece.b.finite())
            part = part.intersect(below(piece.b.value));
        s = s.unite(part);
    }
    return s;
}

const CosetSet& UnarySet::cell_of(const ModelElement& m) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), m, RealLess{});
    return cells_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

bool UnarySet::contains(const ModelElement& m) const {
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), m, RealLess{});
    if (it != breakpoints_.end() && *it == m)
        return member_[static_cast<std::size_t>(it - breakpoints_.begin())];
    return cell_of(m).contains(project(m));
}

UnarySet UnarySet::complement() const {
    UnarySet s = *this;
    s.member_.flip();
    for (auto& c : s.cells_)
        c = c.complement();
    return s;
}

template <typename Op>
UnarySet UnarySet::combine(const UnarySet& o, Op op) const {
    UnarySet out;
    out.breakpoints_.clear();
    std::merge(breakpoints_.begin(), breakpoints_.end(), o.breakpoints_.begin(), o.breakpoints_.end(),
               std::back_inserter(out.breakpoints_), RealLess{});
    out.breakpoints_.erase(std::unique(out.breakpoints_.begin(), out.breakpoints_.end()), out.breakpoints_.end());
    out.member_.clear();
    out.cells_.clear();
    // Walk both breakpoint lists in step; i and j index the current cell of
    // each operand.
    std::size_t i = 0, j = 0;
    for (const auto& p : out.breakpoints_) {
        out.cells_.push_back(op(cells_[i], o.cells_[j]));
        bool in_a = (i < breakpoints_.size() && breakpoints_[i] == p) ? member_[i] : cells_[i].contains(project(p));
        bool in_b = (j < o.breakpoints_.size() && o.breakpoints_[j] == p) ? o.member_[j] : o.cells_[j].contains(project(p));
        CosetSet probe_a = in_a ? CosetSet::all() : CosetSet::none();
        CosetSet probe_b = in_b ? CosetSet::all() : CosetSet::none();
        out.member_.push_back(op(probe_a, probe_b).is_all());
        if (i < breakpoints_.size() && breakpoints_[i] == p)
            ++i;
        if (j < o.breakpoints_.size() && o.breakpoints_[j] == p)
            ++j;
    }
    out.cells_.push_back(op(cells_[i], o.cells_[j]));
    out.canonicalize();
    return out;
}

UnarySet UnarySet::intersect(const UnarySet& o) const {
    return combine(o, [](const CosetSet& a, const CosetSet& b) { return a.intersect(b); });
}

UnarySet UnarySet::unite(const UnarySet& o) const {
    return combine(o, [](const CosetSet& a, const CosetSet& b) { return a.unite(b); });
}

void UnarySet::canonicalize() {
    std::vector<ModelElement> bps;
    std::vector<bool> mem;
    std::vector<CosetSet> cells{cells_.front()};
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
        const CosetSet& right = cells_[k + 1];
        // A breakpoint is removable when both neighbouring cells carry the
        // same pattern and the point itself agrees with that pattern.
        if (cells.back() == right && member_[k] == right.contains(project(breakpoints_[k])))
            continue;
        bps.push_back(breakpoints_[k]);
        mem.push_back(member_[k]);
        cells.push_back(right);
    }
    breakpoints_ = std::move(bps);
    member_ = std::move(mem);
    cells_ = std::move(cells);
}

Decomposition UnarySet::decomposition() const {
    Decomposition d;
    for (std::size_t k = 0; k < breakpoints_.size(); ++k)
        if (member_[k])
            d.points.push_back(breakpoints_[k]);
    // An isolated point outside the surrounding pattern does not cut the
    // piece: it is listed among the points and the piece runs through it.
    auto joins = [&](std::size_t k) {
        return member_[k] && cells_[k] == cells_[k + 1] && !cells_[k].contains(project(breakpoints_[k]));
    };
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        std::size_t last = k;
        while (last < breakpoints_.size() && joins(last))
            ++last;
        if (!cells_[k].is_empty()) {
            Endpoint a = k == 0 ? Endpoint::neg_inf() : Endpoint::at(breakpoints_[k - 1]);
            Endpoint b = last == breakpoints_.size() ? Endpoint::pos_inf() : Endpoint::at(breakpoints_[last]);
            d.pieces.push_back({a, b, cells_[k]});
        }
        k = last;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Formulas to sets

namespace {

UnarySet atom_set(const Atom& a, Variable v) {
    if (!a.mentions(v))
        return eval(a, Assignment()) ? UnarySet::everything() : UnarySet::nothing();
    switch (a.kind()) {
    case AtomKind::HomeEq: {
        Rational k = a.home().coeff(v);
        return UnarySet::point(-a.home().constant() / k);
    }
    case AtomKind::HomeLt: {
        Rational k = a.home().coeff(v);
        ModelElement p = -a.home().constant() / k;
        return k.sign() > 0 ? UnarySet::below(p) : UnarySet::above(p);
    }
    case AtomKind::InQ: {
        Rational k = a.home().coeff(v);
        return UnarySet::cosets(CosetSet::only(project(-a.home().constant() / k)));
    }
    case AtomKind::QuotEq: {
        Rational k = a.quot().coeff(v);
        return UnarySet::cosets(CosetSet::only(a.quot().constant() * (Rational(-1) / k)));
    }
    case AtomKind::QuotPrec: throw ModeError("the quotient order does not define a finite union of near-intervals");
    }
    return UnarySet::nothing();
}

bool mentions_prec(const Formula& f) {
    if (f.kind() == FormulaKind::Atom)
        return f.atom().kind() == AtomKind::QuotPrec;
    return std::any_of(f.children().begin(), f.children().end(), mentions_prec);
}

} // namespace

UnarySet unary_set(const Formula& f, Variable v, const Assignment& sigma) {
    if (!v.is_home())
        throw ArityError("decomposition variable " + v.str() + " must be home-sorted");
    Formula g = ground(f, sigma);
    for (auto w : g.free_vars())
        if (w != v)
            throw ArityError("formula has free variable " + w.str() + " besides " + v.str());
    if (mentions_prec(g))
        throw ModeError("decomposition is defined for formulas without the quotient order");
    if (!g.is_quantifier_free())
        g = qe(g, TheoryMode::POVS);
    UnarySet result = UnarySet::nothing();
    for (const auto& clause : dnf_clauses(simplify(g))) {
        UnarySet part = UnarySet::everything();
        for (const auto& l : clause) {
            UnarySet s = atom_set(l.atom, v);
            part = part.intersect(l.positive ? s : s.complement());
        }
        result = result.unite(part);
    }
    return result;
}

Decomposition decompose(const Formula& f, Variable v, const Assignment& sigma) {
    return unary_set(f, v, sigma).decomposition();
}

NearInteriorResult near_interior(const Decomposition& d) {
    NearInteriorResult r;
    r.interior.pieces = d.pieces;
    r.frontier = d.points;
    return r;
}

bool is_small(const Decomposition& d) {
    return std::all_of(d.pieces.begin(), d.pieces.end(), [](const NearInterval& p) { return !p.is_large(); });
}

bool generic_type_contains(const Formula& f, Variable v, const Assignment& sigma) {
    if (v.is_home())
        throw ArityError("generic type variable " + v.str() + " must be quotient-sorted");
    Formula g = ground(f, sigma);
    for (auto w : g.free_vars())
        if (w != v)
            throw ArityError("formula has free variable " + w.str() + " besides " + v.str());
    if (mentions_prec(g))
        throw ModeError("the generic type lives in the unordered quotient");
    Variable x = Variable::home(g.max_var_index() + 1);
    Formula pullback = substitute(g, v, QuotientTerm::pi(HomeTerm::var(x)));
    return !is_small(decompose(pullback, x));
}

} // namespace povs

#include "povs/imaginaries.hpp"

#include <algorithm>
#include <set>

#include "povs/errors.hpp"
#include "povs/qe.hpp"

namespace povs {

UnarySetCode UnarySetCode::of(const Decomposition& d) {
    NearInteriorResult ni = near_interior(d);
    UnarySetCode code;
    code.frontier = ni.frontier;
    std::sort(code.frontier.begin(), code.frontier.end(), RealLess{});
    for (const auto& p : ni.interior.pieces)
        code.pieces.push_back({p.a, p.b, p.cosets});
    return code;
}

Decomposition UnarySetCode::decomposition() const {
    Decomposition d;
    d.points = frontier;
    for (const auto& p : pieces)
        d.pieces.push_back({p.a, p.b, p.cosets});
    return d;
}

bool UnarySetCode::contains(const ModelElement& m) const { return decomposition().contains(m); }

UnarySetCode code_unary_set(const Formula& f, Variable v, const Assignment& sigma) {
    return UnarySetCode::of(decompose(f, v, sigma));
}

bool codes_equal(const UnarySetCode& a, const UnarySetCode& b) { return a == b; }

std::optional<ModelElement> FunctionCode::apply(const ModelElement& m) const {
    for (const auto& [px, py] : exceptional)
        if (px == m)
            return py;
    for (const auto& piece : pieces)
        if (piece.domain.contains(m))
            return m * piece.slope + piece.intercept;
    return std::nullopt;
}

namespace {

struct Line {
    Rational slope;
    ModelElement intercept;
};

struct LineLess {
    bool operator()(const Line& a, const Line& b) const {
        if (a.slope != b.slope)
            return a.slope < b.slope;
        return less(a.intercept, b.intercept);
    }
};

// Lines y = slope*x + intercept along which an equality atom of f vanishes.
void collect_lines(const Formula& f, Variable x, Variable y, std::set<Line, LineLess>& out) {
    if (f.kind() == FormulaKind::Atom) {
        const Atom& a = f.atom();
        if (a.kind() != AtomKind::HomeEq || !a.mentions(y))
            return;
        const HomeTerm& t = a.home();
        Rational k = t.coeff(y);
        out.insert({-t.coeff(x) / k, -t.constant() / k});
        return;
    }
    for (const auto& c : f.children())
        collect_lines(c, x, y, out);
}

UnarySet drop_points(const UnarySet& s) {
    UnarySet pts = UnarySet::nothing();
    for (const auto& p : s.decomposition().points)
        pts = pts.unite(UnarySet::point(p));
    return s.minus(pts);
}

} // namespace

FunctionCode code_function(const Formula& f, Variable x, Variable y, const Assignment& sigma) {
    if (!x.is_home() || !y.is_home() || x == y)
        throw ArityError("code_function needs two distinct home variables");
    Formula g = ground(f, sigma);
    for (auto w : g.free_vars())
        if (w != x && w != y)
            throw ArityError("formula has free variable " + w.str() + " besides " + x.str() + " and " + y.str());
    if (!g.is_quantifier_free())
        g = qe(g, TheoryMode::POVS);
    g = simplify(g);

    Variable y2 = Variable::home(std::max({g.max_var_index(), x.index, y.index}) + 1);
    Formula fn = Formula::forall(
        x, Formula::forall(y, Formula::forall(y2, Formula::implies(Formula::conj({g, substitute(g, y, HomeTerm::var(y2))}),
                                                                   Formula::atom(Atom::home_eq(HomeTerm::var(y) - HomeTerm::var(y2)))))));
    if (!decide_sentence(fn, TheoryMode::POVS))
        throw NotFunctionalError("formula does not define a function of " + x.str());

    std::set<Line, LineLess> lines;
    collect_lines(g, x, y, lines);

    std::vector<Line> kept;
    std::vector<UnarySet> domains;
    for (const auto& line : lines) {
        HomeTerm image = HomeTerm::var(x, line.slope) + HomeTerm(line.intercept);
        UnarySet d = drop_points(unary_set(substitute(g, y, image), x));
        kept.push_back(line);
        domains.push_back(d);
    }
    // Distinct lines meet in at most one point, so overlaps are finite; they
    // move to the exceptional list.
    for (std::size_t i = 0; i < domains.size(); ++i)
        for (std::size_t j = i + 1; j < domains.size(); ++j) {
            UnarySet overlap = domains[i].intersect(domains[j]);
            if (!overlap.decomposition().pieces.empty())
                throw InvariantError("two linear pieces share an infinite domain");
            domains[i] = domains[i].minus(overlap);
            domains[j] = domains[j].minus(overlap);
        }

    FunctionCode code;
    UnarySet covered = UnarySet::nothing();
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Decomposition d = domains[i].decomposition();
        if (d.empty())
            continue;
        covered = covered.unite(domains[i]);
        code.pieces.push_back({kept[i].slope, kept[i].intercept, UnarySetCode::of(d)});
    }

    UnarySet domain = unary_set(Formula::exists(y, g), x);
    Decomposition residual = domain.minus(covered).decomposition();
    if (!residual.pieces.empty())
        throw InfiniteResidualError("linear pieces leave an infinite part of the domain uncovered");
    for (const auto& p : residual.points) {
        Decomposition fiber = decompose(g, y, Assignment().set(x, p));
        if (fiber.points.size() != 1 || !fiber.pieces.empty())
            throw InvariantError("fiber over " + p.str() + " is not a single point");
        code.exceptional.emplace_back(p, fiber.points.front());
    }
    return code;
}

} // namespace povs

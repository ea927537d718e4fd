#include "povs/terms.hpp"

#include <sstream>

#include "povs/errors.hpp"

namespace povs {

namespace {

using VarCoeffs = std::map<Variable, Rational>;

void add_scaled(VarCoeffs& into, const VarCoeffs& from, const Rational& scale) {
    for (const auto& [v, c] : from) {
        auto [it, inserted] = into.try_emplace(v, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second.is_zero())
                into.erase(it);
        }
    }
}

void render_sum(std::ostringstream& os, bool& first, const Rational& c, const std::string& atom) {
    Rational mag = c.abs();
    if (first)
        os << (c.sign() < 0 ? "-" : "");
    else
        os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (atom.empty()) {
        os << mag;
        return;
    }
    if (mag != Rational(1))
        os << mag << '*';
    os << atom;
}

void render_combination(std::ostringstream& os, bool& first, const CoeffMap& coeffs) {
    for (const auto& [k, c] : coeffs)
        render_sum(os, first, c, k == 0 ? std::string() : "r" + std::to_string(prime_at(k)));
}

} // namespace

// ---------------------------------------------------------------------------
// Assignment

Assignment& Assignment::set(Variable v, ModelElement value) {
    if (!v.is_home())
        throw SortError("assigning a home element to quotient variable " + v.str());
    values_.insert_or_assign(v, Value(std::move(value)));
    return *this;
}

Assignment& Assignment::set(Variable v, QuotientElement value) {
    if (v.is_home())
        throw SortError("assigning a quotient element to home variable " + v.str());
    values_.insert_or_assign(v, Value(std::move(value)));
    return *this;
}

const ModelElement& Assignment::home(Variable v) const {
    auto it = values_.find(v);
    if (it == values_.end())
        throw UnboundVariableError("unbound variable " + v.str());
    return std::get<ModelElement>(it->second);
}

const QuotientElement& Assignment::quot(Variable v) const {
    auto it = values_.find(v);
    if (it == values_.end())
        throw UnboundVariableError("unbound variable " + v.str());
    return std::get<QuotientElement>(it->second);
}

// ---------------------------------------------------------------------------
// HomeTerm

HomeTerm HomeTerm::var(Variable v, const Rational& coeff) {
    if (!v.is_home())
        throw SortError("quotient variable " + v.str() + " used as a home term");
    HomeTerm t;
    if (!coeff.is_zero())
        t.coeffs_.emplace(v, coeff);
    return t;
}

Rational HomeTerm::coeff(Variable v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

VarSet HomeTerm::vars() const {
    VarSet s;
    for (const auto& [v, c] : coeffs_)
        s.insert(v);
    return s;
}

HomeTerm HomeTerm::without(Variable v) const {
    HomeTerm t = *this;
    t.coeffs_.erase(v);
    return t;
}

HomeTerm HomeTerm::with_constant(ModelElement c) const {
    HomeTerm t = *this;
    t.constant_ = std::move(c);
    return t;
}

HomeTerm HomeTerm::substitute(Variable v, const HomeTerm& t) const {
    auto it = coeffs_.find(v);
    if (it == coeffs_.end())
        return *this;
    Rational c = it->second;
    return without(v) + t * c;
}

ModelElement HomeTerm::evaluate(const Assignment& a) const {
    ModelElement r = constant_;
    for (const auto& [v, c] : coeffs_)
        r += a.home(v) * c;
    return r;
}

HomeTerm HomeTerm::operator-() const { return *this * Rational(-1); }

HomeTerm& HomeTerm::operator+=(const HomeTerm& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(1));
    constant_ += o.constant_;
    return *this;
}

HomeTerm& HomeTerm::operator-=(const HomeTerm& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(-1));
    constant_ -= o.constant_;
    return *this;
}

HomeTerm& HomeTerm::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        constant_ = ModelElement();
        return *this;
    }
    for (auto& [v, c] : coeffs_)
        c *= s;
    constant_ *= s;
    return *this;
}

std::string HomeTerm::str() const { return render_home_sum(coeffs_, constant_); }

std::string render_home_sum(const std::map<Variable, Rational>& coeffs, const ModelElement& constant) {
    if (coeffs.empty() && constant.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coeffs)
        render_sum(os, first, c, v.str());
    render_combination(os, first, constant.coeffs());
    return os.str();
}

// ---------------------------------------------------------------------------
// QuotientTerm

QuotientTerm QuotientTerm::var(Variable v, const Rational& coeff) {
    if (v.is_home())
        throw SortError("home variable " + v.str() + " used as a quotient term");
    QuotientTerm t;
    if (!coeff.is_zero())
        t.coeffs_.emplace(v, coeff);
    return t;
}

QuotientTerm QuotientTerm::pi(const HomeTerm& t) {
    QuotientTerm q;
    q.pushed_ = t;
    q.normalize();
    return q;
}

void QuotientTerm::normalize() {
    if (!pushed_.constant().is_zero()) {
        constant_ += project(pushed_.constant());
        pushed_ = pushed_.with_constant(ModelElement());
    }
}

Rational QuotientTerm::coeff(Variable v) const {
    if (v.is_home())
        return pushed_.coeff(v);
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool QuotientTerm::mentions(Variable v) const { return v.is_home() ? pushed_.mentions(v) : coeffs_.count(v) != 0; }

VarSet QuotientTerm::vars() const {
    VarSet s = pushed_.vars();
    for (const auto& [v, c] : coeffs_)
        s.insert(v);
    return s;
}

QuotientTerm QuotientTerm::without(Variable v) const {
    QuotientTerm t = *this;
    if (v.is_home())
        t.pushed_ = t.pushed_.without(v);
    else
        t.coeffs_.erase(v);
    return t;
}

QuotientTerm QuotientTerm::substitute(Variable v, const HomeTerm& t) const {
    if (!v.is_home())
        throw SortError("substituting a home term for quotient variable " + v.str());
    QuotientTerm r = *this;
    r.pushed_ = pushed_.substitute(v, t);
    r.normalize();
    return r;
}

QuotientTerm QuotientTerm::substitute(Variable v, const QuotientTerm& t) const {
    if (v.is_home())
        throw SortError("substituting a quotient term for home variable " + v.str());
    auto it = coeffs_.find(v);
    if (it == coeffs_.end())
        return *this;
    Rational c = it->second;
    return without(v) + t * c;
}

QuotientElement QuotientTerm::evaluate(const Assignment& a) const {
    QuotientElement r = constant_ + project(pushed_.evaluate(a));
    for (const auto& [v, c] : coeffs_)
        r += a.quot(v) * c;
    return r;
}

QuotientTerm QuotientTerm::operator-() const { return *this * Rational(-1); }

QuotientTerm& QuotientTerm::operator+=(const QuotientTerm& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(1));
    pushed_ += o.pushed_;
    constant_ += o.constant_;
    return *this;
}

QuotientTerm& QuotientTerm::operator-=(const QuotientTerm& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(-1));
    pushed_ -= o.pushed_;
    constant_ -= o.constant_;
    return *this;
}

QuotientTerm& QuotientTerm::operator*=(const Rational& s) {
    if (s.is_zero()) {
        *this = QuotientTerm();
        return *this;
    }
    for (auto& [v, c] : coeffs_)
        c *= s;
    pushed_ *= s;
    constant_ *= s;
    return *this;
}

std::string QuotientTerm::str() const { return render_quotient_sum(coeffs_, pushed_.coeffs(), constant_); }

std::string render_quotient_sum(const std::map<Variable, Rational>& coeffs, const std::map<Variable, Rational>& pushed,
                                const QuotientElement& constant) {
    if (coeffs.empty() && pushed.empty() && constant.is_zero())
        return "0_Q";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : coeffs)
        render_sum(os, first, c, v.str());
    // pi is linear, so it is shown distributed over the variables.
    for (const auto& [v, c] : pushed)
        render_sum(os, first, c, "pi(" + v.str() + ")");
    if (!constant.is_zero())
        os << (first ? "" : " + ") << constant.str();
    return os.str();
}

} // namespace povs

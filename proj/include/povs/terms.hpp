#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "povs/model_element.hpp"

namespace povs {

enum class Sort { Home, Quotient };

struct Variable {
    Sort sort = Sort::Home;
    int index = 0;

    static Variable home(int i) { return {Sort::Home, i}; }
    static Variable quot(int i) { return {Sort::Quotient, i}; }

    bool is_home() const { return sort == Sort::Home; }
    std::string str() const { return (sort == Sort::Home ? "x" : "u") + std::to_string(index); }

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable& a, const Variable& b) {
        if (a.sort != b.sort)
            return a.sort == Sort::Home ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.index <=> b.index;
    }
};

using VarSet = std::set<Variable>;

using Value = std::variant<ModelElement, QuotientElement>;

// Sort-respecting valuation of variables in the reference model.
class Assignment {
public:
    Assignment() = default;

    Assignment& set(Variable v, ModelElement value);
    Assignment& set(Variable v, QuotientElement value);

    bool binds(Variable v) const { return values_.count(v) != 0; }
    const ModelElement& home(Variable v) const;
    const QuotientElement& quot(Variable v) const;
    const std::map<Variable, Value>& values() const { return values_; }

private:
    std::map<Variable, Value> values_;
};

// Linear home-sort term: sum of rational multiples of home variables plus a
// constant element. Zero coefficients are never stored.
class HomeTerm {
public:
    HomeTerm() = default;
    HomeTerm(ModelElement constant) : constant_(std::move(constant)) {}
    static HomeTerm var(Variable v, const Rational& coeff = Rational(1));

    const std::map<Variable, Rational>& coeffs() const { return coeffs_; }
    const ModelElement& constant() const { return constant_; }
    Rational coeff(Variable v) const;
    bool mentions(Variable v) const { return coeffs_.count(v) != 0; }
    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }
    VarSet vars() const;

    HomeTerm without(Variable v) const;
    HomeTerm with_constant(ModelElement c) const;
    HomeTerm substitute(Variable v, const HomeTerm& t) const;
    ModelElement evaluate(const Assignment& a) const;

    HomeTerm operator-() const;
    HomeTerm& operator+=(const HomeTerm& o);
    HomeTerm& operator-=(const HomeTerm& o);
    HomeTerm& operator*=(const Rational& s);
    friend HomeTerm operator+(HomeTerm a, const HomeTerm& b) { return a += b; }
    friend HomeTerm operator-(HomeTerm a, const HomeTerm& b) { return a -= b; }
    friend HomeTerm operator*(HomeTerm a, const Rational& s) { return a *= s; }
    friend HomeTerm operator*(const Rational& s, HomeTerm a) { return a *= s; }

    friend bool operator==(const HomeTerm&, const HomeTerm&) = default;

    std::string str() const;

private:
    std::map<Variable, Rational> coeffs_;
    ModelElement constant_;
};

// Linear quotient-sort term: sum of rational multiples of quotient variables,
// plus a single application of pi to a variable-only home term, plus a
// quotient constant. pi is linear, so every application of pi is folded into
// `pushed`, and the image of any home constant is folded into `constant`.
class QuotientTerm {
public:
    QuotientTerm() = default;
    QuotientTerm(QuotientElement constant) : constant_(std::move(constant)) {}
    static QuotientTerm var(Variable v, const Rational& coeff = Rational(1));
    static QuotientTerm pi(const HomeTerm& t);

    const std::map<Variable, Rational>& coeffs() const { return coeffs_; }
    const HomeTerm& pushed() const { return pushed_; }
    const QuotientElement& constant() const { return constant_; }

    Rational coeff(Variable v) const;
    bool mentions(Variable v) const;
    bool is_constant() const { return coeffs_.empty() && pushed_.is_constant(); }
    bool is_zero() const { return is_constant() && constant_.is_zero(); }
    VarSet vars() const;

    QuotientTerm without(Variable v) const;
    QuotientTerm substitute(Variable v, const HomeTerm& t) const;
    QuotientTerm substitute(Variable v, const QuotientTerm& t) const;
    QuotientElement evaluate(const Assignment& a) const;

    QuotientTerm operator-() const;
    QuotientTerm& operator+=(const QuotientTerm& o);
    QuotientTerm& operator-=(const QuotientTerm& o);
    QuotientTerm& operator*=(const Rational& s);
    friend QuotientTerm operator+(QuotientTerm a, const QuotientTerm& b) { return a += b; }
    friend QuotientTerm operator-(QuotientTerm a, const QuotientTerm& b) { return a -= b; }
    friend QuotientTerm operator*(QuotientTerm a, const Rational& s) { return a *= s; }
    friend QuotientTerm operator*(const Rational& s, QuotientTerm a) { return a *= s; }

    friend bool operator==(const QuotientTerm&, const QuotientTerm&) = default;

    std::string str() const;

private:
    void normalize();
    std::map<Variable, Rational> coeffs_;
    HomeTerm pushed_;
    QuotientElement constant_;
};

// Renders a formal sum of variables plus a home constant; "0" when empty.
std::string render_home_sum(const std::map<Variable, Rational>& coeffs, const ModelElement& constant);

// Renders quotient variables plus pi(pushed + section(constant)); "0_Q" when empty.
std::string render_quotient_sum(const std::map<Variable, Rational>& coeffs, const std::map<Variable, Rational>& pushed,
                                const QuotientElement& constant);

} // namespace povs

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "povs/rational.hpp"

namespace povs {

// Basis index 0 denotes the element 1; index k >= 1 denotes the square root
// of the k-th prime (k = 1 -> sqrt 2, k = 2 -> sqrt 3, k = 3 -> sqrt 5, ...).
using BasisIndex = int;

std::int64_t prime_at(BasisIndex k);                      // k >= 1
std::optional<BasisIndex> index_of_prime(std::int64_t p); // nullopt if not prime

using CoeffMap = std::map<BasisIndex, Rational>;

// Element of the home sort of the reference model: a rational combination of
// 1 and square roots of distinct primes. Zero coefficients are never stored,
// so an element is zero iff its map is empty.
class ModelElement {
public:
    ModelElement() = default;
    ModelElement(const Rational& r);
    explicit ModelElement(CoeffMap coeffs);

    static ModelElement sqrt_prime(BasisIndex k, const Rational& scale = Rational(1));

    const CoeffMap& coeffs() const { return coeffs_; }
    Rational coeff(BasisIndex k) const;
    Rational rational_part() const { return coeff(0); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    BasisIndex max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    // Exact sign under the real embedding.
    int sign() const;

    // Enclosure lo <= value <= hi with hi - lo <= (sum |c_k|) * 2^-bits.
    std::pair<Rational, Rational> enclosure(unsigned bits) const;
    double approx() const;
    std::string decimal(unsigned digits) const;

    ModelElement operator-() const;
    ModelElement& operator+=(const ModelElement& o);
    ModelElement& operator-=(const ModelElement& o);
    ModelElement& operator*=(const Rational& s);
    friend ModelElement operator+(ModelElement a, const ModelElement& b) { return a += b; }
    friend ModelElement operator-(ModelElement a, const ModelElement& b) { return a -= b; }
    friend ModelElement operator*(ModelElement a, const Rational& s) { return a *= s; }
    friend ModelElement operator*(const Rational& s, ModelElement a) { return a *= s; }
    friend ModelElement operator/(ModelElement a, const Rational& s) { return a *= Rational(1) / s; }

    // Structural equality coincides with equality of reals (linear independence).
    friend bool operator==(const ModelElement& a, const ModelElement& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;
    static ModelElement parse(std::string_view text);

private:
    void prune();
    CoeffMap coeffs_;
};

enum class Ordering { Less, Equal, Greater };

Ordering compare(const ModelElement& a, const ModelElement& b);

inline bool less(const ModelElement& a, const ModelElement& b) { return compare(a, b) == Ordering::Less; }

// Total order used for sorting; agrees with the real order.
struct RealLess {
    bool operator()(const ModelElement& a, const ModelElement& b) const { return less(a, b); }
};

// A rational strictly between a and b (requires a < b). Either side may be absent
// (unbounded).
Rational rational_between(const std::optional<ModelElement>& lo, const std::optional<ModelElement>& hi);

// Smallest integer j with value <= j.
mpz_class ceil(const ModelElement& value);

// Element of the quotient sort M/Q. Only indices >= 1 are stored.
class QuotientElement {
public:
    QuotientElement() = default;
    explicit QuotientElement(CoeffMap coeffs);

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(BasisIndex k) const;

    // Representative with zero rational part.
    ModelElement section() const { return ModelElement(coeffs_); }

    QuotientElement operator-() const;
    QuotientElement& operator+=(const QuotientElement& o);
    QuotientElement& operator-=(const QuotientElement& o);
    QuotientElement& operator*=(const Rational& s);
    friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
    friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
    friend QuotientElement operator*(QuotientElement a, const Rational& s) { return a *= s; }
    friend QuotientElement operator*(const Rational& s, QuotientElement a) { return a *= s; }

    friend bool operator==(const QuotientElement& a, const QuotientElement& b) { return a.coeffs_ == b.coeffs_; }

    // Rendered as the image of its section, e.g. "pi(r2 - 1/2*r3)"; zero is "0_Q".
    std::string str() const;

private:
    void prune();
    CoeffMap coeffs_;
};

QuotientElement project(const ModelElement& a);

// The quotient order: lexicographic on coefficient vectors over basis indices
// 1 < 2 < ... . Returns the sign of the leading nonzero coefficient of a - b.
Ordering quotient_compare(const QuotientElement& a, const QuotientElement& b);
int quotient_sign(const QuotientElement& a);

struct QuotientLess {
    bool operator()(const QuotientElement& a, const QuotientElement& b) const {
        return quotient_compare(a, b) == Ordering::Less;
    }
};

} // namespace povs

#include "povs/model_element.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace povs {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t>& prime_table() {
    static std::vector<std::int64_t> table{2};
    return table;
}

std::mutex& prime_mutex() {
    static std::mutex m;
    return m;
}

void add_scaled(CoeffMap& into, const CoeffMap& from, const Rational& scale) {
    for (const auto& [k, c] : from) {
        auto [it, inserted] = into.try_emplace(k, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second.is_zero())
                into.erase(it);
        }
    }
}

// floor(sqrt(p) * 2^bits)
mpz_class scaled_sqrt_floor(std::int64_t p, unsigned bits) {
    mpz_class v(static_cast<long>(p));
    v <<= 2 * bits;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

Rational dyadic(const mpz_class& n, unsigned bits) {
    mpz_class d(1);
    d <<= bits;
    return Rational(mpq_class(n, d));
}

} // namespace

std::int64_t prime_at(BasisIndex k) {
    if (k < 1)
        throw std::invalid_argument("basis index must be >= 1");
    std::lock_guard lock(prime_mutex());
    auto& table = prime_table();
    while (static_cast<BasisIndex>(table.size()) < k) {
        std::int64_t n = table.back() + 1;
        while (!is_prime(n))
            ++n;
        table.push_back(n);
    }
    return table[static_cast<std::size_t>(k - 1)];
}

std::optional<BasisIndex> index_of_prime(std::int64_t p) {
    if (!is_prime(p))
        return std::nullopt;
    BasisIndex k = 1;
    while (prime_at(k) < p)
        ++k;
    return k;
}

// ---------------------------------------------------------------------------
// ModelElement

ModelElement::ModelElement(const Rational& r) {
    if (!r.is_zero())
        coeffs_.emplace(0, r);
}

ModelElement::ModelElement(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& [k, c] : coeffs_)
        if (k < 0)
            throw std::invalid_argument("negative basis index");
    prune();
}

ModelElement ModelElement::sqrt_prime(BasisIndex k, const Rational& scale) {
    return ModelElement(CoeffMap{{k, scale}});
}

void ModelElement::prune() {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

Rational ModelElement::coeff(BasisIndex k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::pair<Rational, Rational> ModelElement::enclosure(unsigned bits) const {
    Rational lo = coeff(0), hi = coeff(0);
    for (const auto& [k, c] : coeffs_) {
        if (k == 0)
            continue;
        mpz_class s = scaled_sqrt_floor(prime_at(k), bits);
        Rational below = dyadic(s, bits);
        Rational above = dyadic(s + 1, bits);
        if (c.sign() > 0) {
            lo += c * below;
            hi += c * above;
        } else {
            lo += c * above;
            hi += c * below;
        }
    }
    return {lo, hi};
}

int ModelElement::sign() const {
    if (coeffs_.empty())
        return 0;
    if (is_rational())
        return coeffs_.begin()->second.sign();
    if (coeffs_.size() == 1)
        return coeffs_.begin()->second.sign();
    // One irrational term plus a rational part: compare squares.
    if (coeffs_.size() == 2 && coeffs_.begin()->first == 0) {
        Rational r = coeffs_.begin()->second;
        auto irr = coeffs_.rbegin();
        const Rational& c = irr->second;
        if (r.sign() == c.sign())
            return r.sign();
        Rational rhs = c * c * Rational(prime_at(irr->first));
        return r * r > rhs ? r.sign() : c.sign();
    }
    // A nonzero element has a nonzero real value, so refinement terminates.
    for (unsigned bits = 32;; bits *= 2) {
        auto [lo, hi] = enclosure(bits);
        if (lo.sign() > 0)
            return 1;
        if (hi.sign() < 0)
            return -1;
    }
}

double ModelElement::approx() const {
    auto [lo, hi] = enclosure(64);
    return ((lo + hi) * Rational(1, 2)).to_double();
}

std::string ModelElement::decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    unsigned bits = static_cast<unsigned>(std::ceil((digits + 4) * 3.33)) + 8;
    Rational total(0);
    for (const auto& [k, c] : coeffs_)
        total += c.abs();
    while (true) {
        auto [lo, hi] = enclosure(bits);
        Rational sl = lo * Rational(mpq_class(scale));
        Rational sh = hi * Rational(mpq_class(scale));
        // Round half away from zero; accept once both ends round identically.
        auto round = [](const Rational& r) {
            Rational half(1, 2);
            return r.sign() >= 0 ? (r + half).floor() : -((-r + half).floor());
        };
        mpz_class a = round(sl), b = round(sh);
        if (a == b || bits > 4096) {
            bool neg = a < 0;
            mpz_class mag = neg ? mpz_class(-a) : a;
            std::string s = mag.get_str();
            if (digits > 0) {
                if (s.size() <= digits)
                    s.insert(0, digits + 1 - s.size(), '0');
                s.insert(s.size() - digits, ".");
            }
            return (neg ? "-" : "") + s;
        }
        bits *= 2;
    }
}

ModelElement ModelElement::operator-() const {
    ModelElement r = *this;
    for (auto& [k, c] : r.coeffs_)
        c = -c;
    return r;
}

ModelElement& ModelElement::operator+=(const ModelElement& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(1));
    return *this;
}

ModelElement& ModelElement::operator-=(const ModelElement& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(-1));
    return *this;
}

ModelElement& ModelElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, c] : coeffs_)
        c *= s;
    return *this;
}

namespace {

std::string render_combination(const CoeffMap& coeffs) {
    if (coeffs.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs) {
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != Rational(1))
                os << mag << '*';
            os << 'r' << prime_at(k);
        }
    }
    return os.str();
}

} // namespace

std::string ModelElement::str() const { return render_combination(coeffs_); }

Ordering compare(const ModelElement& a, const ModelElement& b) {
    int s = (a - b).sign();
    return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

Rational rational_between(const std::optional<ModelElement>& lo, const std::optional<ModelElement>& hi) {
    if (!lo && !hi)
        return Rational(0);
    if (!lo) {
        auto [l, h] = hi->enclosure(32);
        return Rational(mpq_class(l.floor() - 1));
    }
    if (!hi) {
        auto [l, h] = lo->enclosure(32);
        return Rational(mpq_class(h.ceil() + 1));
    }
    if (!less(*lo, *hi))
        throw std::invalid_argument("rational_between: empty interval");
    // Prefer an integer or a half when one fits; otherwise refine the
    // enclosures until they separate and take the midpoint of the gap.
    for (unsigned bits = 8;; bits *= 2) {
        auto [ll, lh] = lo->enclosure(bits);
        auto [hl, hh] = hi->enclosure(bits);
        if (lh < hl) {
            Rational cand(mpq_class(lh.floor() + 1));
            if (cand < hl)
                return cand;
            return (lh + hl) * Rational(1, 2);
        }
    }
}

mpz_class ceil(const ModelElement& value) {
    if (value.is_rational())
        return value.rational_part().ceil();
    // Irrational values are never integers.
    for (unsigned bits = 32;; bits *= 2) {
        auto [lo, hi] = value.enclosure(bits);
        mpz_class a = lo.ceil(), b = hi.ceil();
        if (a == b)
            return a;
    }
}

// ---------------------------------------------------------------------------
// QuotientElement

QuotientElement::QuotientElement(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.erase(0);
    for (const auto& [k, c] : coeffs_)
        if (k < 0)
            throw std::invalid_argument("negative basis index");
    prune();
}

void QuotientElement::prune() {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

Rational QuotientElement::coeff(BasisIndex k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

QuotientElement QuotientElement::operator-() const {
    QuotientElement r = *this;
    for (auto& [k, c] : r.coeffs_)
        c = -c;
    return r;
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(1));
    return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& o) {
    add_scaled(coeffs_, o.coeffs_, Rational(-1));
    return *this;
}

QuotientElement& QuotientElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, c] : coeffs_)
        c *= s;
    return *this;
}

std::string QuotientElement::str() const {
    if (coeffs_.empty())
        return "0_Q";
    return "pi(" + render_combination(coeffs_) + ")";
}

QuotientElement project(const ModelElement& a) { return QuotientElement(a.coeffs()); }

int quotient_sign(const QuotientElement& a) {
    return a.coeffs().empty() ? 0 : a.coeffs().begin()->second.sign();
}

Ordering quotient_compare(const QuotientElement& a, const QuotientElement& b) {
    int s = quotient_sign(a - b);
    return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

} // namespace povs

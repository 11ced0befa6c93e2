#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/rational.hpp"

namespace holonomy {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// Canonical form: no trailing zero coefficients.  The zero polynomial has an
/// empty coefficient list and its degree is a distinguished sentinel
/// (std::nullopt), never -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
    static Poly variable() { return Poly({0, 1}); }
    /// c * w^k
    static Poly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<long>(c_.size()) - 1;
    }
    /// Degree of a nonzero polynomial; throws on zero.
    long deg() const {
        if (c_.empty()) throw precondition_error("deg() of zero polynomial");
        return static_cast<long>(c_.size()) - 1;
    }
    const Rational& coeff(long i) const {
        static const Rational zero(0);
        if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const Rational& leading() const {
        if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    /// Index of the lowest nonzero coefficient (valuation at w = 0).
    long valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<long>(i);
        throw precondition_error("valuation of zero polynomial");
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Poly pow(unsigned long e) const;
    Rational evaluate(const Rational& x) const;
    /// p(w + a)
    Poly taylor_shift(const Rational& a) const;
    /// w^n * p(1/w) for the substitution at infinity; n >= deg(p).
    Poly reverse(long n) const;
    /// Multiply by w^k.
    Poly shift_up(std::size_t k) const;

    /// Removes the rational content: returns {content, primitive integer part}
    /// with the primitive part having integer coefficients, positive leading
    /// coefficient and content * primitive == *this.
    std::pair<Rational, Poly> primitive_parts() const;
    Poly primitive() const { return primitive_parts().second; }
    Poly monic() const;

    std::string to_string(const std::string& var = "w") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// Quotient and remainder over Q; divisor nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Exact division; throws internal_error if the remainder is nonzero.
Poly poly_exact_div(const Poly& a, const Poly& b);
/// Primitive gcd via a primitive pseudo-remainder sequence (monic zero-safe).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Yun decomposition: product of factor^multiplicity equals p up to content,
/// factors squarefree and pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_split(const Poly& p);

/// All rational roots with multiplicities, via integer divisor candidates of
/// the leading/trailing coefficients after clearing denominators.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

/// D5 contract: either the inverse of a mod p, or a discovered nontrivial
/// factor of p when gcd(a, p) is not constant.  a == 0 mod p throws.
struct InvertModResult {
    bool ok;     // true: value is the inverse; false: value is a factor of p
    Poly value;  // inverse or discovered factor (primitive)
};
InvertModResult invert_mod(const Poly& a, const Poly& p);

}  // namespace holonomy

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holonomy {

/// Arbitrary-precision rational scalar.  Always stored in lowest terms with
/// a positive denominator (mpq canonical form); every operation is exact.
using Rational = mpq_class;
using Integer = mpz_class;

/// Error categories used across the library.  The CLI maps them to exit codes.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct no_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" in base 10.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw precondition_error("malformed rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::size_t bit_length(const Integer& z) {
    if (z == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

/// Cost proxy for pivot selection: bits of numerator plus denominator.
inline std::size_t bit_length(const Rational& r) {
    return bit_length(Integer(r.get_num())) + bit_length(Integer(r.get_den()));
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    if (inv && b == 0) throw precondition_error("zero raised to negative power");
    Rational acc(1);
    while (n) {
        if (n & 1ul) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    acc.canonicalize();
    return acc;
}

}  // namespace holonomy

#pragma once

#include <gmpxx.h>

#include <string>

#include "mpair/errors.hpp"

namespace mpair {

// All arithmetic in the engine is exact.  Pairing values such as
// 117071517415 arise from intermediates well past 64 bits, so both
// integers and rationals are arbitrary precision (GMP).  mpq_class is
// always stored canonicalized: reduced, denominator positive.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_odd(const Rational& r) {
    if (!is_integer(r)) throw Error("parity of a non-integer requested: " + r.get_str());
    return mpz_odd_p(r.get_num().get_mpz_t()) != 0;
}

// "num/den" in lowest terms, plain "n" when integral.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// C(n, k) with the bounded convention: zero unless 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    unsigned n = e;
    while (n) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Int pow2(unsigned e) { return int_pow(2, e); }

}  // namespace mpair

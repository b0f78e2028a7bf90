#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>
#include "polymom/error.hpp"

namespace polymom {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// arithmetic; raw (num,den) construction must go through rat_make.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_make(Int num, Int den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_make(long num, long den = 1) { return rat_make(Int(num), Int(den)); }

inline Int int_factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int int_binom(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// multinomial(sum parts; parts)
inline Int int_multinomial(const std::vector<int>& parts) {
    long total = 0;
    Int r(1);
    for (int p : parts) {
        total += p;
        r *= int_binom(total, p);
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw validation_error("zero to a negative power");
        Rat inv = Rat(1) / base;
        return rat_pow(inv, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;  // powers of a canonical rational are canonical
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_dbl(const Rat& q) { return q.get_d(); }

// Decimal expansion with the given number of significant digits, exact
// rounding via integer long division (used by the CLI --decimal path).
std::string rat_decimal(const Rat& q, int digits);

} // namespace polymom

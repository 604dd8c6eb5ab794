#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sunbeam {

// Arbitrary-precision integers and exact rationals. Coefficients in the
// permanent expansion reach ~n^n for n-photon transitions, so fixed-width
// integers are not an option beyond n ~ 15.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Exact binomial coefficient C(n, k) for non-negative integer arguments.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

inline double to_double(const Rat& r) {
    return r.get_d();
}

}  // namespace sunbeam

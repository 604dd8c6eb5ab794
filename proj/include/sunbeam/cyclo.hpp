#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sunbeam/rational.hpp"

#include "json.hpp"

namespace sunbeam {

/// The N-th cyclotomic polynomial Phi_N over the integers, ascending
/// coefficient order. Monic, degree phi(N), divides x^N - 1 exactly.
class CyclotomicPolynomial {
public:
    explicit CyclotomicPolynomial(int order);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

private:
    int order_;
    std::vector<Int> coeffs_;
};

CyclotomicPolynomial cyclotomic_polynomial(int order);

/// Element of Q[w]/(w^N - 1) for a fixed order N, with w the fundamental
/// N-th root of unity. Coefficient p multiplies w^p. Arithmetic stays in
/// the quotient by w^N - 1 (exponents wrap mod N); canonicalization and
/// zero testing go through reduction modulo Phi_N.
///
/// Values are immutable in spirit: all operations below return fresh
/// values and never alias, so CycloPoly is safe to share across threads.
class CycloPoly {
public:
    explicit CycloPoly(int order);

    /// w^p with Euclidean wrapping of p (negative exponents allowed).
    static CycloPoly from_power(int order, long p);
    static CycloPoly constant(int order, const Rat& value);

    int order() const { return order_; }
    const Rat& operator[](int p) const { return coeffs_[static_cast<size_t>(p)]; }
    Rat& coeff(int p) { return coeffs_[static_cast<size_t>(p)]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    CycloPoly operator+(const CycloPoly& rhs) const;
    CycloPoly operator-(const CycloPoly& rhs) const;
    CycloPoly operator*(const CycloPoly& rhs) const;
    CycloPoly& operator+=(const CycloPoly& rhs);
    CycloPoly scaled(const Rat& factor) const;
    /// Multiplication by w^s in the quotient ring (cyclic coefficient shift).
    CycloPoly shifted(long s) const;

    /// Exact vector equality in Q[w]/(w^N - 1) (no Phi_N reduction).
    bool operator==(const CycloPoly& rhs) const;
    bool operator!=(const CycloPoly& rhs) const { return !(*this == rhs); }

    /// Canonical representative modulo Phi_N: degree < phi(N), padded back
    /// to length N with zeros. Idempotent.
    CycloPoly reduced() const;

    /// True iff the value is zero as an algebraic number, i.e. the
    /// representative vanishes modulo Phi_N. Exact, no floating point.
    bool is_zero() const;

    /// Sum_p coeffs[p] * exp(2 pi i p / N) in double precision.
    std::complex<double> eval_numeric() const;

    /// The value as an exact rational when the reduced form is constant.
    std::optional<Rat> as_constant() const;

    /// "c0 + c1*w + c2*w^2 + ..." with exact rationals as "p/q".
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    int order_;
    std::vector<Rat> coeffs_;
};

}  // namespace sunbeam

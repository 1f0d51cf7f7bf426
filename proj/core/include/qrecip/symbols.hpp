#pragma once

// Quadratic and quartic residue symbols.
//
// quartic_jacobi is the production evaluator: a Euclidean loop driven by the
// supplementary laws and quartic reciprocity, never factoring anything.
// The *_oracle functions compute the same values from Euler's criterion
// over a full factorization and exist to cross-check the evaluator.

#include <cstdint>

#include "qrecip/gaussian.hpp"

namespace qrecip {

// An element i^k of the group of fourth roots of unity, k in [0, 4).
struct I4 {
  int k = 0;

  static constexpr I4 from(std::int64_t e) { return I4{static_cast<int>(mod_floor(e, 4))}; }

  constexpr I4 operator*(I4 o) const { return from(k + o.k); }
  constexpr I4& operator*=(I4 o) { return *this = *this * o; }
  constexpr I4 inverse() const { return from(-k); }
  constexpr I4 pow(std::int64_t e) const { return from(static_cast<std::int64_t>(k) * mod_floor(e, 4)); }

  friend constexpr bool operator==(I4, I4) = default;
};

// Jacobi symbol (a / m) for odd m; (a / -m) = (a / m). Returns -1, 0 or 1.
int jacobi2(std::int64_t a, std::int64_t m);

// Quartic Jacobi symbol (alpha / beta)_4 for coprime arguments.
// Throws NotCoprimeError when alpha and beta share a non-unit factor.
I4 quartic_jacobi(GaussInt alpha, OddGauss beta);

// alpha^((N(pi) - 1) / 4) mod pi for a Gaussian prime pi of odd norm.
I4 quartic_char_oracle(GaussInt alpha, GaussInt pi);

// Product of quartic_char_oracle over the prime factorization of beta.
I4 quartic_jacobi_oracle(GaussInt alpha, OddGauss beta);

// ((num + den*i) / q)_4 for odd q > 1 with gcd(den, q) = gcd(num^2 + den^2, q) = 1.
// This is the symbol ((k + i) / q)_4 for the rational k = num / den.
I4 quartic_rational(std::int64_t num, std::int64_t den, std::int64_t q);

// Arithmetic in Z[i] / (n), coordinates in [0, n).
GaussInt gauss_reduce_mod(GaussInt z, std::int64_t n);
GaussInt gauss_mul_mod(GaussInt a, GaussInt b, std::int64_t n);
GaussInt gauss_inv_mod(GaussInt z, std::int64_t n);
GaussInt gauss_pow_mod(GaussInt z, std::int64_t e, std::int64_t n);

// The m in [0, 4) with base^m == value (mod q), where base^2 == -1 (mod q).
// Throws NotAPowerError when value is not a power of base.
int i4_log(std::int64_t value, std::int64_t base, std::int64_t q);

// Exponent of i^e congruent to z modulo n, or -1 when z is not a unit power.
int unit_exponent_mod(GaussInt z, std::int64_t n);

// For odd m > 0 with x^2 = c^2 + d^2 (mod m) and gcd(m, x(x + d)) = 1,
// whether (c + di / m)_4 equals the Jacobi symbol (x(x + d) / m) read as
// i^0 or i^2. Throws DomainError when the preconditions fail.
bool check_quartic_via_square_root(std::int64_t c, std::int64_t d, std::int64_t x, std::int64_t m);

}  // namespace qrecip

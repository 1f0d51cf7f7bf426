#pragma once

// Exact arithmetic in Z[i].
//
// Coordinates are limited to |re|, |im| <= 2^62; norms and products use
// 128-bit intermediates and results that would leave that range throw
// OverflowError.

#include <cstdint>
#include <utility>
#include <vector>

#include "qrecip/modular.hpp"

namespace qrecip {

inline constexpr std::int64_t kMaxCoord = std::int64_t{1} << 62;

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr bool operator==(GaussInt, GaussInt) = default;
};

// Ordering used for canonical factorizations: lexicographic on (re, im).
constexpr bool lex_less(GaussInt a, GaussInt b) {
  return a.re != b.re ? a.re < b.re : a.im < b.im;
}

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a);
GaussInt operator*(GaussInt a, GaussInt b);
GaussInt conj(GaussInt z);

// i^k for any integer k.
GaussInt i_pow(std::int64_t k);

i128 norm(GaussInt z);

inline bool is_unit(GaussInt z) { return norm(z) == 1; }

struct DivRem {
  GaussInt quot;
  GaussInt rem;
};

// Euclidean division: a = quot * b + rem with norm(rem) <= norm(b) / 2.
// Each coordinate of a / b is rounded half-way cases toward zero.
DivRem div_rem(GaussInt a, GaussInt b);

// True when d divides z exactly.
bool divides(GaussInt d, GaussInt z);

// z / d; throws DomainError when the division is not exact.
GaussInt exact_quotient(GaussInt z, GaussInt d);

struct OnePlusIValuation {
  int t = 0;            // exponent of (1 + i)
  GaussInt odd_part{};  // z / (1 + i)^t, of odd norm
};

// Splits z = (1 + i)^t * odd_part; z must be nonzero.
OnePlusIValuation val_one_plus_i(GaussInt z);

// A Gaussian integer with odd real part and even imaginary part.
class OddGauss {
 public:
  explicit OddGauss(GaussInt z);
  OddGauss(std::int64_t re, std::int64_t im) : OddGauss(GaussInt{re, im}) {}

  GaussInt value() const { return z_; }
  std::int64_t re() const { return z_.re; }
  std::int64_t im() const { return z_.im; }

  friend bool operator==(const OddGauss&, const OddGauss&) = default;

 private:
  GaussInt z_;
};

struct UnitNormalized {
  int u = 0;  // least u in [0, 4) with i^u * z = w
  OddGauss w;
};

// The unique associate of an odd-norm z with odd real and even imaginary part.
UnitNormalized normalize_odd(GaussInt z);

// Greatest common divisor. Odd-norm results have positive odd real part and
// even imaginary part; even-norm results lie in the first quadrant with
// re > 0, im >= 0. gcd(0, 0) is 0.
GaussInt gauss_gcd(GaussInt a, GaussInt b);

struct GaussFactorization {
  GaussInt unit{1, 0};
  std::vector<std::pair<GaussInt, int>> primes;  // (prime, multiplicity)
};

// Factorization into normalized primes: 1 + i above 2, and the odd-real,
// even-imaginary, positive-real associate otherwise. Primes are sorted by
// norm, then lexicographically. Nonzero input with norm <= norm_bound.
GaussFactorization factor(GaussInt z, i128 norm_bound = 100'000'000);

// Reconstructs unit * prod(prime^mult).
GaussInt multiply_out(const GaussFactorization& f);

}  // namespace qrecip

#pragma once

// Representations of a prime p = 1 (mod 4) as c^2 + d^2 and as x^2 + q y^2.

#include <cstdint>
#include <optional>
#include <vector>

namespace qrecip {

// p = c^2 + d^2 with c = 1 (mod 4) and d = 2^r * d0, d0 = 1 (mod 4).
struct TwoSquares {
  std::int64_t p = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  int r = 0;
  std::int64_t d0 = 0;
};

// p = x^2 + q y^2 with y = 2^t * y0, y0 = 1 (mod 4), and x = 2^s * x0.
struct QuadRep {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  int t = 0;
  std::int64_t y0 = 0;
  int s = 0;
  std::int64_t x0 = 0;
};

struct HypothesisStatus {
  bool gcd_c_xd_ok = false;   // gcd(c, x + d) = 1
  bool gcd_d0_xc_ok = false;  // gcd(d0, x + c) = 1
  std::optional<int> m_val;   // exponent of 2 in x + c, absent when x + c = 0
};

// Largest prime accepted by the representation routines.
inline constexpr std::int64_t kMaxRepPrime = std::int64_t{1} << 60;

// Cornacchia on p with a square root of -1. Throws DomainError unless p is
// a prime congruent to 1 mod 4.
TwoSquares two_squares(std::int64_t p);

// Every (x, y) with x^2 + q y^2 = p and y normalized as above, both signs of
// x, in increasing |y| and then increasing x. Requires q >= 2 and p not
// dividing q; empty when p is not represented.
std::vector<QuadRep> quad_reps(std::int64_t p, std::int64_t q);

HypothesisStatus hypotheses(const TwoSquares& ts, const QuadRep& qr);

// The two gcd identities tying (c, d) to (x, y):
//   gcd(x + d, c^2) = gcd(x + d, q y^2)
//   gcd(q y^2, c^2 + (x + d)^2) = g * gcd(2, x + d + c^2 / g),  g = gcd(x + d, c^2).
bool check_gcd_identities(const TwoSquares& ts, const QuadRep& qr);

// Floor of the square root of a non-negative n.
std::int64_t isqrt(std::int64_t n);

}  // namespace qrecip

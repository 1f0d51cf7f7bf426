#pragma once

// Rational modular arithmetic and the Lucas sequence engine.
//
// Residues are std::int64_t values in [0, n). Products are formed in
// 128-bit intermediates, so any modulus below 2^62 is safe.

#include <cstdint>

namespace qrecip {

using i128 = __int128;
using u128 = unsigned __int128;

// Largest modulus accepted by the modular routines.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;

// Floor division; den must be nonzero.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Least non-negative residue of a modulo n (n > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t mod_floor(i128 a, std::int64_t n) {
  auto r = static_cast<std::int64_t>(a % n);
  return r < 0 ? r + n : r;
}

// Exponent of 2 in n; n must be nonzero.
int valuation2(std::int64_t n);

std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t sub_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);

// a^e mod n with e >= 0 and n >= 1. Throws DomainError otherwise.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n);

// Inverse of a modulo n. Throws NotCoprimeError when gcd(a, n) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t n);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::int64_t n);

// Parameters of X^2 - bX + c.
struct LucasParams {
  std::int64_t b = 0;
  std::int64_t c = 0;
};

struct LucasPair {
  std::int64_t u = 0;  // U_n mod p
  std::int64_t v = 0;  // V_n mod p
};

// U_n(b, c) and V_n(b, c) modulo an odd modulus p, in O(log n) steps.
LucasPair lucas_uv_mod(LucasParams params, std::int64_t n, std::int64_t p);

// ((b + root) / 2)^e mod p for an odd modulus p.
std::int64_t unit_power(std::int64_t b, std::int64_t root, std::int64_t e,
                        std::int64_t p);

// Tests the equivalence  p | U_n  <=>  V_{2n} == 2 c^n (mod p).
// Requires p > 3 prime with p not dividing b * c * (b^2 - 4c).
bool check_lucas_divisibility(LucasParams params, std::int64_t n, std::int64_t p);

}  // namespace qrecip

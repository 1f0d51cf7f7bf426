#pragma once

// Slow, obviously-correct reference computations shared by the tests.

#include <cstdint>
#include <utility>
#include <vector>

#include "qrecip/modular.hpp"

namespace qrecip::oracle {

inline bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre_euler(std::int64_t a, std::int64_t p) {
  const std::int64_t r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// Jacobi symbol from the prime factorization of an odd m > 0.
inline int jacobi_by_factoring(std::int64_t a, std::int64_t m) {
  int acc = 1;
  for (std::int64_t p = 3; m > 1; p += 2) {
    if (p * p > m) p = m;
    while (m % p == 0) {
      acc *= legendre_euler(a, p);
      m /= p;
    }
  }
  return acc;
}

// U_n, V_n by the defining recurrence.
inline std::vector<LucasPair> lucas_naive(LucasParams lp, std::int64_t n_max, std::int64_t p) {
  std::vector<LucasPair> out;
  std::int64_t u0 = 0, u1 = 1, v0 = 2 % p, v1 = mod_floor(lp.b, p);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out.push_back({u0, v0});
    const std::int64_t u2 = sub_mod(mul_mod(lp.b, u1, p), mul_mod(lp.c, u0, p), p);
    const std::int64_t v2 = sub_mod(mul_mod(lp.b, v1, p), mul_mod(lp.c, v0, p), p);
    u0 = u1, u1 = u2, v0 = v1, v1 = v2;
  }
  return out;
}

inline std::int64_t floor_sqrt_by_search(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// All (c, d) with c^2 + d^2 = n.
inline std::vector<std::pair<std::int64_t, std::int64_t>> sum_of_two_squares_all(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t bound = floor_sqrt_by_search(n);
  for (std::int64_t c = -bound; c <= bound; ++c) {
    for (std::int64_t d = -bound; d <= bound; ++d) {
      if (c * c + d * d == n) out.emplace_back(c, d);
    }
  }
  return out;
}

// All (x, y) with x^2 + q y^2 = n, q >= 1, by trying every y and every x.
inline std::vector<std::pair<std::int64_t, std::int64_t>> form_reps_all(std::int64_t n, std::int64_t q) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t xb = floor_sqrt_by_search(n);
  const std::int64_t yb = floor_sqrt_by_search(n / q);
  for (std::int64_t y = -yb; y <= yb; ++y) {
    for (std::int64_t x = -xb; x <= xb; ++x) {
      if (x * x + q * y * y == n) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace qrecip::oracle

#include "qrecip/modular.hpp"

#include "qrecip/error.hpp"

namespace qrecip {

namespace {

void require_modulus(std::int64_t n) {
  if (n < 1 || n > kMaxModulus) throw DomainError("modulus out of range");
}

void require_odd_modulus(std::int64_t p) {
  require_modulus(p);
  if (p % 2 == 0) throw DomainError("modulus must be odd");
}

}  // namespace

int valuation2(std::int64_t n) {
  if (n == 0) throw DomainError("valuation of zero");
  return __builtin_ctzll(static_cast<unsigned long long>(n));
}

std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod_floor(static_cast<i128>(a) + b, n);
}

std::int64_t sub_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod_floor(static_cast<i128>(a) - b, n);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod_floor(static_cast<i128>(a) * b, n);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n) {
  require_modulus(n);
  if (e < 0) throw DomainError("negative exponent");
  std::int64_t base = mod_floor(a, n);
  std::int64_t acc = 1 % n;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, n);
    base = mul_mod(base, base, n);
    e >>= 1;
  }
  return acc;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  require_modulus(n);
  // Extended Euclid on (a mod n, n).
  std::int64_t r0 = n, r1 = mod_floor(a, n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw NotCoprimeError("no inverse modulo n");
  return mod_floor(s0, n);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient below 3.3 * 10^24.
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

LucasPair lucas_uv_mod(LucasParams params, std::int64_t n, std::int64_t p) {
  require_odd_modulus(p);
  if (n < 0) throw DomainError("negative Lucas index");
  if (p == 1) return {0, 0};
  const std::int64_t b = mod_floor(params.b, p);
  const std::int64_t c = mod_floor(params.c, p);
  const std::int64_t disc = sub_mod(mul_mod(b, b, p), mul_mod(4, c, p), p);
  const std::int64_t inv2 = (p + 1) / 2;

  // Invariant: (u, v, ck) = (U_k, V_k, c^k), walking the bits of n from the top.
  std::int64_t u = 0, v = 2 % p, ck = 1;
  for (int bit = 62; bit >= 0; --bit) {
    u = mul_mod(u, v, p);
    v = sub_mod(mul_mod(v, v, p), mul_mod(2, ck, p), p);
    ck = mul_mod(ck, ck, p);
    if ((n >> bit) & 1) {
      std::int64_t u1 = mul_mod(add_mod(mul_mod(b, u, p), v, p), inv2, p);
      std::int64_t v1 = mul_mod(add_mod(mul_mod(disc, u, p), mul_mod(b, v, p), p),
                                inv2, p);
      u = u1;
      v = v1;
      ck = mul_mod(ck, c, p);
    }
  }
  return {u, v};
}

std::int64_t unit_power(std::int64_t b, std::int64_t root, std::int64_t e,
                        std::int64_t p) {
  require_odd_modulus(p);
  std::int64_t half = mul_mod(add_mod(b, root, p), (p + 1) / 2, p);
  return pow_mod(half, e, p);
}

bool check_lucas_divisibility(LucasParams params, std::int64_t n, std::int64_t p) {
  if (p <= 3 || !is_prime(p)) throw DomainError("modulus must be a prime above 3");
  const i128 disc = static_cast<i128>(params.b) * params.b - static_cast<i128>(4) * params.c;
  if (mod_floor(params.b, p) == 0 || mod_floor(params.c, p) == 0 || mod_floor(disc, p) == 0) {
    throw DomainError("p divides b * c * (b^2 - 4c)");
  }
  if (n < 0 || n > (kMaxModulus >> 1)) throw DomainError("index out of range");
  const LucasPair at_n = lucas_uv_mod(params, n, p);
  const LucasPair at_2n = lucas_uv_mod(params, 2 * n, p);
  const std::int64_t rhs = mul_mod(2, pow_mod(params.c, n, p), p);
  return (at_n.u == 0) == (at_2n.v == rhs);
}

}  // namespace qrecip

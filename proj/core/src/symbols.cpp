#include "qrecip/symbols.hpp"

#include <numeric>

#include "qrecip/error.hpp"

namespace qrecip {

namespace {

int parity(i128 v) { return static_cast<int>(v & 1); }

i128 exact_div4(i128 v) {
  if (v % 4 != 0) throw DomainError("supplement exponent is not integral");
  return v / 4;
}

// (i / beta)_4 = i^((N(beta) - 1) / 4).
I4 supplement_i(GaussInt beta) {
  const auto n16 = static_cast<int>(norm(beta) % 16);
  return I4::from((n16 - 1) / 4);
}

// ((1 + i) / beta)_4 for beta = a + bi with a odd and b even.
I4 supplement_one_plus_i(GaussInt beta) {
  const i128 a = beta.re, b = beta.im;
  const i128 sign = parity((a - 1) / 2) ? -1 : 1;
  if (b % 4 == 0) return I4::from(static_cast<std::int64_t>(exact_div4(sign * (a - b) - 1) % 4));
  return I4::from(static_cast<std::int64_t>(exact_div4(sign * (b - a) - 1) % 4) - 1);
}

// Sign relating (w / beta)_4 and (beta / w)_4 for w = a + bi, beta = c + di.
bool reciprocity_flips(GaussInt w, GaussInt beta) {
  const i128 a = w.re, b = w.im, c = beta.re, d = beta.im;
  const int e = (parity(b / 2) & parity((c - 1) / 2)) ^ (parity(d / 2) & parity((a + b - 1) / 2));
  return e != 0;
}

int discrete_log_unit(std::int64_t value, std::int64_t t, std::int64_t p) {
  std::int64_t acc = 1;
  for (int k = 0; k < 4; ++k) {
    if (acc == value) return k;
    acc = mul_mod(acc, t, p);
  }
  return -1;
}

}  // namespace

int jacobi2(std::int64_t a, std::int64_t m) {
  if (m % 2 == 0) throw DomainError("jacobi2 needs an odd modulus");
  std::int64_t n = m < 0 ? -m : m;
  std::int64_t x = mod_floor(a, n);
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

I4 quartic_jacobi(GaussInt alpha, OddGauss beta) {
  I4 acc{};
  GaussInt num = alpha;
  GaussInt den = beta.value();
  while (norm(den) != 1) {
    const GaussInt rem = div_rem(num, den).rem;
    if (rem == GaussInt{}) throw NotCoprimeError("quartic symbol of non-coprime arguments");
    // rem = (1 + i)^t * i^(-u) * w with w normalized.
    const OnePlusIValuation split = val_one_plus_i(rem);
    const UnitNormalized unit = normalize_odd(split.odd_part);
    acc *= supplement_i(den).pow(-unit.u);
    acc *= supplement_one_plus_i(den).pow(split.t);
    const GaussInt w = unit.w.value();
    if (reciprocity_flips(w, den)) acc *= I4{2};
    num = den;
    den = w;
  }
  return acc;
}

I4 quartic_char_oracle(GaussInt alpha, GaussInt pi) {
  const i128 n = norm(pi);
  if ((n & 1) == 0 || n >= kMaxModulus) throw DomainError("oracle needs a prime of odd norm");
  const auto np = static_cast<std::int64_t>(n);
  if (is_prime(np)) {
    // Z[i] / (pi) is F_np with i mapped to t = -re / im.
    const std::int64_t t = mul_mod(-pi.re, inv_mod(pi.im, np), np);
    const std::int64_t a = add_mod(mod_floor(alpha.re, np), mul_mod(mod_floor(alpha.im, np), t, np), np);
    if (a == 0) throw NotCoprimeError("alpha is divisible by pi");
    const int k = discrete_log_unit(pow_mod(a, (np - 1) / 4, np), t, np);
    if (k < 0) throw DomainError("Euler criterion left the fourth roots of unity");
    return I4{k};
  }
  // Inert prime: pi is a unit times a rational prime q = 3 (mod 4).
  const std::int64_t q = std::gcd(pi.re, pi.im);
  if (pi.re != 0 && pi.im != 0) throw DomainError("oracle argument is not prime");
  if (q % 4 != 3 || !is_prime(q)) throw DomainError("oracle argument is not prime");
  const GaussInt a = gauss_reduce_mod(alpha, q);
  if (a == GaussInt{}) throw NotCoprimeError("alpha is divisible by pi");
  const int k = unit_exponent_mod(gauss_pow_mod(a, (np - 1) / 4, q), q);
  if (k < 0) throw DomainError("Euler criterion left the fourth roots of unity");
  return I4{k};
}

I4 quartic_jacobi_oracle(GaussInt alpha, OddGauss beta) {
  const GaussFactorization f = factor(beta.value());
  I4 acc{};
  for (const auto& [prime, mult] : f.primes) acc *= quartic_char_oracle(alpha, prime).pow(mult);
  return acc;
}

I4 quartic_rational(std::int64_t num, std::int64_t den, std::int64_t q) {
  if (q < 3 || q % 2 == 0 || q > kMaxModulus) throw DomainError("q must be odd and at least 3");
  const std::int64_t n = mod_floor(num, q), d = mod_floor(den, q);
  if (std::gcd(d, q) != 1) throw NotCoprimeError("denominator shares a factor with q");
  const std::int64_t nrm = add_mod(mul_mod(n, n, q), mul_mod(d, d, q), q);
  if (std::gcd(nrm, q) != 1) throw NotCoprimeError("num^2 + den^2 shares a factor with q");
  return quartic_jacobi({n, d}, OddGauss(q, 0));
}

GaussInt gauss_reduce_mod(GaussInt z, std::int64_t n) {
  if (n < 1 || n > kMaxModulus) throw DomainError("modulus out of range");
  return {mod_floor(z.re, n), mod_floor(z.im, n)};
}

GaussInt gauss_mul_mod(GaussInt a, GaussInt b, std::int64_t n) {
  a = gauss_reduce_mod(a, n);
  b = gauss_reduce_mod(b, n);
  const i128 re = static_cast<i128>(a.re) * b.re - static_cast<i128>(a.im) * b.im;
  const i128 im = static_cast<i128>(a.re) * b.im + static_cast<i128>(a.im) * b.re;
  return {mod_floor(re, n), mod_floor(im, n)};
}

GaussInt gauss_inv_mod(GaussInt z, std::int64_t n) {
  z = gauss_reduce_mod(z, n);
  const std::int64_t nrm = add_mod(mul_mod(z.re, z.re, n), mul_mod(z.im, z.im, n), n);
  const std::int64_t inv = inv_mod(nrm, n);
  return gauss_mul_mod({z.re, n - z.im}, {inv, 0}, n);
}

GaussInt gauss_pow_mod(GaussInt z, std::int64_t e, std::int64_t n) {
  if (e < 0) throw DomainError("negative exponent");
  GaussInt base = gauss_reduce_mod(z, n);
  GaussInt acc = gauss_reduce_mod({1, 0}, n);
  while (e > 0) {
    if (e & 1) acc = gauss_mul_mod(acc, base, n);
    base = gauss_mul_mod(base, base, n);
    e >>= 1;
  }
  return acc;
}

int i4_log(std::int64_t value, std::int64_t base, std::int64_t q) {
  if (q < 2 || q > kMaxModulus) throw DomainError("modulus out of range");
  const std::int64_t b = mod_floor(base, q);
  if (mul_mod(b, b, q) != q - 1) throw DomainError("base is not a square root of -1");
  const int k = discrete_log_unit(mod_floor(value, q), b, q);
  if (k < 0) throw NotAPowerError("value is not a power of the base");
  return k;
}

int unit_exponent_mod(GaussInt z, std::int64_t n) {
  z = gauss_reduce_mod(z, n);
  for (int k = 0; k < 4; ++k) {
    if (z == gauss_reduce_mod(i_pow(k), n)) return k;
  }
  return -1;
}

bool check_quartic_via_square_root(std::int64_t c, std::int64_t d, std::int64_t x, std::int64_t m) {
  if (m < 1 || m % 2 == 0 || m > kMaxModulus) throw DomainError("m must be odd and positive");
  const std::int64_t lhs = mul_mod(x, x, m);
  const std::int64_t rhs = add_mod(mul_mod(c, c, m), mul_mod(d, d, m), m);
  if (lhs != rhs) throw DomainError("x^2 differs from c^2 + d^2 mod m");
  const std::int64_t w = mul_mod(x, add_mod(mod_floor(x, m), mod_floor(d, m), m), m);
  if (std::gcd(w, m) != 1) throw DomainError("m shares a factor with x(x + d)");
  if (m == 1) return true;
  const I4 quartic = quartic_jacobi({mod_floor(c, m), mod_floor(d, m)}, OddGauss(m, 0));
  return quartic == I4::from(jacobi2(w, m) == 1 ? 0 : 2);
}

}  // namespace qrecip

#include "qrecip/gaussian.hpp"

#include <algorithm>

#include "qrecip/error.hpp"

namespace qrecip {

namespace {

std::int64_t checked(i128 v) {
  if (v > kMaxCoord || v < -kMaxCoord) throw OverflowError("Gaussian coordinate out of range");
  return static_cast<std::int64_t>(v);
}

void require_range(GaussInt z) {
  checked(z.re);
  checked(z.im);
}

// Nearest integer to num / den (den > 0); exact halves go toward zero.
i128 round_half_toward_zero(i128 num, i128 den) {
  i128 q = num / den;
  i128 r = num % den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  // Now num = q * den + r with 0 <= r < den.
  if (2 * r > den) return q + 1;
  if (2 * r < den) return q;
  return q >= 0 ? q : q + 1;
}

// Positive associate with odd real part and even imaginary part.
GaussInt normalized_odd_prime(GaussInt z) {
  GaussInt w = normalize_odd(z).w.value();
  return w.re < 0 ? -w : w;
}

// A square root of -1 modulo a prime ell = 1 (mod 4).
std::int64_t sqrt_minus_one(std::int64_t ell) {
  for (std::int64_t n = 2;; ++n) {
    if (pow_mod(n, (ell - 1) / 2, ell) == ell - 1) return pow_mod(n, (ell - 1) / 4, ell);
  }
}

}  // namespace

GaussInt operator+(GaussInt a, GaussInt b) {
  return {checked(static_cast<i128>(a.re) + b.re), checked(static_cast<i128>(a.im) + b.im)};
}

GaussInt operator-(GaussInt a, GaussInt b) {
  return {checked(static_cast<i128>(a.re) - b.re), checked(static_cast<i128>(a.im) - b.im)};
}

GaussInt operator-(GaussInt a) { return {checked(-static_cast<i128>(a.re)), checked(-static_cast<i128>(a.im))}; }

GaussInt operator*(GaussInt a, GaussInt b) {
  const i128 re = static_cast<i128>(a.re) * b.re - static_cast<i128>(a.im) * b.im;
  const i128 im = static_cast<i128>(a.re) * b.im + static_cast<i128>(a.im) * b.re;
  return {checked(re), checked(im)};
}

GaussInt conj(GaussInt z) { return {z.re, checked(-static_cast<i128>(z.im))}; }

GaussInt i_pow(std::int64_t k) {
  switch (mod_floor(k, 4)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

i128 norm(GaussInt z) {
  require_range(z);
  return static_cast<i128>(z.re) * z.re + static_cast<i128>(z.im) * z.im;
}

DivRem div_rem(GaussInt a, GaussInt b) {
  require_range(a);
  const i128 nb = norm(b);
  if (nb == 0) throw DomainError("division by zero");
  // a / b = a * conj(b) / norm(b).
  const i128 num_re = static_cast<i128>(a.re) * b.re + static_cast<i128>(a.im) * b.im;
  const i128 num_im = static_cast<i128>(a.im) * b.re - static_cast<i128>(a.re) * b.im;
  const GaussInt quot{checked(round_half_toward_zero(num_re, nb)),
                      checked(round_half_toward_zero(num_im, nb))};
  const i128 qb_re = static_cast<i128>(quot.re) * b.re - static_cast<i128>(quot.im) * b.im;
  const i128 qb_im = static_cast<i128>(quot.re) * b.im + static_cast<i128>(quot.im) * b.re;
  const GaussInt rem{checked(a.re - qb_re), checked(a.im - qb_im)};
  return {quot, rem};
}

bool divides(GaussInt d, GaussInt z) {
  if (norm(d) == 0) return norm(z) == 0;
  return div_rem(z, d).rem == GaussInt{};
}

GaussInt exact_quotient(GaussInt z, GaussInt d) {
  DivRem qr = div_rem(z, d);
  if (!(qr.rem == GaussInt{})) throw DomainError("inexact Gaussian division");
  return qr.quot;
}

OnePlusIValuation val_one_plus_i(GaussInt z) {
  if (norm(z) == 0) throw DomainError("valuation of zero");
  OnePlusIValuation out{0, z};
  // z / (1 + i) = z * (1 - i) / 2, exact while re and im share parity.
  while (((out.odd_part.re ^ out.odd_part.im) & 1) == 0) {
    const std::int64_t re = out.odd_part.re, im = out.odd_part.im;
    out.odd_part = {checked((static_cast<i128>(re) + im) / 2), checked((static_cast<i128>(im) - re) / 2)};
    ++out.t;
  }
  return out;
}

OddGauss::OddGauss(GaussInt z) : z_(z) {
  require_range(z);
  if ((z.re & 1) == 0 || (z.im & 1) != 0) {
    throw DomainError("expected odd real part and even imaginary part");
  }
}

UnitNormalized normalize_odd(GaussInt z) {
  if ((norm(z) & 1) == 0) throw DomainError("normalize_odd needs odd norm");
  GaussInt w = z;
  for (int u = 0; u < 4; ++u) {
    if ((w.re & 1) != 0 && (w.im & 1) == 0) return {u, OddGauss(w)};
    w = GaussInt{-w.im, w.re};  // multiply by i
  }
  throw DomainError("unreachable: no odd associate");
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  require_range(a);
  require_range(b);
  while (!(b == GaussInt{})) {
    GaussInt r = div_rem(a, b).rem;
    a = b;
    b = r;
  }
  if (a == GaussInt{}) return a;
  if ((norm(a) & 1) == 1) return normalized_odd_prime(a);
  for (int u = 0; u < 4; ++u) {
    if (a.re > 0 && a.im >= 0) return a;
    a = GaussInt{-a.im, a.re};
  }
  return a;
}

GaussFactorization factor(GaussInt z, i128 norm_bound) {
  const i128 n = norm(z);
  if (n == 0) throw DomainError("cannot factor zero");
  if (n > norm_bound) throw DomainError("norm exceeds factorization bound");

  GaussFactorization out;
  GaussInt rest = z;
  auto strip = [&](GaussInt prime) {
    int mult = 0;
    while (true) {
      DivRem qr = div_rem(rest, prime);
      if (!(qr.rem == GaussInt{})) break;
      rest = qr.quot;
      ++mult;
    }
    if (mult > 0) out.primes.emplace_back(prime, mult);
  };

  // Rational primes dividing the norm, by trial division.
  auto m = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> ells;
  for (std::int64_t ell = 2; ell * ell <= m; ++ell) {
    if (m % ell != 0) continue;
    ells.push_back(ell);
    while (m % ell == 0) m /= ell;
  }
  if (m > 1) ells.push_back(m);

  for (std::int64_t ell : ells) {
    if (ell == 2) {
      strip({1, 1});
    } else if (ell % 4 == 3) {
      strip({ell, 0});
    } else {
      const std::int64_t t = sqrt_minus_one(ell);
      const GaussInt pi = normalized_odd_prime(gauss_gcd({ell, 0}, {t, 1}));
      GaussInt pair[2] = {pi, normalized_odd_prime(conj(pi))};
      if (lex_less(pair[1], pair[0])) std::swap(pair[0], pair[1]);
      strip(pair[0]);
      strip(pair[1]);
    }
  }
  if (!is_unit(rest)) throw DomainError("factorization did not terminate in a unit");
  out.unit = rest;
  std::sort(out.primes.begin(), out.primes.end(), [](const auto& x, const auto& y) {
    const i128 nx = norm(x.first), ny = norm(y.first);
    return nx != ny ? nx < ny : lex_less(x.first, y.first);
  });
  return out;
}

GaussInt multiply_out(const GaussFactorization& f) {
  GaussInt acc = f.unit;
  for (const auto& [prime, mult] : f.primes) {
    for (int k = 0; k < mult; ++k) acc = acc * prime;
  }
  return acc;
}

}  // namespace qrecip

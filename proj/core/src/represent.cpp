#include "qrecip/represent.hpp"

#include <cmath>
#include <numeric>

#include "qrecip/error.hpp"
#include "qrecip/modular.hpp"

namespace qrecip {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// n = 2^e * odd for n != 0.
struct Split2 {
  int e;
  std::int64_t odd;
};

Split2 split2(std::int64_t n) {
  const int e = valuation2(n);
  return {e, n >> e};
}

}  // namespace

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

TwoSquares two_squares(std::int64_t p) {
  if (p < 5 || p > kMaxRepPrime || p % 4 != 1 || !is_prime(p)) {
    throw DomainError("two_squares needs a prime p = 1 (mod 4)");
  }
  std::int64_t t = 0;
  for (std::int64_t n = 2;; ++n) {
    if (pow_mod(n, (p - 1) / 2, p) == p - 1) {
      t = pow_mod(n, (p - 1) / 4, p);
      break;
    }
  }
  // Euclid on (p, t) until the remainder drops below sqrt(p).
  const std::int64_t bound = isqrt(p);
  std::int64_t a = p, b = t;
  while (b > bound) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  std::int64_t u = b;
  std::int64_t v = isqrt(p - u * u);
  if (u * u + v * v != p) throw DomainError("Cornacchia failed");

  TwoSquares out;
  out.p = p;
  std::int64_t c = (u % 2 != 0) ? u : v;
  std::int64_t d = (u % 2 != 0) ? v : u;
  if (mod_floor(c, 4) != 1) c = -c;
  Split2 sd = split2(d);
  if (mod_floor(sd.odd, 4) != 1) {
    d = -d;
    sd.odd = -sd.odd;
  }
  out.c = c;
  out.d = d;
  out.r = sd.e;
  out.d0 = sd.odd;
  return out;
}

std::vector<QuadRep> quad_reps(std::int64_t p, std::int64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (p < 2 || p > kMaxRepPrime) throw DomainError("p out of range");
  if (q % p == 0) throw DomainError("p divides q");
  std::vector<QuadRep> out;
  for (std::int64_t y = 1; static_cast<i128>(q) * y * y < p; ++y) {
    const std::int64_t rest = p - q * y * y;
    const std::int64_t ax = isqrt(rest);
    if (ax * ax != rest || ax == 0) continue;
    const Split2 sy = split2(y);
    const std::int64_t sign = mod_floor(sy.odd, 4) == 1 ? 1 : -1;
    const Split2 sx = split2(ax);
    for (std::int64_t x : {-ax, ax}) {
      QuadRep rep;
      rep.p = p;
      rep.q = q;
      rep.x = x;
      rep.y = sign * y;
      rep.t = sy.e;
      rep.y0 = sign * sy.odd;
      rep.s = sx.e;
      rep.x0 = x < 0 ? -sx.odd : sx.odd;
      out.push_back(rep);
    }
  }
  return out;
}

HypothesisStatus hypotheses(const TwoSquares& ts, const QuadRep& qr) {
  HypothesisStatus h;
  h.gcd_c_xd_ok = std::gcd(ts.c, qr.x + ts.d) == 1;
  h.gcd_d0_xc_ok = std::gcd(ts.d0, qr.x + ts.c) == 1;
  if (qr.x + ts.c != 0) h.m_val = valuation2(qr.x + ts.c);
  return h;
}

bool check_gcd_identities(const TwoSquares& ts, const QuadRep& qr) {
  const i128 xd = static_cast<i128>(qr.x) + ts.d;
  const i128 c2 = static_cast<i128>(ts.c) * ts.c;
  const i128 qy2 = static_cast<i128>(qr.q) * qr.y * qr.y;
  const i128 g = gcd128(xd, c2);
  if (g != gcd128(xd, qy2)) return false;
  return gcd128(qy2, c2 + xd * xd) == g * gcd128(2, xd + c2 / g);
}

}  // namespace qrecip

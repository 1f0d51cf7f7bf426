// Auxiliary congruences: the Q_r(p) classification of k + i, its quadratic
// shortcut, the gcd identities of a representation, the q^[p/8] rule and
// the closed form of 2^((p-1)/4).

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "checks.hpp"
#include "qrecip/error.hpp"
#include "qrecip/represent.hpp"
#include "qrecip/symbols.hpp"

namespace qrecip::detail {

namespace {

// A square root of -1 modulo a prime p = 1 (mod 4).
std::int64_t sqrt_minus_one(std::int64_t p) {
  std::int64_t g = 2;
  while (jacobi2(g, p) != -1) ++g;
  return pow_mod(g, (p - 1) / 4, p);
}

Evaluation failure_count(std::int64_t failures, std::int64_t cases, std::string note) {
  Evaluation ev;
  ev.note = std::move(note) + ", " + std::to_string(cases) + " cases";
  observe(ev, "failures", 0, failures);
  return ev;
}

}  // namespace

std::vector<Evaluation> eval_lemma2_12(const CheckParams&, const Ctx& ctx) {
  Evaluation ev;
  observe(ev, "gcd identities hold", 1, check_gcd_identities(ctx.ts, ctx.rep) ? 1 : 0);
  return {ev};
}

std::vector<Evaluation> eval_lemma2_13(const CheckParams&, const Ctx& ctx) {
  const OddGauss pi(ctx.c, ctx.d);
  const I4 s = quartic_jacobi({ctx.x, 0}, pi) * quartic_jacobi({ctx.y, 0}, pi).inverse();
  const std::int64_t p8 = ctx.p / 8;
  const Observation lhs = q_power(ctx);
  Evaluation ev;
  ev.exponent = s.k;
  // With n = [p/8] (mod 2) the sign (-1)^([p/8] + n) is 1 and k is the exponent of s.
  const bool five = ctx.pm8 == 5;
  observe(ev, lhs.label, eval({p8, s.k, five}, ctx), lhs.value);
  observe(ev, lhs.label + " via (n+1, k+2)", eval({p8 + 1, s.k + 2, five}, ctx), lhs.value);
  return {ev};
}

Evaluation eval_eq5_5(const CheckParams&, std::int64_t p) {
  const TwoSquares ts = two_squares(p);
  const std::int64_t c = ts.c, d = ts.d;
  const std::int64_t dc = mul_mod(d, inv_mod(c, p), p);
  const std::int64_t actual = pow_mod(2, (p - 1) / 4, p);
  const std::int64_t e = mod_floor(static_cast<i128>(c) * d / 2, 4);
  Evaluation ev;
  ev.exponent = static_cast<int>(e);
  observe(ev, "2^((p-1)/4)", pow_mod(dc, e, p), actual);
  const std::int64_t cases = p % 8 == 1 ? (par(ex(d, 4)) ? p - 1 : 1) : dc;
  observe(ev, "2^((p-1)/4) by p mod 8", cases, actual);
  return ev;
}

Evaluation eval_lemma2_7(const CheckParams&, std::int64_t p) {
  const OddGauss modulus(p, 0);
  std::int64_t failures = 0, cases = 0;
  if (p % 4 == 1) {
    const std::int64_t t = sqrt_minus_one(p);
    for (std::int64_t k = 0; k < p; ++k) {
      if (add_mod(mul_mod(k, k, p), 1, p) == 0) continue;
      ++cases;
      const int r = quartic_jacobi({k, 1}, modulus).k;
      for (const std::int64_t tt : {t, p - t}) {
        const std::int64_t ratio = mul_mod(add_mod(k, tt, p), inv_mod(sub_mod(k, tt, p), p), p);
        if (pow_mod(ratio, (p - 1) / 4, p) != pow_mod(tt, r, p)) ++failures;
      }
    }
  } else {
    for (std::int64_t k = 0; k < p; ++k) {
      ++cases;
      const int r = quartic_jacobi({k, 1}, modulus).k;
      const GaussInt ratio = gauss_mul_mod({k, -1}, gauss_inv_mod({k, 1}, p), p);
      if (gauss_pow_mod(ratio, (p + 1) / 4, p) != gauss_reduce_mod(i_pow(r), p)) ++failures;
    }
  }
  return failure_count(failures, cases, p % 4 == 1 ? "p = 1 mod 4" : "p = 3 mod 4");
}

Evaluation eval_lemma2_8(const CheckParams&, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(p));
  for (std::int64_t n = 0; n < p; ++n) roots[static_cast<std::size_t>(mul_mod(n, n, p))].push_back(n);
  const OddGauss modulus(p, 0);
  std::int64_t failures = 0, cases = 0;
  for (std::int64_t k = 0; k < p; ++k) {
    const std::int64_t k21 = add_mod(mul_mod(k, k, p), 1, p);
    const auto& ns = roots[static_cast<std::size_t>(k21)];
    if (k21 == 0 || ns.empty()) continue;
    const I4 quartic = quartic_jacobi({k, 1}, modulus);
    for (const std::int64_t n : ns) {
      const std::int64_t w = mul_mod(n, n + 1, p);
      if (w == 0) continue;
      ++cases;
      if (quartic != I4::from(jacobi2(w, p) == 1 ? 0 : 2)) ++failures;
    }
  }
  return failure_count(failures, cases, "all (k, n)");
}

Evaluation eval_lemma2_9(const CheckParams&, std::int64_t p) {
  constexpr int kInstances = 8;
  std::mt19937_64 rng(static_cast<std::uint64_t>(p));
  std::uniform_int_distribution<std::int64_t> cofactor(0, 49);
  std::int64_t failures = 0, cases = 0;
  while (cases < kInstances) {
    const std::int64_t m = p * (2 * cofactor(rng) + 1);
    std::uniform_int_distribution<std::int64_t> residue(0, m - 1);
    const std::int64_t c = residue(rng), u = residue(rng);
    if (std::gcd(u, m) != 1) continue;
    // x + d = u and x - d = c^2 / u give x^2 - d^2 = c^2.
    const std::int64_t v = mul_mod(mul_mod(c, c, m), inv_mod(u, m), m);
    const std::int64_t half = (m + 1) / 2;
    const std::int64_t x = mul_mod(add_mod(u, v, m), half, m);
    const std::int64_t d = mul_mod(sub_mod(u, v, m), half, m);
    if (std::gcd(x, m) != 1) continue;
    ++cases;
    const std::int64_t shift = m * static_cast<std::int64_t>(rng() % 3) - m;
    if (!check_quartic_via_square_root(c + shift, d - shift, x, m)) ++failures;
  }
  return failure_count(failures, cases, "random (c, d, x, m)");
}

}  // namespace qrecip::detail

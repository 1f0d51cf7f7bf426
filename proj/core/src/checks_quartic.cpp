// Congruences for q^[p/8] mod p read off a quartic symbol of q.

#include <cstdlib>
#include <numeric>
#include <string>

#include "checks.hpp"
#include "qrecip/error.hpp"
#include "qrecip/symbols.hpp"

namespace qrecip::detail {

namespace {

std::int64_t q_mod(const Ctx& ctx, std::int64_t n) { return mod_floor(ctx.q, n); }

// Shared tail: q^[p/8] against the predicted term, exponent k recorded.
std::vector<Evaluation> conclude(const Ctx& ctx, I4 k, const Term& term, std::string note) {
  Evaluation ev;
  ev.note = std::move(note);
  ev.exponent = k.k;
  const Observation lhs = q_power(ctx);
  observe(ev, lhs.label, eval(term, ctx), lhs.value);
  return {ev};
}

std::vector<Evaluation> none(std::string note) { return {not_applicable(std::move(note))}; }

bool odd_q(const Ctx& ctx) { return ctx.q >= 3 && ctx.q % 2 != 0; }

}  // namespace

std::vector<Evaluation> eval_thm3_1(const CheckParams&, const Ctx& ctx) {
  if (!odd_q(ctx)) return none("q must be odd");
  if (par(ctx.x)) return none("x is odd");
  if (mod_floor(ctx.y, 4) != 1) return none("y is not 1 mod 4");
  const auto k = k_c_over_xd(ctx);
  if (!k) return none("symbol undefined");
  const std::int64_t x = ctx.x, d = ctx.d, q = ctx.q;
  const std::int64_t qm8 = q_mod(ctx, 8);
  Term t;
  if (ctx.pm8 == 1 && qm8 == 1) {
    t = {ex(q - 1, 8) + ex(d, 4) + ex(x, 4), k->k};
  } else if (ctx.pm8 == 1 && qm8 == 5) {
    t = {ex(q - 5, 8) + ex(d, 4) + ex(x - 2, 4), k->k + 1};
  } else if (ctx.pm8 == 5 && qm8 == 1) {
    t = {ex(q - 1, 8) + ex(x - 2, 4), k->k + 1, true};
  } else if (ctx.pm8 == 5 && qm8 == 5) {
    t = {ex(q - 5, 8) + ex(x, 4), k->k, true};
  } else {
    return none("q is not 1 mod 4");
  }
  return conclude(ctx, *k, t, "p=" + std::to_string(ctx.pm8) + ",q=" + std::to_string(qm8) + " mod 8");
}

std::vector<Evaluation> eval_thm3_2(const CheckParams&, const Ctx& ctx) {
  if (!odd_q(ctx)) return none("q must be odd");
  if (!par(ctx.x)) return none("x is even");
  const auto k = k_c_over_xd(ctx);
  if (!k) return none("symbol undefined");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d, q = ctx.q;
  const std::int64_t qm8 = q_mod(ctx, 8);
  const std::int64_t kk = k->k;
  Term t;
  if (ctx.pm8 == 1) {
    switch (qm8) {
      case 1: t = {ex(q - 1, 8) + ex(d, 4) + ex(y, 4), kk}; break;
      case 3: t = {ex(q + 5, 8) + ex(x - 1, 2) + ex(y, 4), kk - 1}; break;
      case 5: t = {ex(q - 5, 8) + ex(d, 4) + ex(x - 1, 2) + ex(y, 4), kk - 1}; break;
      default: t = {ex(q + 1, 8) + ex(y, 4), kk}; break;
    }
  } else {
    switch (qm8) {
      case 1: t = {ex(q - 1, 8) + ex(x - 1, 2), kk - 1, true}; break;
      case 3: t = {ex(q + 5, 8), kk - 1, true}; break;
      case 5: t = {ex(q + 3, 8), kk, true}; break;
      default: t = {ex(q + 1, 8) + ex(x - 1, 2), kk, true}; break;
    }
  }
  return conclude(ctx, *k, t, "p=" + std::to_string(ctx.pm8) + ",q=" + std::to_string(qm8) + " mod 8");
}

std::vector<Evaluation> eval_thm3_3(const CheckParams&, const Ctx& ctx) {
  if (!odd_q(ctx)) return none("q must be odd");
  const auto k = k_d_over_xc(ctx);
  if (!k) return none("symbol undefined");
  const HypothesisStatus h = hypotheses(ctx.ts, ctx.rep);
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d, q = ctx.q;
  const i128 q2 = static_cast<i128>(q) * q;
  const std::int64_t q2_8 = static_cast<std::int64_t>(((q2 - 1) / 8) % 2);
  const std::int64_t kk = k->k;
  if (!par(x)) {
    if (ctx.pm8 == 1) return conclude(ctx, *k, {ex(d, 4) + fl(x, 4), kk}, "x even");
    return conclude(ctx, *k, {fl(x + 2, 4), kk - 1, true}, "x even");
  }
  if (ctx.pm8 != 1) return none("x odd needs p = 1 mod 8");
  if (mod_floor(x, 4) == 1) {
    return conclude(ctx, *k, {q2_8 + ex(q + 1, 2) * ex(d, 4) + ex(y, 4), kk}, "x = 1 mod 4");
  }
  if (!h.m_val || *h.m_val >= ctx.ts.r) return none("needs m < r");
  return conclude(ctx, *k, {ex(q + 1, 2) * ex(d, 4) + ex(y, 4), kk}, "x = 3 mod 4, m < r");
}

std::vector<Evaluation> eval_thm3_4(const CheckParams&, const Ctx& ctx) {
  if (!odd_q(ctx)) return none("q must be odd");
  if (!par(ctx.x)) return none("x is even");
  const HypothesisStatus h = hypotheses(ctx.ts, ctx.rep);
  if (!h.m_val || *h.m_val != ctx.ts.r) return none("needs m = r");
  const auto k = k_d_over_xc(ctx);
  if (!k) return none("symbol undefined");
  const std::int64_t y = ctx.y, d = ctx.d, q = ctx.q;
  const std::int64_t kk = k->k;
  const bool q1 = q_mod(ctx, 4) == 1;
  if (ctx.pm8 == 1) {
    return conclude(ctx, *k, {ex(q + 1, 2) * ex(d, 4) + ex(y, 4), kk}, q1 ? "q = 1 mod 4" : "q = 3 mod 4");
  }
  if (q1) return conclude(ctx, *k, {ex(q - 1, 4), kk - 1, true}, "q = 1 mod 4");
  return conclude(ctx, *k, {ex(q + 1, 4), kk, true}, "q = 3 mod 4");
}

std::vector<Evaluation> eval_thm3_5(const CheckParams&, const Ctx& ctx) {
  if (!odd_q(ctx)) return none("q must be odd");
  if (mod_floor(ctx.x, 4) != 3) return none("x is not 3 mod 4");
  const auto k = k_d_over_xc(ctx);
  if (!k) return none("symbol undefined");
  const std::int64_t y = ctx.y, d = ctx.d, q = ctx.q;
  const std::int64_t kk = k->k;
  if (ctx.pm8 == 1) {
    const HypothesisStatus h = hypotheses(ctx.ts, ctx.rep);
    if (h.m_val && *h.m_val <= ctx.ts.r) return none("needs 2^(r+1) | x + c");
    return conclude(ctx, *k, {ex(q + 1, 2) * ex(d, 4) + ex(y, 4), kk}, "p = 1 mod 8");
  }
  if (q_mod(ctx, 4) == 1) return conclude(ctx, *k, {1, kk - 1, true}, "q = 1 mod 4");
  return conclude(ctx, *k, {1, kk, true}, "q = 3 mod 4");
}

std::vector<Evaluation> eval_cor3_1(const CheckParams&, const Ctx& ctx) {
  const std::int64_t p60 = ctx.p % 60;
  if (p60 != 1 && p60 != 49) return none("p is not 1 or 49 mod 60");
  if (std::gcd(ctx.x + ctx.d, std::int64_t{15}) != 1) return none("x + d not invertible mod 15");
  const std::int64_t n = mul_mod(ctx.c, inv_mod(ctx.x + ctx.d, 15), 15);
  // Class of n = c / (x + d) mod 15 and the symbol ((n + i) / 15)_4 it fixes.
  int cls = 0;  // 0: {0, +-1}, 1: {+-4}, 2: {5, 6}, 3: {-5, -6}
  I4 k{};
  switch (n) {
    case 0: case 1: case 14: cls = 0; k = I4{0}; break;
    case 4: case 11: cls = 1; k = I4{2}; break;
    case 5: case 6: cls = 2; k = I4{3}; break;
    case 9: case 10: cls = 3; k = I4{1}; break;
    default: return none("c / (x + d) outside the table");
  }
  const std::int64_t x = ctx.x, y = ctx.y;
  const std::string note = "n=" + std::to_string(n);
  if (ctx.pm8 == 1) {
    const std::int64_t e = ex(y, 4);
    switch (cls) {
      case 0: return conclude(ctx, k, {e, 0}, note);
      case 1: return conclude(ctx, k, {e + 1, 0}, note);
      case 2: return conclude(ctx, k, {e, 3}, note);
      default: return conclude(ctx, k, {e + 1, 3}, note);
    }
  }
  const std::int64_t e = ex(x - 1, 2);
  switch (cls) {
    case 0: return conclude(ctx, k, {e, 0, true}, note);
    case 1: return conclude(ctx, k, {e + 1, 0, true}, note);
    case 2: return conclude(ctx, k, {e + 1, 1, true}, note);
    default: return conclude(ctx, k, {e, 1, true}, note);
  }
}

}  // namespace qrecip::detail

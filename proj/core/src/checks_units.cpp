// Quartic residuacity of quadratic units and the matching Lucas sequence
// values U_{(p-1)/4}, V_{(p-1)/4} modulo p.

#include <string>

#include "checks.hpp"

namespace qrecip::detail {

namespace {

std::vector<Evaluation> none(std::string note) { return {not_applicable(std::move(note))}; }

constexpr Term kZero{0, 0, false, 0};

// Parity of 2^(alpha - 2) for alpha >= 2.
std::int64_t pow2_par(std::int64_t alpha) { return alpha == 2 ? 1 : 0; }

// cx / (dy) mod p, a square root of q; signed multiplies by (-1)^((x0 - 1) / 2).
std::int64_t root_of_q(const Ctx& ctx, bool signed_root) {
  const std::int64_t p = ctx.p;
  std::int64_t r = mul_mod(mul_mod(ctx.c, ctx.x, p), inv_mod(mul_mod(ctx.d, ctx.y, p), p), p);
  if (signed_root && par(ex(ctx.rep.x0 - 1, 2))) r = sub_mod(0, r, p);
  return r;
}

std::int64_t quarter(const Ctx& ctx) { return (ctx.p - 1) / 4; }

bool four_divides(std::int64_t v) { return mod_floor(v, 4) == 0; }

void observe_units(Evaluation& ev, const Ctx& ctx, std::int64_t b, std::int64_t r, std::int64_t pred_plus,
                   std::int64_t pred_minus) {
  const std::int64_t n = quarter(ctx);
  observe(ev, "((b+r)/2)^((p-1)/4)", pred_plus, unit_power(b, r, n, ctx.p));
  observe(ev, "((b-r)/2)^((p-1)/4)", pred_minus, unit_power(b, sub_mod(0, r, ctx.p), n, ctx.p));
}

// The unit (b + sqrt(b^2 - 4c)) / 2 raised to (p-1)/4, read from U and V.
void observe_lucas_unit(Evaluation& ev, const Ctx& ctx, LucasParams lp, std::int64_t predicted) {
  const LucasPair uv = lucas_uv_mod(lp, quarter(ctx), ctx.p);
  observe(ev, "U_((p-1)/4)", 0, uv.u);
  observe(ev, "V_((p-1)/4)/2", predicted, mul_mod(uv.v, (ctx.p + 1) / 2, ctx.p));
}

void observe_uv(Evaluation& ev, const Ctx& ctx, LucasParams lp, const Term& u, const Term& v) {
  const LucasPair uv = lucas_uv_mod(lp, quarter(ctx), ctx.p);
  observe(ev, "U_((p-1)/4)", eval(u, ctx), uv.u);
  observe(ev, "V_((p-1)/4)", eval(v, ctx), uv.v);
}

void observe_divisibility(Evaluation& ev, const Ctx& ctx, LucasParams lp, bool criterion) {
  const LucasPair uv = lucas_uv_mod(lp, (ctx.p - 1) / 8, ctx.p);
  observe(ev, "p|U_((p-1)/8)", criterion ? 1 : 0, uv.u == 0 ? 1 : 0);
}

std::int64_t lucas_c_alpha(std::int64_t alpha) { return -(std::int64_t{1} << (2 * (alpha - 1))); }

// Unit value predicted when 4 | xy for q = b^2 + 4.
Term b4_unit_term(const Ctx& ctx, std::int64_t b) {
  if (four_divides(ctx.x)) return {fl(b, 4) + ex(ctx.x, 4), 3};
  return {ex(ctx.d, 4) + ex(ctx.y, 4), 0};
}

Term b_alpha_p1_term(const Ctx& ctx, std::int64_t b, std::int64_t alpha) {
  if (four_divides(ctx.x)) return {ex(b * b - 1, 8) + pow2_par(alpha) + ex(ctx.d + ctx.x, 4) * alpha, 0};
  return {ex(ctx.d + ctx.y, 4) * alpha, 0};
}

std::int64_t b_alpha_p5_exp(const Ctx& ctx, std::int64_t b, std::int64_t alpha) {
  if (!par(ctx.x)) return ex((b + 2) * (b + 2) - 1, 8) + ex(b + 1, 2) * alpha;
  return ex(b - 1, 2) * (alpha + 1);
}

}  // namespace

std::vector<Evaluation> eval_thm5_1(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param;
  if (!par(b)) return none("b must be odd");
  Evaluation ev;
  const std::int64_t x = ctx.x, y = ctx.y;
  if (!four_divides(x * y)) {
    const Term t = !par(x) ? Term{fl(b, 4) + ex(ctx.d, 4), 3} : Term{0, 0};
    const std::int64_t pred = eval(t, ctx);
    ev.note = !par(x) ? "2 || x" : "2 || y";
    observe_units(ev, ctx, b, root_of_q(ctx, true), pred, sub_mod(0, pred, ctx.p));
  } else {
    const std::int64_t pred = eval(b4_unit_term(ctx, b), ctx);
    ev.note = four_divides(x) ? "4 | x" : "4 | y";
    observe_units(ev, ctx, b, root_of_q(ctx, false), pred, pred);
  }
  return {ev};
}

std::vector<Evaluation> eval_cor5_1(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param;
  if (!par(b)) return none("b must be odd");
  if (!four_divides(ctx.x * ctx.y)) return none("needs 4 | xy");
  Evaluation ev;
  ev.note = four_divides(ctx.x) ? "4 | x" : "4 | y";
  const std::int64_t pred = eval(b4_unit_term(ctx, b), ctx);
  observe_lucas_unit(ev, ctx, {b, -1}, pred);
  const std::int64_t r = root_of_q(ctx, false);
  observe(ev, "((b+r)/2)^((p-1)/4)", pred, unit_power(b, r, quarter(ctx), ctx.p));
  return {ev};
}

std::vector<Evaluation> eval_thm5_2(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param, alpha = *params.alpha;
  if (!par(b) || alpha < 2) return none("needs b odd and alpha >= 2");
  Evaluation ev;
  if (ctx.pm8 == 1) {
    const std::int64_t pred = eval(b_alpha_p1_term(ctx, b, alpha), ctx);
    ev.note = four_divides(ctx.x) ? "4 | x" : "4 | y";
    observe_units(ev, ctx, b, root_of_q(ctx, false), pred, pred);
  } else {
    const std::int64_t pred = eval({b_alpha_p5_exp(ctx, b, alpha), 0}, ctx);
    const std::int64_t plus = eval({b_alpha_p5_exp(ctx, b, alpha) + alpha, 0}, ctx);
    ev.note = !par(ctx.x) ? "2 || x" : "2 || y";
    observe_units(ev, ctx, b, root_of_q(ctx, true), plus, pred);
  }
  return {ev};
}

std::vector<Evaluation> eval_cor5_2(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param;
  if (!par(b)) return none("b must be odd");
  const std::int64_t y = ctx.y, n = quarter(ctx);
  Term t;
  switch (mod_floor(b, 8)) {
    case 1: t = {y, 0}; break;
    case 3: t = {n, 0}; break;
    case 5: t = {0, 0}; break;
    default: t = {n + y, 0}; break;
  }
  Evaluation ev;
  ev.note = "b=" + std::to_string(mod_floor(b, 8)) + " mod 8";
  const std::int64_t pred = eval(t, ctx);
  observe_lucas_unit(ev, ctx, {b, -4}, pred);
  observe_units(ev, ctx, b, root_of_q(ctx, false), pred, pred);
  return {ev};
}

std::vector<Evaluation> eval_thm6_1(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param;
  if (!par(b)) return none("b must be odd");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  Evaluation ev;
  if (!four_divides(x * y)) {
    ev.note = !par(x) ? "2 || x" : "2 || y";
    const Term u = !par(x) ? Term{fl(b, 4) + ex(d, 4) + ex(x - 2, 4), 0, true, 2}
                           : Term{ex(x - 1, 2), 1, true, 2};
    observe_uv(ev, ctx, {b, -1}, u, kZero);
  } else {
    ev.note = four_divides(x) ? "4 | x" : "4 | y";
    const Term v = four_divides(x) ? Term{fl(b, 4) + ex(x, 4), 3, false, 2}
                                   : Term{ex(d + y, 4), 0, false, 2};
    observe_uv(ev, ctx, {b, -1}, kZero, v);
  }
  return {ev};
}

std::vector<Evaluation> eval_thm6_2(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param;
  if (!par(b)) return none("b must be odd");
  if (ctx.pm8 != 1) return none("needs p = 1 mod 8");
  Evaluation ev;
  const bool criterion = mod_floor(ctx.y - (ctx.p - 1) / 2 - ctx.d, 8) == 0;
  observe_divisibility(ev, ctx, {b, -1}, criterion);
  return {ev};
}

std::vector<Evaluation> eval_thm6_3(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param, alpha = *params.alpha;
  if (!par(b) || alpha < 2) return none("needs b odd and alpha >= 2");
  const LucasParams lp{b, lucas_c_alpha(alpha)};
  const std::int64_t x = ctx.x;
  Evaluation ev;
  if (ctx.pm8 == 1) {
    ev.note = four_divides(x) ? "4 | x" : "4 | y";
    Term v = b_alpha_p1_term(ctx, b, alpha);
    v.scale = 2;
    observe_uv(ev, ctx, lp, kZero, v);
    return {ev};
  }
  const bool x2 = !par(x);
  ev.note = x2 ? "2 || x" : "2 || y";
  const std::int64_t bb = ex((b + 2) * (b + 2) - 1, 8);
  if (par(alpha)) {
    const Term u = x2 ? Term{bb + ex(b - 1, 2) + ex(x - 2, 4), 1, true, 2} : Term{ex(x + 1, 2), 1, true, 2};
    observe_uv(ev, ctx, lp, u, kZero);
  } else {
    const Term v = x2 ? Term{bb, 0, false, 2} : Term{ex(b - 1, 2), 0, false, 2};
    observe_uv(ev, ctx, lp, kZero, v);
  }
  return {ev};
}

std::vector<Evaluation> eval_thm6_4(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t b = *params.b_param, alpha = *params.alpha;
  if (!par(b) || alpha < 2) return none("needs b odd and alpha >= 2");
  if (ctx.pm8 != 1) return none("needs p = 1 mod 8");
  const std::int64_t lhs = (ctx.p - 1) / 8 + ex(ctx.d, 4);
  const std::int64_t rhs = four_divides(ctx.x) ? ex(b * b - 1, 8) + pow2_par(alpha) + ex(ctx.x, 4) * alpha
                                               : ex(ctx.y, 4) * alpha;
  Evaluation ev;
  ev.note = four_divides(ctx.x) ? "4 | x" : "4 | y";
  observe_divisibility(ev, ctx, {b, lucas_c_alpha(alpha)}, par(lhs) == par(rhs));
  return {ev};
}

std::vector<Evaluation> eval_thm7_1(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t a = *params.a_param;
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  const bool a_even = !par(a), y_even = !par(y);
  const bool ay_odd = !a_even && !y_even;
  Term u = kZero, v = kZero;
  if (ctx.pm8 == 1) {
    if (ay_odd) u = {ex(a + 1, 2) + ex(d, 4) + ex(x - 2, 4), 0, true};
    if (a_even) v = {ex(d, 4) + ex(a, 2) * y + ex(x * y, 4), 0, false, 2};
    else if (y_even) v = {ex(d, 4) + ex(y, 4), 0, false, 2};
  } else {
    if (a_even && !y_even) u = {ex(a, 2) + ex(x - 2, 4), 1, true};
    else if (a_even) u = {ex(x + 1, 2), 1, true};
    else if (y_even) u = {0, 1, true};
    if (ay_odd) v = {ex(a - 1, 2) + ex(x, 4), 1, false, 2};
  }
  Evaluation ev;
  ev.note = std::string(a_even ? "a even" : "a odd") + (y_even ? ", y even" : ", y odd");
  observe_uv(ev, ctx, {4 * a, -1}, u, v);
  return {ev};
}

std::vector<Evaluation> eval_cor7_1(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t a = *params.a_param;
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  if (!four_divides(x * y)) return none("needs 4 | xy");
  Term t;
  if (!par(a)) {
    t = {ex(d, 4) + ex(a, 2) * y + ex(x * y, 4), 0};
  } else if (four_divides(y)) {
    t = {ex(d, 4) + ex(y, 4), 0};
  } else {
    t = {ex(a - 1, 2) + ex(x, 4), 1};
  }
  Evaluation ev;
  ev.note = !par(a) ? "a even" : (four_divides(y) ? "a odd, 4 | y" : "a odd, 4 | x");
  const std::int64_t pred = eval(t, ctx);
  observe_lucas_unit(ev, ctx, {4 * a, -1}, pred);
  const std::int64_t r2 = mul_mod(2, root_of_q(ctx, false), ctx.p);
  observe_units(ev, ctx, 4 * a, r2, pred, pred);
  return {ev};
}

std::vector<Evaluation> eval_thm7_2(const CheckParams& params, const Ctx& ctx) {
  const std::int64_t a = *params.a_param;
  if (ctx.pm8 != 1) return none("needs p = 1 mod 8");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  bool criterion = false;
  if (!par(a)) {
    criterion = par((ctx.p - 1) / 8) == par(ex(d, 4) + ex(a, 2) * y + ex(x * y, 4));
  } else if (four_divides(y)) {
    criterion = par((ctx.p - 1) / 8) == par(ex(d, 4) + ex(y, 4));
  }
  Evaluation ev;
  ev.note = !par(a) ? "a even" : (four_divides(y) ? "a odd, 4 | y" : "a odd, y/4 not integral");
  observe_divisibility(ev, ctx, {4 * a, -1}, criterion);
  return {ev};
}

}  // namespace qrecip::detail

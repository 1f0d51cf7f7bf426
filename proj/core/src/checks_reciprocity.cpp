// Congruences for q^[p/8] mod p in terms of a rational power residue mod q.

#include <cstdlib>
#include <numeric>
#include <string>

#include "checks.hpp"
#include "qrecip/error.hpp"
#include "qrecip/symbols.hpp"

namespace qrecip::detail {

namespace {

std::vector<Evaluation> none(std::string note) { return {not_applicable(std::move(note))}; }

Evaluation conclude(const Ctx& ctx, int m, const Term& term, std::string note) {
  Evaluation ev;
  ev.note = std::move(note);
  ev.exponent = m;
  const Observation lhs = q_power(ctx);
  observe(ev, lhs.label, eval(term, ctx), lhs.value);
  return ev;
}

bool congruent(std::int64_t a, std::int64_t b, std::int64_t q) { return mod_floor(a - b, q) == 0; }

// +1 when a = b, -1 when a = -b (mod q), 0 otherwise.
int pm_class(std::int64_t a, std::int64_t b, std::int64_t q) {
  if (congruent(a, b, q)) return 1;
  if (congruent(a, -b, q)) return -1;
  return 0;
}

std::int64_t neg_if(int sign) { return sign < 0 ? 1 : 0; }

// delta(x) = 1 when 8 | x and -1 otherwise, as a sign exponent.
std::int64_t delta_exp(std::int64_t x) { return mod_floor(x, 8) == 0 ? 0 : 1; }

Term thm4_1_term(const Ctx& ctx, int m) {
  const std::int64_t x = ctx.x, y = ctx.y, q = ctx.q;
  if (ctx.pm8 == 1) return {ex(y, 4) + ex(q + 1, 4) * ex(x - 1, 2), m};
  return {ex(q - 3, 4) * ex(x - 1, 2), m, true};
}

Term thm4_2_term(const Ctx& ctx, int m) {
  if (ctx.pm8 == 1) return {ex(ctx.y, 4), m};
  return {ex(ctx.x - 1, 2), m, true};
}

Term thm4_3_term(const Ctx& ctx, int m) {
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d, q = ctx.q;
  if (ctx.pm8 == 1) {
    if (!par(x)) return {ex(d, 4) + fl(x + 2, 4), m};
    return {ex(q - 1, 4) * ex(x - 1, 2) + ex(d, 4) + ex(y, 4), m};
  }
  if (!par(x)) return {fl(x, 4), m + 1, true};
  return {1 + ex(q + 3, 4) * ex(x - 1, 2), m + 1, true};
}

Term thm4_4_term(const Ctx& ctx, int m) {
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  if (ctx.pm8 == 1) return {ex(d, 4) + ex(x * y, 4), m};
  if (!par(x)) return {ex(x - 2, 4), m + 1, true};
  return {ex(x + 1, 2), m + 1, true};
}

std::vector<Evaluation> over_decompositions(const Ctx& ctx,
                                            std::optional<int> (*m_of)(const Ctx&, std::int64_t, std::int64_t),
                                            Term (*term)(const Ctx&, int)) {
  std::vector<Evaluation> out;
  for (const auto& [a, b] : decompositions(ctx.q)) {
    const auto m = m_of(ctx, a, b);
    Evaluation ev = m ? conclude(ctx, *m, term(ctx, *m), "a=" + std::to_string(a) + ",b=" + std::to_string(b))
                      : not_applicable("residue undefined");
    ev.variant = std::pair{a, b};
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace

std::vector<Evaluation> eval_thm4_1(const CheckParams&, const Ctx& ctx) {
  if (ctx.q % 4 != 3 || !is_prime(ctx.q)) return none("q must be a prime 3 mod 4");
  const auto m = m_thm4_1(ctx);
  if (!m) return none("residue undefined");
  return {conclude(ctx, *m, thm4_1_term(ctx, *m), "")};
}

std::vector<Evaluation> eval_cor4_1(const CheckParams&, const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 3 || !is_prime(q)) return none("q must be a prime 3 mod 8");
  const std::int64_t x = ctx.x, y = ctx.y;
  const auto m = m_thm4_1(ctx);
  if (!m) return none("residue undefined");
  const bool p1 = ctx.pm8 == 1;
  if (ctx.d % q == 0) {
    const int s = pm_class(x, ctx.c, q);
    if (s == 0) return none("x is not +-c mod q");
    if (p1) return {conclude(ctx, *m, {neg_if(s) + ex(x - 1, 2) + ex(y, 4), 0}, "x = +-c")};
    return {conclude(ctx, *m, {neg_if(s), 0, true}, "x = +-c")};
  }
  if (ctx.c % q == 0) {
    const int s = pm_class(x, ctx.d, q);
    if (s == 0) return none("x is not +-d mod q");
    if (p1) return {conclude(ctx, *m, {neg_if(-s) + ex(q - 3, 8) + ex(x - 1, 2) + ex(y, 4), 1}, "x = +-d")};
    return {conclude(ctx, *m, {neg_if(-s) + ex(q - 3, 8), 1, true}, "x = +-d")};
  }
  return none("q does not divide cd");
}

std::vector<Evaluation> eval_thm4_2(const CheckParams&, const Ctx& ctx) {
  if (ctx.q % 8 != 7 || !is_prime(ctx.q)) return none("q must be a prime 7 mod 8");
  const auto m = m_thm4_2(ctx);
  if (!m) return none("residue undefined");
  return {conclude(ctx, *m, thm4_2_term(ctx, *m), "")};
}

std::vector<Evaluation> eval_cor4_2(const CheckParams&, const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 7 || !is_prime(q)) return none("q must be a prime 7 mod 8");
  const auto m = m_thm4_2(ctx);
  if (!m) return none("residue undefined");
  const std::int64_t x = ctx.x, y = ctx.y;
  // Extra sign exponent by p mod 8, and whether the y/x factor appears.
  const std::int64_t e = ctx.pm8 == 1 ? ex(y, 4) : ex(x - 1, 2);
  const bool yx = ctx.pm8 == 5;
  if (ctx.c % q == 0) return {conclude(ctx, *m, {ex(q + 1, 8) + e, 0, yx}, "q | c")};
  if (ctx.d % q == 0) return {conclude(ctx, *m, {e, 0, yx}, "q | d")};
  const int s = pm_class(ctx.c, ctx.d, q);
  if (s == 0) return none("q does not divide cd(c^2 - d^2)");
  if (mod_floor(q - 7, 16) == 0) return {conclude(ctx, *m, {neg_if(s) + ex(q + 9, 16) + e, 1, yx}, "c = +-d, 16 | q-7")};
  return {conclude(ctx, *m, {ex(q + 1, 16) + e, 0, yx}, "c = +-d, 16 | q-15")};
}

std::vector<Evaluation> eval_thm4_3(const CheckParams&, const Ctx& ctx) {
  if (ctx.q % 4 != 1 || !is_prime(ctx.q)) return none("q must be a prime 1 mod 4");
  return over_decompositions(ctx, m_thm4_3, thm4_3_term);
}

std::vector<Evaluation> eval_cor4_3(const CheckParams&, const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 5 || !is_prime(q)) return none("q must be a prime 5 mod 8");
  const auto [a, b] = decompositions(q).front();
  const auto m = m_thm4_3(ctx, a, b);
  if (!m) return none("residue undefined");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  const bool x_even = !par(x);
  if (ctx.d % q == 0) {
    const int s = pm_class(x, ctx.c, q);
    if (s == 0) return none("x is not +-c mod q");
    if (ctx.pm8 == 1) {
      if (x_even) return {conclude(ctx, *m, {neg_if(s) + ex(d, 4) + ex(x + 2, 4), 0}, "x = +-c")};
      return {conclude(ctx, *m, {neg_if(s) + ex(d, 4) + ex(x - 1, 2) + ex(y, 4), 0}, "x = +-c")};
    }
    return {conclude(ctx, *m, {neg_if(s) + delta_exp(x), 1, true}, "x = +-c")};
  }
  if (ctx.c % q == 0) {
    const int s = pm_class(x, ctx.d, q);
    if (s == 0) return none("x is not +-d mod q");
    if (ctx.pm8 == 1) {
      if (x_even) return {conclude(ctx, *m, {neg_if(s) + ex(q - 5, 8) + ex(d, 4) + ex(x + 2, 4), 1}, "x = +-d")};
      return {conclude(ctx, *m, {neg_if(s) + ex(q - 5, 8) + ex(d, 4) + ex(x - 1, 2) + ex(y, 4), 1}, "x = +-d")};
    }
    return {conclude(ctx, *m, {neg_if(-s) + ex(q - 5, 8) + delta_exp(x), 0, true}, "x = +-d")};
  }
  return none("q does not divide cd");
}

std::vector<Evaluation> eval_thm4_4(const CheckParams&, const Ctx& ctx) {
  if (ctx.q % 8 != 1 || !is_prime(ctx.q)) return none("q must be a prime 1 mod 8");
  return over_decompositions(ctx, m_thm4_4, thm4_4_term);
}

std::vector<Evaluation> eval_cor4_4(const CheckParams&, const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 1 || !is_prime(q)) return none("q must be a prime 1 mod 8");
  const auto [a, b] = decompositions(q).front();
  const auto m = m_thm4_4(ctx, a, b);
  if (!m) return none("residue undefined");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  const bool q16 = mod_floor(q - 1, 16) == 0;
  int s = 0;
  std::string label;
  std::int64_t extra = 0;  // case-specific part of the sign exponent
  if (ctx.c % q == 0) {
    extra = ex(q - 1, 8);
    label = "q | c";
  } else if (ctx.d % q == 0) {
    label = "q | d";
  } else if ((s = pm_class(ctx.c, ctx.d, q)) != 0) {
    extra = q16 ? ex(q - 1, 16) : ex(q - 9, 16);
    label = q16 ? "c = +-d, 16 | q-1" : "c = +-d, 16 | q-9";
  } else {
    return none("q does not divide cd(c^2 - d^2)");
  }
  const bool signed_case = s != 0 && !q16;
  if (ctx.pm8 == 1) {
    const std::int64_t e = extra + ex(d, 4) + ex(x * y, 4);
    if (signed_case) return {conclude(ctx, *m, {neg_if(s) + e, 1}, label)};
    return {conclude(ctx, *m, {e, 0}, label)};
  }
  const std::int64_t e = extra + (par(x) ? ex(x + 1, 2) : ex(x - 2, 4));
  if (signed_case) return {conclude(ctx, *m, {neg_if(-s) + e, 0, true}, label)};
  return {conclude(ctx, *m, {e, 1, true}, label)};
}

std::vector<Evaluation> eval_cor4_5(const CheckParams&, const Ctx& ctx) {
  const auto m = m_thm4_4(ctx, 1, 4);
  if (!m) return none("residue undefined");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  const std::int64_t cm = mod_floor(ctx.c, 17), dm = mod_floor(ctx.d, 17);
  int cls = -1;  // 0: 17 | cd, 1: c = +-d, 2: c = 5d or 10d, 3: c = -5d or -10d
  if (cm == 0 || dm == 0) {
    cls = 0;
  } else {
    const std::int64_t ratio = mul_mod(cm, inv_mod(dm, 17), 17);
    if (ratio == 1 || ratio == 16) cls = 1;
    if (ratio == 5 || ratio == 10) cls = 2;
    if (ratio == 12 || ratio == 7) cls = 3;
  }
  if (cls < 0) return none("c / d outside the table");
  const std::string label = "class " + std::to_string(cls);
  if (ctx.pm8 == 1) {
    const std::int64_t e = ex(d, 4) + ex(x * y, 4);
    switch (cls) {
      case 0: return {conclude(ctx, *m, {e, 0}, label)};
      case 1: return {conclude(ctx, *m, {e + 1, 0}, label)};
      case 2: return {conclude(ctx, *m, {e, 3}, label)};
      default: return {conclude(ctx, *m, {e + 1, 3}, label)};
    }
  }
  const bool x_even = !par(x);
  switch (cls) {
    case 0: return {conclude(ctx, *m, {x_even ? ex(x - 2, 4) : ex(x + 1, 2), 1, true}, label)};
    case 1: return {conclude(ctx, *m, {x_even ? ex(x + 2, 4) : ex(x - 1, 2), 1, true}, label)};
    case 2: return {conclude(ctx, *m, {x_even ? ex(x - 2, 4) : ex(x + 1, 2), 0, true}, label)};
    default: return {conclude(ctx, *m, {1 + (x_even ? ex(x - 2, 4) : ex(x + 1, 2)), 0, true}, label)};
  }
}

std::vector<Evaluation> eval_thm4_5(const CheckParams& params, const Ctx& ctx) {
  if (!params.a_param || !params.b_param) throw CheckError("thm4.5 needs a and b");
  const std::int64_t a0 = std::abs(*params.a_param), b0 = std::abs(*params.b_param);
  if (a0 == 0 || a0 % 2 != 0 || b0 % 2 == 0 || std::gcd(a0, b0) != 1) return none("needs a even, b odd, coprime");
  const std::int64_t x = ctx.x, y = ctx.y, d = ctx.d;
  std::vector<Evaluation> out;
  for (const auto& [a, b] : {std::pair{a0, b0}, std::pair{a0, -b0}, std::pair{-a0, b0}, std::pair{-a0, -b0}}) {
    const auto m = m_thm4_5(ctx, a, b);
    Evaluation ev;
    if (!m) {
      ev = not_applicable("residue undefined");
    } else {
      const bool a4 = a % 4 == 0;
      const bool x_even = !par(x);
      const int mm = *m;
      Term t;
      if (ctx.pm8 == 1) {
        if (a4 && x_even) t = {ex(d, 4) + ex(x, 4), -mm};
        else if (a4) t = {ex(d, 4) + ex(y, 4), -mm};
        else if (x_even) t = {ex(b + 1, 2) + ex(d, 4) + ex(x - 2, 4), -(mm - 1)};
        else t = {ex(b - 1, 2) + ex(d, 4) + ex(y, 4) + ex(x - 1, 2), -(mm - 1)};
      } else {
        if (a4 && x_even) t = {ex(x - 2, 4), -(mm - 1), true};
        else if (a4) t = {ex(x + 1, 2), -(mm - 1), true};
        else if (x_even) t = {ex(x, 4) + ex(b + 1, 2), -mm, true};
        else t = {ex(b - 1, 2), -mm, true};
      }
      ev = conclude(ctx, mm, t, std::string(a4 ? "4 | a" : "2 || a") + (x_even ? ", x even" : ", x odd"));
    }
    ev.variant = std::pair{a, b};
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace qrecip::detail

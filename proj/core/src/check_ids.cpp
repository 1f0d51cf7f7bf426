#include <array>
#include <numeric>
#include <utility>
#include <vector>

#include "checks.hpp"
#include "qrecip/error.hpp"

namespace qrecip {

namespace detail {

namespace {

constexpr auto kRep = Scope::representation;
constexpr auto kPrime = Scope::prime;

const std::array<CheckInfo, 33> kChecks = {{
    {CheckId::thm3_1, "thm3.1", ParamKind::q, Gate::cxd, kRep, false, eval_thm3_1, nullptr, 0},
    {CheckId::thm3_2, "thm3.2", ParamKind::q, Gate::cxd, kRep, false, eval_thm3_2, nullptr, 0},
    {CheckId::thm3_3, "thm3.3", ParamKind::q, Gate::d0xc, kRep, false, eval_thm3_3, nullptr, 0},
    {CheckId::thm3_4, "thm3.4", ParamKind::q, Gate::d0xc, kRep, false, eval_thm3_4, nullptr, 0},
    {CheckId::thm3_5, "thm3.5", ParamKind::q, Gate::d0xc, kRep, false, eval_thm3_5, nullptr, 0},
    {CheckId::cor3_1, "cor3.1", ParamKind::fixed_q, Gate::cxd, kRep, false, eval_cor3_1, nullptr, 15},
    {CheckId::thm4_1, "thm4.1", ParamKind::q, Gate::either, kRep, false, eval_thm4_1, nullptr, 0},
    {CheckId::cor4_1, "cor4.1", ParamKind::q, Gate::either, kRep, false, eval_cor4_1, nullptr, 0},
    {CheckId::thm4_2, "thm4.2", ParamKind::q, Gate::either, kRep, false, eval_thm4_2, nullptr, 0},
    {CheckId::cor4_2, "cor4.2", ParamKind::q, Gate::either, kRep, false, eval_cor4_2, nullptr, 0},
    {CheckId::thm4_3, "thm4.3", ParamKind::q, Gate::either, kRep, false, eval_thm4_3, nullptr, 0},
    {CheckId::cor4_3, "cor4.3", ParamKind::q, Gate::either, kRep, false, eval_cor4_3, nullptr, 0},
    {CheckId::thm4_4, "thm4.4", ParamKind::q, Gate::either, kRep, false, eval_thm4_4, nullptr, 0},
    {CheckId::cor4_4, "cor4.4", ParamKind::q, Gate::either, kRep, false, eval_cor4_4, nullptr, 0},
    {CheckId::cor4_5, "cor4.5", ParamKind::fixed_q, Gate::either, kRep, false, eval_cor4_5, nullptr, 17},
    {CheckId::thm4_5, "thm4.5", ParamKind::ab, Gate::either, kRep, false, eval_thm4_5, nullptr, 0},
    {CheckId::thm5_1, "thm5.1", ParamKind::b_plus4, Gate::either, kRep, false, eval_thm5_1, nullptr, 0},
    {CheckId::cor5_1, "cor5.1", ParamKind::b_plus4, Gate::either, kRep, false, eval_cor5_1, nullptr, 0},
    {CheckId::thm5_2, "thm5.2", ParamKind::b_alpha, Gate::either, kRep, false, eval_thm5_2, nullptr, 0},
    {CheckId::cor5_2, "cor5.2", ParamKind::b_alpha2, Gate::either, kRep, false, eval_cor5_2, nullptr, 0},
    {CheckId::thm6_1, "thm6.1", ParamKind::b_plus4, Gate::either, kRep, false, eval_thm6_1, nullptr, 0},
    {CheckId::thm6_2, "thm6.2", ParamKind::b_plus4, Gate::either, kRep, false, eval_thm6_2, nullptr, 0},
    {CheckId::thm6_3, "thm6.3", ParamKind::b_alpha, Gate::either, kRep, false, eval_thm6_3, nullptr, 0},
    {CheckId::thm6_4, "thm6.4", ParamKind::b_alpha, Gate::either, kRep, false, eval_thm6_4, nullptr, 0},
    {CheckId::thm7_1, "thm7.1", ParamKind::a_lucas, Gate::either, kRep, false, eval_thm7_1, nullptr, 0},
    {CheckId::cor7_1, "cor7.1", ParamKind::a_lucas, Gate::either, kRep, false, eval_cor7_1, nullptr, 0},
    {CheckId::thm7_2, "thm7.2", ParamKind::a_lucas, Gate::either, kRep, false, eval_thm7_2, nullptr, 0},
    {CheckId::eq5_5, "eq5.5", ParamKind::none, Gate::none, kPrime, false, nullptr, eval_eq5_5, 0},
    {CheckId::lemma2_7, "lemma2.7", ParamKind::none, Gate::none, kPrime, true, nullptr, eval_lemma2_7, 0},
    {CheckId::lemma2_8, "lemma2.8", ParamKind::none, Gate::none, kPrime, true, nullptr, eval_lemma2_8, 0},
    {CheckId::lemma2_9, "lemma2.9", ParamKind::none, Gate::none, kPrime, true, nullptr, eval_lemma2_9, 0},
    {CheckId::lemma2_12, "lemma2.12", ParamKind::q, Gate::none, kRep, false, eval_lemma2_12, nullptr, 0},
    {CheckId::lemma2_13, "lemma2.13", ParamKind::q, Gate::none, kRep, false, eval_lemma2_13, nullptr, 0},
}};

// The union of the q values in the per-family grids, reused by the generic checks.
const std::vector<std::int64_t> kAllScanQ = {3,  5,  7,  11, 13, 15, 17, 19, 23,
                                             25, 29, 31, 37, 41, 65, 73, 89, 113};

std::int64_t pow4(std::int64_t alpha) {
  if (alpha < 1 || alpha > 30) throw CheckError("alpha out of range");
  return std::int64_t{1} << (2 * alpha);
}

}  // namespace

const CheckInfo& info(CheckId id) {
  const auto idx = static_cast<std::size_t>(id);
  if (idx >= kChecks.size() || kChecks[idx].id != id) throw CheckError("unknown check id");
  return kChecks[idx];
}

std::int64_t form_q(const CheckParams& params) {
  const CheckInfo& ci = info(params.check_id);
  auto need = [&](const std::optional<std::int64_t>& v, const char* what) {
    if (!v) throw CheckError(std::string(ci.name) + " needs parameter " + what);
    return *v;
  };
  switch (ci.kind) {
    case ParamKind::none: return 0;
    case ParamKind::q: return need(params.q, "q");
    case ParamKind::fixed_q: return ci.fixed_q;
    case ParamKind::ab: {
      const std::int64_t a = need(params.a_param, "a"), b = need(params.b_param, "b");
      return a * a + b * b;
    }
    case ParamKind::b_plus4: {
      const std::int64_t b = need(params.b_param, "b");
      return b * b + 4;
    }
    case ParamKind::b_alpha: {
      const std::int64_t b = need(params.b_param, "b");
      return b * b + pow4(need(params.alpha, "alpha"));
    }
    case ParamKind::b_alpha2: {
      const std::int64_t b = need(params.b_param, "b");
      return b * b + 16;
    }
    case ParamKind::a_lucas: {
      const std::int64_t a = need(params.a_param, "a");
      return 4 * a * a + 1;
    }
  }
  return 0;
}

}  // namespace detail

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const auto& ci : detail::kChecks) out.push_back(ci.id);
    return out;
  }();
  return ids;
}

std::string_view check_name(CheckId id) { return detail::info(id).name; }

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& ci : detail::kChecks) {
    if (ci.name == name) return ci.id;
  }
  return std::nullopt;
}

namespace detail {
const std::vector<std::pair<std::int64_t, std::int64_t>> kDefaultAB = {{2, 1}, {2, 3}, {4, 1}};
}  // namespace detail

ParamGrid default_grid(CheckId id) {
  using detail::ParamKind;
  ParamGrid g;
  switch (id) {
    case CheckId::thm4_1:
    case CheckId::cor4_1: g.q = {3, 11, 19}; break;
    case CheckId::thm4_2:
    case CheckId::cor4_2: g.q = {7, 23, 31}; break;
    case CheckId::thm4_3:
    case CheckId::thm4_4: g.q = {5, 13, 17, 29}; break;
    case CheckId::cor4_3: g.q = {5, 13, 29}; break;
    case CheckId::cor4_4: g.q = {17, 41, 73, 89, 97, 113}; break;
    case CheckId::thm4_5: g.a = {2, 4}; g.b = {1, 3}; break;
    case CheckId::thm5_1:
    case CheckId::cor5_1:
    case CheckId::thm6_1:
    case CheckId::thm6_2: g.b = {1, 3}; break;
    case CheckId::thm5_2: g.b = {1, 3, 5, 7}; g.alpha = {2, 3}; break;
    case CheckId::cor5_2: g.b = {1, 3, 5, 7}; break;
    case CheckId::thm6_3:
    case CheckId::thm6_4: g.b = {1, 3}; g.alpha = {2, 3}; break;
    case CheckId::thm7_1:
    case CheckId::cor7_1:
    case CheckId::thm7_2: g.a = {1, 2, 3}; break;
    default:
      if (detail::info(id).kind == ParamKind::q) g.q = detail::kAllScanQ;
      break;
  }
  return g;
}

std::vector<CheckParams> expand_params(CheckId id, const ParamGrid& grid) {
  using detail::ParamKind;
  const ParamGrid def = default_grid(id);
  auto pick = [](const std::vector<std::int64_t>& given, const std::vector<std::int64_t>& fallback) {
    return given.empty() ? fallback : given;
  };
  std::vector<CheckParams> out;
  CheckParams base;
  base.check_id = id;
  switch (detail::info(id).kind) {
    case ParamKind::none:
    case ParamKind::fixed_q: out.push_back(base); break;
    case ParamKind::q:
      for (std::int64_t q : pick(grid.q, def.q)) {
        CheckParams cp = base;
        cp.q = q;
        out.push_back(cp);
      }
      break;
    case ParamKind::ab:
      if (grid.a.empty() && grid.b.empty()) {
        // The default grid lists pairs rather than a full product.
        for (const auto& [a, b] : detail::kDefaultAB) {
          CheckParams cp = base;
          cp.a_param = a;
          cp.b_param = b;
          out.push_back(cp);
        }
        break;
      }
      for (std::int64_t a : pick(grid.a, def.a)) {
        for (std::int64_t b : pick(grid.b, def.b)) {
          if (a == 0 || a % 2 != 0 || b % 2 == 0 || std::gcd(a, b) != 1) continue;
          CheckParams cp = base;
          cp.a_param = a;
          cp.b_param = b;
          out.push_back(cp);
        }
      }
      break;
    case ParamKind::b_plus4:
    case ParamKind::b_alpha2:
      for (std::int64_t b : pick(grid.b, def.b)) {
        CheckParams cp = base;
        cp.b_param = b;
        if (detail::info(id).kind == ParamKind::b_alpha2) cp.alpha = 2;
        out.push_back(cp);
      }
      break;
    case ParamKind::b_alpha:
      for (std::int64_t b : pick(grid.b, def.b)) {
        for (std::int64_t alpha : pick(grid.alpha, def.alpha)) {
          CheckParams cp = base;
          cp.b_param = b;
          cp.alpha = alpha;
          out.push_back(cp);
        }
      }
      break;
    case ParamKind::a_lucas:
      for (std::int64_t a : pick(grid.a, def.a)) {
        CheckParams cp = base;
        cp.a_param = a;
        out.push_back(cp);
      }
      break;
  }
  return out;
}

}  // namespace qrecip

#include "qrecip/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "checks.hpp"
#include "qrecip/error.hpp"
#include "qrecip/sieve.hpp"

namespace qrecip {

namespace detail {

Ctx make_ctx(const TwoSquares& ts, const QuadRep& rep) {
  Ctx ctx;
  ctx.p = ts.p;
  ctx.q = rep.q;
  ctx.ts = ts;
  ctx.rep = rep;
  ctx.c = ts.c;
  ctx.d = ts.d;
  ctx.x = rep.x;
  ctx.y = rep.y;
  ctx.pm8 = static_cast<int>(ts.p % 8);
  ctx.dc = mul_mod(ts.d, inv_mod(ts.c, ts.p), ts.p);
  ctx.yx = mul_mod(rep.y, inv_mod(rep.x, ts.p), ts.p);
  return ctx;
}

std::int64_t ex(std::int64_t n, std::int64_t k) {
  if (n % k != 0) {
    throw std::logic_error("case table expects " + std::to_string(k) + " | " + std::to_string(n));
  }
  return n / k;
}

std::int64_t eval(const Term& t, const Ctx& ctx) {
  const std::int64_t p = ctx.p;
  std::int64_t v = mod_floor(t.scale, p);
  if (par(t.sign)) v = sub_mod(0, v, p);
  v = mul_mod(v, pow_mod(ctx.dc, mod_floor(t.dc_pow, 4), p), p);
  if (t.yx) v = mul_mod(v, ctx.yx, p);
  return v;
}

Evaluation not_applicable(std::string note) {
  Evaluation ev;
  ev.structural = false;
  ev.note = std::move(note);
  return ev;
}

void observe(Evaluation& ev, std::string label, std::int64_t predicted, std::int64_t actual) {
  ev.predicted.push_back({label, predicted});
  ev.actual.push_back({std::move(label), actual});
}

Observation q_power(const Ctx& ctx) {
  return {"q^[p/8]", pow_mod(ctx.q, ctx.p / 8, ctx.p)};
}

std::optional<I4> k_c_over_xd(const Ctx& ctx) {
  if (ctx.q < 3 || ctx.q % 2 == 0) return std::nullopt;
  try {
    return quartic_rational(ctx.c, ctx.x + ctx.d, ctx.q);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<I4> k_d_over_xc(const Ctx& ctx) {
  if (ctx.q < 3 || ctx.q % 2 == 0) return std::nullopt;
  if (std::gcd(ctx.x + ctx.c, ctx.q) != 1) return std::nullopt;
  try {
    return quartic_jacobi({ctx.d, -(ctx.x + ctx.c)}, OddGauss(ctx.q, 0));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<int> m_thm4_1(const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 4 != 3 || !is_prime(q) || ctx.x % q == 0) return std::nullopt;
  const GaussInt z = gauss_mul_mod({ctx.c, -ctx.d}, {inv_mod(ctx.x, q), 0}, q);
  const int m = unit_exponent_mod(gauss_pow_mod(z, (q + 1) / 4, q), q);
  return m < 0 ? std::nullopt : std::optional<int>(m);
}

std::optional<int> m_thm4_2(const Ctx& ctx) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 7 || !is_prime(q)) return std::nullopt;
  try {
    const GaussInt z = gauss_mul_mod({ctx.c, -ctx.d}, gauss_inv_mod({ctx.c, ctx.d}, q), q);
    const int m = unit_exponent_mod(gauss_pow_mod(z, (q + 1) / 8, q), q);
    return m < 0 ? std::nullopt : std::optional<int>(m);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<int> m_thm4_3(const Ctx& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t q = ctx.q;
  if (q % 4 != 1 || !is_prime(q)) return std::nullopt;
  try {
    const std::int64_t num = add_mod(mul_mod(a, ctx.c, q), mul_mod(b, ctx.d, q), q);
    const std::int64_t value = mul_mod(num, inv_mod(mul_mod(a, ctx.x, q), q), q);
    return i4_log(pow_mod(value, (q - 1) / 4, q), mul_mod(b, inv_mod(a, q), q), q);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<int> m_thm4_4(const Ctx& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t q = ctx.q;
  if (q % 8 != 1 || !is_prime(q)) return std::nullopt;
  try {
    const std::int64_t plus = add_mod(mul_mod(a, ctx.c, q), mul_mod(b, ctx.d, q), q);
    const std::int64_t minus = sub_mod(mul_mod(a, ctx.c, q), mul_mod(b, ctx.d, q), q);
    const std::int64_t value = mul_mod(plus, inv_mod(minus, q), q);
    return i4_log(pow_mod(value, (q - 1) / 8, q), mul_mod(b, inv_mod(a, q), q), q);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<int> m_thm4_5(const Ctx& ctx, std::int64_t a, std::int64_t b) {
  if (a == 0 || a % 2 != 0 || b % 2 == 0) return std::nullopt;
  try {
    const OddGauss beta(b, a);
    const I4 top = quartic_jacobi({a * ctx.c + b * ctx.d, 0}, beta);
    const I4 bottom = quartic_jacobi({ctx.x, 0}, beta);
    return (top * bottom.inverse()).k;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::vector<std::pair<std::int64_t, std::int64_t>> decompositions(std::int64_t q) {
  const TwoSquares ts = two_squares(q);
  const std::int64_t u = std::abs(ts.c), v = std::abs(ts.d);
  return {{u, v}, {u, -v}, {-u, v}, {-u, -v}, {v, u}, {v, -u}, {-v, u}, {-v, -u}};
}

}  // namespace detail

using detail::Ctx;

I4 symbol_exponent(const CheckParams& params, const TwoSquares& ts, const QuadRep& rep,
                   std::optional<std::pair<std::int64_t, std::int64_t>> variant) {
  const Ctx ctx = detail::make_ctx(ts, rep);
  auto lift = [](std::optional<int> m) {
    if (!m) throw DomainError("residue symbol undefined for this instance");
    return I4{*m};
  };
  auto lift4 = [](std::optional<I4> k) {
    if (!k) throw DomainError("residue symbol undefined for this instance");
    return *k;
  };
  auto ab_for = [&](std::int64_t q) {
    if (variant) return *variant;
    return detail::decompositions(q).front();
  };
  switch (params.check_id) {
    case CheckId::thm3_1:
    case CheckId::thm3_2:
    case CheckId::cor3_1: return lift4(detail::k_c_over_xd(ctx));
    case CheckId::thm3_3:
    case CheckId::thm3_4:
    case CheckId::thm3_5: return lift4(detail::k_d_over_xc(ctx));
    case CheckId::thm4_1:
    case CheckId::cor4_1: return lift(detail::m_thm4_1(ctx));
    case CheckId::thm4_2:
    case CheckId::cor4_2: return lift(detail::m_thm4_2(ctx));
    case CheckId::thm4_3:
    case CheckId::cor4_3: {
      const auto [a, b] = ab_for(ctx.q);
      return lift(detail::m_thm4_3(ctx, a, b));
    }
    case CheckId::thm4_4:
    case CheckId::cor4_4:
    case CheckId::cor4_5: {
      const auto [a, b] = ab_for(ctx.q);
      return lift(detail::m_thm4_4(ctx, a, b));
    }
    case CheckId::thm4_5: {
      const auto [a, b] = variant ? *variant
                                  : std::pair{params.a_param.value_or(0), params.b_param.value_or(0)};
      return lift(detail::m_thm4_5(ctx, a, b));
    }
    default: throw CheckError(std::string(check_name(params.check_id)) + " has no residue symbol");
  }
}

namespace {

bool gate_holds(detail::Gate gate, const HypothesisStatus& h) {
  switch (gate) {
    case detail::Gate::none: return true;
    case detail::Gate::cxd: return h.gcd_c_xd_ok;
    case detail::Gate::d0xc: return h.gcd_d0_xc_ok;
    case detail::Gate::either: return h.gcd_c_xd_ok || h.gcd_d0_xc_ok;
  }
  return false;
}

void finish(VerifyRecord& rec, detail::Evaluation ev, bool explore) {
  rec.structural_ok = ev.structural;
  rec.note = std::move(ev.note);
  rec.exponent = ev.exponent;
  rec.predicted = std::move(ev.predicted);
  rec.actual = std::move(ev.actual);
  rec.variant = ev.variant;
  rec.applicable = rec.structural_ok && (rec.hypothesis_ok || explore);
  rec.explore_mode = rec.applicable && !rec.hypothesis_ok;
  rec.matched = rec.applicable && !rec.predicted.empty() && rec.predicted == rec.actual;
}

}  // namespace

std::vector<VerifyRecord> run_check(const CheckParams& params, std::int64_t p, bool explore) {
  const detail::CheckInfo& ci = detail::info(params.check_id);
  if (!is_prime(p)) throw DomainError("run_check needs a prime p");
  std::vector<VerifyRecord> out;

  if (ci.scope == detail::Scope::prime) {
    if (p == 2 || (!ci.odd_primes && p % 4 != 1)) return out;
    VerifyRecord rec;
    rec.check_id = params.check_id;
    rec.p = p;
    rec.params = params;
    if (p % 4 == 1) rec.ts = two_squares(p);
    finish(rec, ci.prime_eval(params, p), explore);
    out.push_back(std::move(rec));
    return out;
  }

  if (p % 4 != 1) return out;
  const std::int64_t q = detail::form_q(params);
  if (q < 2) throw CheckError("q must be at least 2");
  if (q % p == 0) return out;
  const TwoSquares ts = two_squares(p);
  for (const QuadRep& rep : quad_reps(p, q)) {
    const Ctx ctx = detail::make_ctx(ts, rep);
    const HypothesisStatus hyp = hypotheses(ts, rep);
    const std::size_t first = out.size();
    for (detail::Evaluation& ev : ci.rep_eval(params, ctx)) {
      VerifyRecord rec;
      rec.check_id = params.check_id;
      rec.p = p;
      rec.params = params;
      rec.q = q;
      rec.ts = ts;
      rec.rep = rep;
      rec.hyp = hyp;
      rec.hypothesis_ok = gate_holds(ci.gate, hyp);
      finish(rec, std::move(ev), explore);
      out.push_back(std::move(rec));
    }
    // Variants of one instance: a partial failure is variant-dependent.
    bool any_match = false;
    for (std::size_t i = first; i < out.size(); ++i) {
      any_match = any_match || (out[i].applicable && !out[i].explore_mode && out[i].matched);
    }
    if (any_match && out.size() - first > 1) {
      for (std::size_t i = first; i < out.size(); ++i) {
        if (out[i].applicable && !out[i].explore_mode && !out[i].matched) out[i].variant_dependent = true;
      }
    }
  }
  return out;
}

void Summary::add(const VerifyRecord& rec) {
  ++total;
  if (rec.applicable) {
    if (rec.explore_mode) {
      ++explore_applicable;
      ++(rec.matched ? explore_matched : explore_mismatched);
    } else {
      ++applicable;
      if (rec.matched) {
        ++matched;
      } else if (rec.variant_dependent) {
        ++variant_dependent;
      } else {
        ++mismatched;
      }
    }
  } else if (!rec.hypothesis_ok) {
    ++skipped_no_hypothesis;
  } else {
    ++skipped_structural;
  }
}

Summary& Summary::operator+=(const Summary& o) {
  total += o.total;
  applicable += o.applicable;
  matched += o.matched;
  mismatched += o.mismatched;
  variant_dependent += o.variant_dependent;
  skipped_structural += o.skipped_structural;
  skipped_no_hypothesis += o.skipped_no_hypothesis;
  explore_applicable += o.explore_applicable;
  explore_matched += o.explore_matched;
  explore_mismatched += o.explore_mismatched;
  return *this;
}

Summary run_suite(const std::vector<CheckId>& checks, const SuiteOptions& opts,
                  const std::function<void(const VerifyRecord&)>& sink) {
  if (opts.p_max < 3) throw DomainError("p_max must be at least 3");
  if (opts.jobs < 1) throw DomainError("jobs must be positive");

  // Canonical order and parameter lists, fixed up front.
  std::vector<CheckId> ordered;
  for (CheckId id : all_check_ids()) {
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) ordered.push_back(id);
  }
  std::vector<std::vector<CheckParams>> params;
  for (CheckId id : ordered) params.push_back(expand_params(id, opts.grid));

  const std::vector<std::int64_t> primes = primes_in_range(std::max<std::int64_t>(opts.p_min, 3), opts.p_max);

  auto records_for = [&](std::int64_t p) {
    std::vector<VerifyRecord> recs;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (const CheckParams& cp : params[i]) {
        std::vector<VerifyRecord> part = run_check(cp, p, opts.explore);
        std::move(part.begin(), part.end(), std::back_inserter(recs));
      }
    }
    return recs;
  };

  Summary summary;
  constexpr std::size_t kBlock = 256;
  std::vector<std::vector<VerifyRecord>> block(kBlock);
  for (std::size_t start = 0; start < primes.size(); start += kBlock) {
    const std::size_t count = std::min(kBlock, primes.size() - start);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        if (failed) return;
        try {
          block[i] = records_for(primes[start + i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    };
    const int threads = std::min<int>(opts.jobs, static_cast<int>(count));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < count; ++i) {
      for (const VerifyRecord& rec : block[i]) {
        summary.add(rec);
        if (sink) sink(rec);
      }
      block[i].clear();
    }
  }
  return summary;
}

SuiteResult run_suite(const std::vector<CheckId>& checks, const SuiteOptions& opts) {
  SuiteResult result;
  result.summary = run_suite(checks, opts, [&](const VerifyRecord& rec) { result.records.push_back(rec); });
  return result;
}

}  // namespace qrecip

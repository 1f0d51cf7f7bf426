#pragma once

// Enumerates primes p = 1 (mod 4) with their representations and checks
// each closed-form congruence against a direct modular computation.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrecip/represent.hpp"
#include "qrecip/symbols.hpp"

namespace qrecip {

enum class CheckId {
  thm3_1, thm3_2, thm3_3, thm3_4, thm3_5, cor3_1,
  thm4_1, cor4_1, thm4_2, cor4_2, thm4_3, cor4_3, thm4_4, cor4_4, cor4_5, thm4_5,
  thm5_1, cor5_1, thm5_2, cor5_2,
  thm6_1, thm6_2, thm6_3, thm6_4,
  thm7_1, cor7_1, thm7_2,
  eq5_5, lemma2_7, lemma2_8, lemma2_9, lemma2_12, lemma2_13,
};

// Every id in canonical order; this is also the order of suite output.
const std::vector<CheckId>& all_check_ids();
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

struct CheckParams {
  CheckId check_id{};
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> b_param;
  std::optional<std::int64_t> a_param;
  std::optional<std::int64_t> alpha;
};

// One named residue (or 0/1 truth value) of a claim.
struct Observation {
  std::string label;
  std::int64_t value = 0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct VerifyRecord {
  CheckId check_id{};
  std::int64_t p = 0;
  CheckParams params;
  std::int64_t q = 0;  // form parameter of x^2 + q y^2, 0 when unused
  std::optional<TwoSquares> ts;
  std::optional<QuadRep> rep;
  HypothesisStatus hyp;
  // (a, b) when the check ranges over decompositions or sign choices.
  std::optional<std::pair<std::int64_t, std::int64_t>> variant;
  bool hypothesis_ok = true;  // gcd hypotheses of the check hold
  bool structural_ok = true;  // the arithmetic side conditions of the check hold
  bool applicable = false;
  bool explore_mode = false;  // applicable only because hypotheses were waived
  std::optional<int> exponent;
  std::vector<Observation> predicted;
  std::vector<Observation> actual;
  bool matched = false;
  // A mismatch on some variants of an instance while others match.
  bool variant_dependent = false;
  std::string note;

  // An applicable, hypothesis-satisfying record whose claim failed.
  bool is_counterexample() const {
    return applicable && !explore_mode && !matched && !variant_dependent;
  }
};

// Exponent k (or m) of the residue symbol the check reads its case from.
// variant supplies (a, b) for checks that range over them.
I4 symbol_exponent(const CheckParams& params, const TwoSquares& ts, const QuadRep& rep,
                   std::optional<std::pair<std::int64_t, std::int64_t>> variant = std::nullopt);

// Records for a single prime and a single parameter choice, in
// representation order. p must be prime; results are empty when p | q.
std::vector<VerifyRecord> run_check(const CheckParams& params, std::int64_t p,
                                    bool explore = false);

// Value lists a suite expands into CheckParams. Empty lists fall back to
// the per-check defaults below.
struct ParamGrid {
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> alpha;
};

// Cross product of the lists the check consumes. With no (a, b) lists given,
// thm4.5 expands to the pairs (2, 1), (2, 3), (4, 1) instead of the product
// of default_grid's value sets.
std::vector<CheckParams> expand_params(CheckId id, const ParamGrid& grid);
ParamGrid default_grid(CheckId id);

struct SuiteOptions {
  std::int64_t p_min = 5;
  std::int64_t p_max = 1000;
  ParamGrid grid;
  bool explore = false;
  int jobs = 1;
};

struct Summary {
  std::int64_t total = 0;
  std::int64_t applicable = 0;
  std::int64_t matched = 0;
  std::int64_t mismatched = 0;  // counterexamples
  std::int64_t variant_dependent = 0;
  std::int64_t skipped_structural = 0;
  std::int64_t skipped_no_hypothesis = 0;
  std::int64_t explore_applicable = 0;
  std::int64_t explore_matched = 0;
  std::int64_t explore_mismatched = 0;

  void add(const VerifyRecord& rec);
  Summary& operator+=(const Summary& o);
};

struct SuiteResult {
  std::vector<VerifyRecord> records;
  Summary summary;
};

// Runs every check over the primes in [p_min, p_max]. Records are delivered
// to sink ordered by (p, check, parameters, representation) for any jobs.
Summary run_suite(const std::vector<CheckId>& checks, const SuiteOptions& opts,
                  const std::function<void(const VerifyRecord&)>& sink);

SuiteResult run_suite(const std::vector<CheckId>& checks, const SuiteOptions& opts);

}  // namespace qrecip

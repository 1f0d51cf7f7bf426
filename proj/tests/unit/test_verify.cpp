#include <doctest.h>

#include "qrecip/error.hpp"
#include "qrecip/represent.hpp"
#include "qrecip/verify.hpp"

using namespace qrecip;

namespace {

CheckParams params_for(CheckId id) {
  CheckParams cp;
  cp.check_id = id;
  return cp;
}

}  // namespace

TEST_CASE("check ids round-trip") {
  CHECK(all_check_ids().size() == 33);
  for (CheckId id : all_check_ids()) {
    const auto back = parse_check_id(check_name(id));
    REQUIRE(back);
    CHECK(*back == id);
  }
  CHECK(check_name(CheckId::thm4_2) == "thm4.2");
  CHECK_FALSE(parse_check_id("nosuch"));
}

TEST_CASE("worked example: 15^7 mod 61") {
  const auto recs = run_check(params_for(CheckId::cor3_1), 61);
  REQUIRE(recs.size() == 2);
  const VerifyRecord& r = recs[0];
  CHECK(r.rep->x == -1);
  CHECK(r.q == 15);
  CHECK(r.applicable);
  CHECK(r.matched);
  REQUIRE(r.actual.size() == 1);
  CHECK(r.actual[0].value == 22);
  CHECK(r.predicted[0].value == 22);
  CHECK(r.exponent == 1);  // (5 + (-7)i / 15)_4 = i
  // x = 1 gives x + d = -5, which shares the factor 5 with c.
  CHECK_FALSE(recs[1].hyp.gcd_c_xd_ok);
  CHECK_FALSE(recs[1].applicable);
}

TEST_CASE("octic criterion for q = 7 at p = 29") {
  CheckParams cp = params_for(CheckId::thm4_2);
  cp.q = 7;
  const auto recs = run_check(cp, 29);
  REQUIRE_FALSE(recs.empty());
  CHECK(recs[0].exponent == 1);
  CHECK(recs[0].predicted[0].value == 24);
  CHECK(recs[0].matched);
  const TwoSquares ts = two_squares(29);
  CHECK(symbol_exponent(cp, ts, quad_reps(29, 7)[0]) == I4{1});
}

TEST_CASE("q = a^2 + b^2 criterion at p = 29, q = 5") {
  CheckParams cp = params_for(CheckId::thm4_5);
  cp.a_param = 2;
  cp.b_param = 1;
  const TwoSquares ts = two_squares(29);
  const QuadRep rep = quad_reps(29, 5)[1];
  CHECK(rep.x == 3);
  CHECK(symbol_exponent(cp, ts, rep, std::pair<std::int64_t, std::int64_t>{2, 1}) == I4{2});
  for (const auto& r : run_check(cp, 29)) CHECK(r.matched);
}

TEST_CASE("Lucas divisibility criterion at p = 41, b = 1") {
  CheckParams cp = params_for(CheckId::thm6_2);
  cp.b_param = 1;
  const auto recs = run_check(cp, 41);
  REQUIRE_FALSE(recs.empty());
  for (const auto& r : recs) {
    CHECK(r.applicable);
    CHECK(r.matched);
  }
}

TEST_CASE("checks without a residue symbol reject symbol_exponent") {
  const TwoSquares ts = two_squares(29);
  CHECK_THROWS_AS(symbol_exponent(params_for(CheckId::eq5_5), ts, quad_reps(29, 5)[0]), CheckError);
}

TEST_CASE("p dividing q gives no records") {
  CheckParams cp = params_for(CheckId::thm4_3);
  cp.q = 5;
  CHECK(run_check(cp, 5).empty());
}

TEST_CASE("default parameter expansion") {
  const auto ab = expand_params(CheckId::thm4_5, {});
  REQUIRE(ab.size() == 3);
  CHECK(*ab[2].a_param == 4);
  CHECK(*ab[2].b_param == 1);
  CHECK(expand_params(CheckId::thm5_2, {}).size() == 8);
  ParamGrid g;
  g.q = {3, 7};
  CHECK(expand_params(CheckId::thm3_1, g).size() == 2);
  CHECK(expand_params(CheckId::cor3_1, g).size() == 1);
}

TEST_CASE("suite output is identical for any worker count") {
  SuiteOptions one;
  one.p_max = 3000;
  SuiteOptions many = one;
  many.jobs = 3;
  const std::vector<CheckId> ids{CheckId::thm4_1, CheckId::cor3_1, CheckId::thm6_1, CheckId::lemma2_8};
  const SuiteResult a = run_suite(ids, one);
  const SuiteResult b = run_suite(ids, many);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].p == b.records[i].p);
    CHECK(a.records[i].check_id == b.records[i].check_id);
    CHECK(a.records[i].predicted == b.records[i].predicted);
    CHECK(a.records[i].actual == b.records[i].actual);
  }
  for (std::size_t i = 1; i < a.records.size(); ++i) CHECK(a.records[i - 1].p <= a.records[i].p);
}

TEST_CASE("summary accounting") {
  SuiteOptions opts;
  opts.p_max = 5000;
  const SuiteResult res = run_suite({CheckId::thm3_1, CheckId::thm4_3}, opts);
  const Summary& s = res.summary;
  CHECK(s.total == static_cast<std::int64_t>(res.records.size()));
  CHECK(s.total == s.applicable + s.skipped_structural + s.skipped_no_hypothesis);
  CHECK(s.applicable == s.matched + s.mismatched + s.variant_dependent);
  CHECK(s.mismatched == 0);
  CHECK(s.explore_applicable == 0);
}

TEST_CASE("explore mode waives hypotheses and marks the records") {
  SuiteOptions opts;
  opts.p_max = 3000;
  opts.explore = true;
  const SuiteResult res = run_suite({CheckId::thm4_3}, opts);
  CHECK(res.summary.explore_applicable > 0);
  CHECK(res.summary.explore_matched + res.summary.explore_mismatched == res.summary.explore_applicable);
  for (const auto& r : res.records) {
    if (r.explore_mode) {
      CHECK(r.applicable);
      CHECK_FALSE(r.hypothesis_ok);
      CHECK_FALSE(r.is_counterexample());
    }
  }
}

TEST_CASE("prime-scope checks emit one record per prime") {
  const auto recs = run_check(params_for(CheckId::eq5_5), 101);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].matched);
  CHECK_FALSE(recs[0].rep);
  CHECK(run_check(params_for(CheckId::lemma2_7), 7).size() == 1);
}

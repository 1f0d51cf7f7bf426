#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "qrecip/error.hpp"
#include "qrecip/represent.hpp"

using namespace qrecip;

TEST_CASE("two squares: golden values") {
  const TwoSquares t61 = two_squares(61);
  CHECK(t61.c == 5);
  CHECK(t61.d == -6);
  CHECK(t61.r == 1);
  CHECK(t61.d0 == -3);
  const TwoSquares t5 = two_squares(5);
  CHECK(t5.c == 1);
  CHECK(t5.d == 2);
  const TwoSquares t13 = two_squares(13);
  CHECK(t13.c == -3);
  CHECK(t13.d == 2);
  CHECK_THROWS_AS(two_squares(7), DomainError);
  CHECK_THROWS_AS(two_squares(65), DomainError);
}

TEST_CASE("two squares: normalization for every small prime") {
  for (std::int64_t p = 5; p < 5000; p += 4) {
    if (!oracle::is_prime_trial(p)) continue;
    const TwoSquares ts = two_squares(p);
    CHECK(ts.c * ts.c + ts.d * ts.d == p);
    CHECK(mod_floor(ts.c, 4) == 1);
    CHECK(ts.d == (std::int64_t{1} << ts.r) * ts.d0);
    CHECK(mod_floor(ts.d0, 4) == 1);
  }
}

TEST_CASE("quadratic form representations: golden values") {
  const auto r61 = quad_reps(61, 15);
  REQUIRE(r61.size() == 2);
  CHECK(r61[0].x == -1);
  CHECK(r61[1].x == 1);
  CHECK(r61[0].y == 2);
  CHECK(r61[0].t == 1);
  CHECK(r61[0].y0 == 1);
  CHECK(quad_reps(13, 17).empty());
  const auto r29 = quad_reps(29, 7);
  REQUIRE(r29.size() == 2);
  CHECK(r29[0].x == -1);
  CHECK(r29[1].x == 1);
  CHECK(r29[1].y == 2);
  CHECK_THROWS_AS(quad_reps(29, 1), DomainError);
  CHECK_THROWS_AS(quad_reps(29, 29), DomainError);
}

TEST_CASE("hypothesis flags and gcd identities") {
  const TwoSquares ts = two_squares(61);
  const QuadRep rep = quad_reps(61, 15)[0];
  const HypothesisStatus h = hypotheses(ts, rep);
  CHECK(h.gcd_c_xd_ok);  // gcd(5, -7) = 1
  CHECK(h.gcd_d0_xc_ok);  // gcd(-3, 4) = 1
  REQUIRE(h.m_val);
  CHECK(*h.m_val == 2);
  CHECK(check_gcd_identities(ts, rep));
}

TEST_CASE("integer square root") {
  for (std::int64_t n = 0; n < 100000; ++n) {
    const std::int64_t r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt((std::int64_t{1} << 62) - 1) == (std::int64_t{1} << 31) - 1);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
}

#include <doctest.h>

#include <random>

#include "qrecip/error.hpp"
#include "qrecip/gaussian.hpp"

using namespace qrecip;

namespace {

bool associates(GaussInt a, GaussInt b) {
  for (int k = 0; k < 4; ++k) {
    if (i_pow(k) * a == b) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(GaussInt{1, 2} * GaussInt{3, -1} == GaussInt{5, 5});
  CHECK(conj(GaussInt{3, 2}) == GaussInt{3, -2});
  CHECK(i_pow(-1) == GaussInt{0, -1});
  CHECK(i_pow(6) == GaussInt{-1, 0});
  CHECK(norm({3, 4}) == 25);
  CHECK_THROWS_AS((GaussInt{kMaxCoord, 0} + GaussInt{1, 0}), OverflowError);
  CHECK_THROWS_AS((GaussInt{kMaxCoord / 2, 0} * GaussInt{4, 0}), OverflowError);
}

TEST_CASE("division with remainder") {
  const DivRem dr = div_rem({7, 1}, {3, 2});
  CHECK(dr.quot == GaussInt{2, -1});
  CHECK(dr.rem == GaussInt{-1, 0});
  CHECK_THROWS_AS(div_rem({1, 1}, {0, 0}), DomainError);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
  for (int i = 0; i < 20000; ++i) {
    const GaussInt a{coord(rng), coord(rng)}, b{coord(rng) / 1000, coord(rng) / 1000};
    if (b == GaussInt{}) continue;
    const DivRem r = div_rem(a, b);
    CHECK(r.quot * b + r.rem == a);
    CHECK(2 * norm(r.rem) <= norm(b));
  }
}

TEST_CASE("exact division") {
  CHECK(divides({1, 1}, {2, 0}));
  CHECK_FALSE(divides({2, 1}, {3, 0}));
  CHECK(exact_quotient({5, 0}, {2, 1}) == GaussInt{2, -1});
  CHECK_THROWS_AS(exact_quotient({3, 0}, {2, 1}), DomainError);
}

TEST_CASE("valuation at 1 + i") {
  const auto v = val_one_plus_i({4, 0});
  CHECK(v.t == 4);
  CHECK(v.odd_part == GaussInt{-1, 0});
  const auto w = val_one_plus_i({3, 2});
  CHECK(w.t == 0);
  CHECK(w.odd_part == GaussInt{3, 2});
  CHECK_THROWS_AS(val_one_plus_i({0, 0}), DomainError);
}

TEST_CASE("odd normalization") {
  const UnitNormalized n = normalize_odd({2, 3});
  CHECK(n.u == 1);
  CHECK(n.w.value() == GaussInt{-3, 2});
  CHECK(normalize_odd({3, 2}).u == 0);
  CHECK_THROWS_AS(normalize_odd({1, 1}), DomainError);
  CHECK_THROWS_AS(OddGauss(2, 1), DomainError);
}

TEST_CASE("gcd") {
  CHECK(associates(gauss_gcd({5, 0}, {2, 1}), {2, 1}));
  CHECK(gauss_gcd({13, 0}, {5, 1}) == GaussInt{3, -2});
  CHECK(gauss_gcd({0, 0}, {0, 0}) == GaussInt{0, 0});
  CHECK(gauss_gcd({2, 0}, {0, 4}) == GaussInt{2, 0});

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coord(-300, 300);
  for (int i = 0; i < 3000; ++i) {
    const GaussInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, m{coord(rng) % 20, coord(rng) % 20};
    if (m == GaussInt{}) continue;
    const GaussInt g = gauss_gcd(a * m, b * m);
    CHECK(divides(m, g));
    if (!(a == GaussInt{} && b == GaussInt{})) {
      CHECK(divides(g, a * m));
      CHECK(divides(g, b * m));
    }
  }
}

TEST_CASE("factorization") {
  const GaussFactorization f5 = factor({5, 0});
  REQUIRE(f5.primes.size() == 2);
  CHECK(f5.primes[0].first == GaussInt{1, -2});
  CHECK(f5.primes[1].first == GaussInt{1, 2});
  CHECK(multiply_out(f5) == GaussInt{5, 0});

  const GaussFactorization f2 = factor({0, 2});
  REQUIRE(f2.primes.size() == 1);
  CHECK(f2.primes[0] == std::pair<GaussInt, int>{{1, 1}, 2});
  CHECK(multiply_out(f2) == GaussInt{0, 2});

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coord(-2000, 2000);
  for (int i = 0; i < 2000; ++i) {
    const GaussInt z{coord(rng), coord(rng)};
    if (z == GaussInt{}) continue;
    const GaussFactorization f = factor(z);
    CHECK(multiply_out(f) == z);
    CHECK(is_unit(f.unit));
  }
  CHECK_THROWS_AS(factor({0, 0}), DomainError);
  CHECK_THROWS_AS(factor({100000, 1}), DomainError);
}

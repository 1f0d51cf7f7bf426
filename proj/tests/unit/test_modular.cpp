#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "qrecip/error.hpp"
#include "qrecip/modular.hpp"
#include "qrecip/sieve.hpp"

using namespace qrecip;

TEST_CASE("floor division and residues follow the floor convention") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(std::int64_t{-7}, 4) == 1);
  CHECK(mod_floor(static_cast<i128>(-9), 8) == 7);
  CHECK(valuation2(40) == 3);
}

TEST_CASE("modular power and inverse") {
  CHECK(pow_mod(15, 7, 61) == 22);
  CHECK(inv_mod(5, 29) == 6);
  CHECK(inv_mod(-5, 29) == 23);
  CHECK_THROWS_AS(inv_mod(6, 9), NotCoprimeError);
  const std::int64_t big = (std::int64_t{1} << 61) - 1;
  CHECK(pow_mod(3, big - 1, big) == 1);
  CHECK(mul_mod(big - 1, big - 1, big) == 1);
}

TEST_CASE("Miller-Rabin agrees with trial division") {
  for (std::int64_t n = -5; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  CHECK(is_prime((std::int64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime(3215031751));
  CHECK_FALSE(is_prime(std::int64_t{4759123141}));
}

TEST_CASE("segmented sieve lists exactly the primes") {
  const auto ps = primes_in_range(999000, 1001000);
  std::size_t idx = 0;
  for (std::int64_t n = 999000; n <= 1001000; ++n) {
    if (oracle::is_prime_trial(n)) {
      REQUIRE(idx < ps.size());
      CHECK(ps[idx++] == n);
    }
  }
  CHECK(idx == ps.size());
  CHECK(primes_in_range(0, 10) == std::vector<std::int64_t>{2, 3, 5, 7});
  CHECK(primes_in_range(20, 10).empty());
}

TEST_CASE("Lucas sequences: golden values") {
  const LucasPair a = lucas_uv_mod({1, -1}, 5, 1009);
  CHECK(a.u == 5);
  CHECK(a.v == 11);
  CHECK(lucas_uv_mod({4, -1}, 7, 13).u == 0);
  const LucasPair z = lucas_uv_mod({3, 5}, 0, 7);
  CHECK(z.u == 0);
  CHECK(z.v == 2);
}

TEST_CASE("Lucas doubling matches the recurrence") {
  for (std::int64_t b : {1, 3, 4, 8, -5}) {
    for (std::int64_t c : {-1, -4, -16, 7}) {
      for (std::int64_t p : {3, 13, 61, 1009}) {
        const auto ref = oracle::lucas_naive({b, c}, 300, p);
        for (std::int64_t n = 0; n <= 300; ++n) {
          const LucasPair uv = lucas_uv_mod({b, c}, n, p);
          CHECK(uv.u == ref[static_cast<std::size_t>(n)].u);
          CHECK(uv.v == ref[static_cast<std::size_t>(n)].v);
        }
      }
    }
  }
}

TEST_CASE("unit powers expand into U and V") {
  // With r^2 = b^2 - 4c, ((b + r) / 2)^n = (V_n + U_n r) / 2.
  const std::int64_t p = 1009;
  for (std::int64_t r = 1; r < 40; ++r) {
    for (std::int64_t b : {1, 3, 8}) {
      const std::int64_t c = mul_mod(sub_mod(mul_mod(b, b, p), mul_mod(r, r, p), p), inv_mod(4, p), p);
      const LucasPair uv = lucas_uv_mod({b, c}, 77, p);
      const std::int64_t expect = mul_mod(add_mod(uv.v, mul_mod(uv.u, r, p), p), inv_mod(2, p), p);
      CHECK(unit_power(b, r, 77, p) == expect);
    }
  }
}

TEST_CASE("divisibility identity holds and rejects bad moduli") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t p = std::vector<std::int64_t>{5, 7, 11, 13, 61, 1009}[rng() % 6];
    const std::int64_t b = static_cast<std::int64_t>(rng() % 50) - 25;
    const std::int64_t c = static_cast<std::int64_t>(rng() % 50) - 25;
    const std::int64_t d = b * b - 4 * c;
    if (mod_floor(b * c * d, p) == 0) continue;
    CHECK(check_lucas_divisibility({b, c}, static_cast<std::int64_t>(rng() % 500), p));
  }
  CHECK_THROWS_AS(check_lucas_divisibility({1, -1}, 3, 3), DomainError);
  CHECK_THROWS_AS(check_lucas_divisibility({5, -1}, 3, 29), DomainError);
  CHECK_THROWS_AS(lucas_uv_mod({1, 1}, 3, 8), DomainError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

#include "exactseq/errors.hpp"
#include "exactseq/numutil.hpp"

using namespace exactseq;

TEST_CASE("isqrt examples") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(Int("1000000000000000000")) == Int("1000000000"));
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt brackets the root on random 512-bit integers") {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 64; ++trial) {
    Int n = 0;
    for (int w = 0; w < 8; ++w) {
      n <<= 64;
      n += static_cast<unsigned long>(rng());
    }
    Int m = isqrt(n);
    CHECK(m * m <= n);
    CHECK((m + 1) * (m + 1) > n);
    Int ref;
    mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
    CHECK(m == ref);
  }
}

TEST_CASE("divisor_sums examples") {
  auto one = divisor_sums(1);
  CHECK(one.tau == 1);
  CHECK(one.sigma == 1);
  CHECK(one.tau_pm == 1);

  auto six = divisor_sums(6);
  CHECK(six.tau == 4);
  CHECK(six.sigma == 12);
  CHECK(six.tau_pm == 0);

  auto twelve = divisor_sums(12, {{1, 8}, {3, 8}, {5, 8}, {7, 8}});
  CHECK(twelve.tau_mod.at({1, 8}) == 1);
  CHECK(twelve.tau_mod.at({3, 8}) == 1);
  CHECK(twelve.tau_mod.at({5, 8}) == 0);
  CHECK(twelve.tau_mod.at({7, 8}) == 0);

  CHECK_THROWS_AS(divisor_sums(0), std::domain_error);
}

TEST_CASE("divisor_sums agrees with multiplicative formulas from factorize") {
  for (long n = 1; n <= 100000; ++n) {
    auto ds = divisor_sums(n);
    Int tau = 1, sigma = 1, tau_odd = 1;
    for (const auto& [p, e] : factorize(n)) {
      tau *= e + 1;
      sigma *= (pow_int(p, e + 1) - 1) / (p - 1);
      if (p != 2) tau_odd *= e + 1;
    }
    REQUIRE(ds.tau == tau);
    REQUIRE(ds.sigma == sigma);
    REQUIRE(ds.tau_pm == 2 * tau_odd - tau);
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1).empty());

  auto f697 = factorize(697);
  REQUIRE(f697.size() == 2);
  CHECK(f697[0].first == 17);
  CHECK(f697[0].second == 1);
  CHECK(f697[1].first == 41);
  CHECK(f697[1].second == 1);

  auto f709 = factorize(709);
  REQUIRE(f709.size() == 1);
  CHECK(f709[0].first == 709);
  CHECK(f709[0].second == 1);

  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize splits a product of two large primes") {
  Int p("2147483647"), q("2147483629");
  auto f = factorize(p * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == q);
  CHECK(f[1].first == p);
  CHECK(f[0].second == 1);
  CHECK(f[1].second == 1);
}

TEST_CASE("factorize recomposes and certifies prime parts") {
  auto trial_prime = [](long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 400; ++trial) {
    long n = static_cast<long>(rng() % 2000000) + 1;
    Int prod = 1;
    Int prev = 0;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(p > prev);
      prev = p;
      CHECK(trial_prime(to_long(p)));
      prod *= pow_int(p, e);
    }
    CHECK(prod == n);
  }
}

TEST_CASE("is_prime matches trial division and known edge primes") {
  auto trial_prime = [](long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  for (long n = 1; n <= 3000; ++n) CHECK(is_prime(n) == trial_prime(n));
  CHECK(is_prime(Int("18446744073709551557")));       // largest prime below 2^64
  CHECK_FALSE(is_prime(Int("18446744073709551617")));  // 274177 * 67280421310721
}

TEST_CASE("legendre_nu examples and direct recount") {
  CHECK(legendre_nu(2, 4) == 3);
  CHECK(legendre_nu(5, 4) == 0);
  CHECK(legendre_nu(2, 10) == 8);
  CHECK_THROWS_AS(legendre_nu(4, 5), std::domain_error);

  for (long p : {2L, 3L, 5L, 7L}) {
    for (long n = 1; n <= 60; ++n) {
      long direct = 0;
      for (long i = 2; i <= n; ++i) {
        long v = i;
        while (v % p == 0) {
          v /= p;
          ++direct;
        }
      }
      CHECK(legendre_nu(p, n) == direct);
    }
  }
}

namespace {

// independent reachability check over a fixed window
long brute_frobenius(const std::vector<long>& B, long window) {
  std::vector<char> reach(static_cast<std::size_t>(window) + 1, 0);
  reach[0] = 1;
  for (long x = 1; x <= window; ++x) {
    for (long b : B) {
      if (x >= b && reach[static_cast<std::size_t>(x - b)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  long last = 0;
  for (long x = window; x >= 1; --x) {
    if (!reach[static_cast<std::size_t>(x)]) {
      last = x;
      break;
    }
  }
  return last;
}

}  // namespace

TEST_CASE("frobenius_threshold examples") {
  CHECK(frobenius_threshold({1}) == 0);
  CHECK(frobenius_threshold({2, 3}) == 1);
  CHECK(frobenius_threshold({3, 5}) == 7);
  CHECK_THROWS_AS(frobenius_threshold({2, 4}), std::domain_error);
  CHECK_THROWS_AS(frobenius_threshold({}), std::domain_error);
  CHECK_THROWS_AS(frobenius_threshold({0, 3}), std::domain_error);
}

TEST_CASE("frobenius_threshold matches brute reachability and window invariant") {
  std::vector<std::vector<long>> sets = {
      {2, 3}, {3, 5}, {3, 7}, {4, 7}, {5, 7, 9}, {6, 10, 15}, {4, 6, 9}, {5, 8}, {7, 11}, {2, 5, 9}};
  for (const auto& B : sets) {
    long n0 = frobenius_threshold(B);
    long maxb = *std::max_element(B.begin(), B.end());
    long window = n0 + maxb * static_cast<long>(B.size()) + maxb * 3 + 10;
    CHECK(n0 == brute_frobenius(B, window));
    // every value in (n0, n0 + max(B)*|B|] must be representable
    std::vector<char> reach(static_cast<std::size_t>(window) + 1, 0);
    reach[0] = 1;
    for (long x = 1; x <= window; ++x) {
      for (long b : B) {
        if (x >= b && reach[static_cast<std::size_t>(x - b)]) {
          reach[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    for (long x = n0 + 1; x <= n0 + maxb * static_cast<long>(B.size()); ++x) {
      CHECK(reach[static_cast<std::size_t>(x)]);
    }
    if (n0 > 0) CHECK_FALSE(reach[static_cast<std::size_t>(n0)]);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "exactseq/errors.hpp"
#include "exactseq/oracle.hpp"

using namespace exactseq;

namespace {

// partitions of n by counting with parts up to n, independent of the oracle
std::vector<long> partition_numbers(long up_to) {
  std::vector<long> dp(up_to + 1, 0);
  dp[0] = 1;
  for (long part = 1; part <= up_to; ++part)
    for (long s = part; s <= up_to; ++s) dp[s] += dp[s - part];
  return dp;
}

bool has_distinct_parts(const Partition& p) {
  std::set<long> seen(p.parts.begin(), p.parts.end());
  return static_cast<long>(seen.size()) == p.length();
}

}  // namespace

TEST_CASE("enumerate_partitions examples") {
  auto empty = enumerate_partitions(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].parts.empty());

  auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0].parts == std::vector<long>{4});
  CHECK(four[1].parts == std::vector<long>{3, 1});
  CHECK(four[2].parts == std::vector<long>{2, 2});
  CHECK(four[3].parts == std::vector<long>{2, 1, 1});
  CHECK(four[4].parts == std::vector<long>{1, 1, 1, 1});

  auto distinct5 = enumerate_partitions(5, has_distinct_parts);
  REQUIRE(distinct5.size() == 3);
  CHECK(distinct5[0].parts == std::vector<long>{5});
  CHECK(distinct5[1].parts == std::vector<long>{4, 1});
  CHECK(distinct5[2].parts == std::vector<long>{3, 2});

  CHECK_THROWS_AS(enumerate_partitions(61), budget_error);
  CHECK_THROWS_AS(enumerate_partitions(-1), std::domain_error);
}

TEST_CASE("a raised limit admits larger n without materializing") {
  auto table = partition_numbers(61);
  CHECK(oracle_count(61, {}, {}, 70) == table[61]);
}

TEST_CASE("enumeration is ordered and counts match the recurrence table") {
  auto table = partition_numbers(40);
  for (long n = 0; n <= 40; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(static_cast<long>(all.size()) == table[n]);
    for (size_t i = 0; i < all.size(); ++i) {
      const auto& p = all[i];
      CHECK(p.size() == n);
      CHECK(p.length() == static_cast<long>(p.parts.size()));
      CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
      for (long part : p.parts) CHECK(part >= 1);
      long mult_total = 0;
      for (auto& [part, mult] : p.multiplicities()) {
        CHECK(mult >= 1);
        mult_total += part * mult;
      }
      CHECK(mult_total == n);
      if (i + 1 < all.size()) CHECK(all[i].parts > all[i + 1].parts);
    }
  }
}

TEST_CASE("oracle_count examples") {
  CHECK(oracle_count(6, {}, [](const Partition& p) { return Int(p.length()); }) == 35);

  auto distinct_mults = [](const Partition& p) {
    std::set<long> seen;
    for (auto& [part, mult] : p.multiplicities())
      if (!seen.insert(mult).second) return false;
    return true;
  };
  CHECK(oracle_count(3, distinct_mults) == 2);

  CHECK(oracle_count(5, has_distinct_parts, [](const Partition& p) {
          return Int(p.length() % 2 == 0 ? 1 : -1);
        }) == 1);

  CHECK(oracle_count(0) == 1);
  CHECK_THROWS_AS(oracle_count(100), budget_error);
}

TEST_CASE("oracle_lrs examples") {
  LrsSpec fib{{1, 1}, {1, 1}};
  CHECK(oracle_lrs(fib, 12) == 144);
  CHECK(oracle_lrs(fib, 1) == 1);

  LrsSpec zero{{}, {}};
  CHECK(oracle_lrs(zero, 5) == 0);

  LrsSpec doubling{{2}, {1}};
  CHECK(oracle_lrs(doubling, 10) == 512);

  LrsSpec bad{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(oracle_lrs(bad, 3), std::domain_error);
  CHECK_THROWS_AS(oracle_lrs(fib, 0), std::domain_error);
}

TEST_CASE("oracle_lrs agrees with lrs_prefix on random specs") {
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_int_distribution<long> order_dist(0, 5);
  std::uniform_int_distribution<long> coef_dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    long k = order_dist(rng);
    LrsSpec spec;
    for (long i = 0; i < k; ++i) {
      long a = coef_dist(rng);
      if (i == 0 && a == 0) a = 1;
      spec.coeffs.push_back(a);
    }
    for (long i = 0; i < k; ++i) spec.initial.push_back(coef_dist(rng));
    auto prefix = lrs_prefix(spec, 30);
    for (long n = 1; n <= 30; ++n) CHECK(oracle_lrs(spec, n) == prefix[n - 1]);
  }
}

TEST_CASE("oracle_diophantine examples") {
  CHECK(oracle_diophantine(8, DiophantineForm::XPlus2Y2) == 3);
  CHECK(oracle_diophantine(0, DiophantineForm::XPlus2Y2) == 1);

  CHECK(oracle_diophantine(3, DiophantineForm::X2Plus2Y2) == 1);
  CHECK(oracle_diophantine(5, DiophantineForm::X2Plus2Y2) == 0);

  CHECK(oracle_diophantine(128, DiophantineForm::DistinctSquares) == 0);
  CHECK(oracle_diophantine(25, DiophantineForm::DistinctSquares) == 2);
  CHECK(oracle_diophantine(0, DiophantineForm::DistinctSquares) == 1);

  CHECK(oracle_diophantine(9, DiophantineForm::Squares) == 4);

  CHECK_THROWS_AS(oracle_diophantine(20000, DiophantineForm::XPlus2Y2), budget_error);
  CHECK_THROWS_AS(oracle_diophantine(-3, DiophantineForm::Squares), std::domain_error);
}

TEST_CASE("diophantine forms cross-check the partition oracle") {
  for (long n = 0; n <= 60; ++n) {
    auto square_parts = [](const Partition& p) {
      for (long part : p.parts) {
        long r = 0;
        while (r * r < part) ++r;
        if (r * r != part) return false;
      }
      return true;
    };
    Int squares = oracle_count(n, square_parts);
    CHECK(oracle_diophantine(n, DiophantineForm::Squares) == squares);
    Int distinct_sq = oracle_count(n, [&](const Partition& p) {
      return square_parts(p) && has_distinct_parts(p);
    });
    CHECK(oracle_diophantine(n, DiophantineForm::DistinctSquares) == distinct_sq);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exactseq/catalan.hpp"
#include "exactseq/errors.hpp"
#include "exactseq/int.hpp"

using namespace exactseq;

TEST_CASE("catalan examples") {
  std::vector<long> want{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (size_t i = 0; i < want.size(); ++i) CHECK(catalan(i + 1) == want[i]);
  CHECK_THROWS_AS(catalan(0), std::domain_error);
}

TEST_CASE("parity-aware examples") {
  CHECK(catalan_parity_aware(8) == 1);
  CHECK(catalan_parity_aware(6) == 42);
  CHECK(catalan_parity_aware(7) == 132);
  CHECK(catalan_parity_aware(Int(1) << 40) == 1);
  CHECK(catalan_parity_aware(Int(1) << 300) == 1);
}

TEST_CASE("holonomic equals convolution") {
  CatalanCache cache;
  cache.extend(64);
  for (long n = 1; n <= 64; ++n) CHECK(catalan(n) == cache.at(n));
}

TEST_CASE("parity is odd exactly at powers of two") {
  // convolution bits over GF(2)
  const long limit = 4096;
  std::vector<char> bit(limit + 1);
  bit[1] = 1;
  for (long n = 2; n <= limit; ++n) {
    int acc = 0;
    for (long k = 1; k < n; ++k) acc ^= bit[k] & bit[n - k];
    bit[n] = static_cast<char>(acc);
  }
  for (long n = 1; n <= limit; ++n) {
    bool power_of_two = (n & (n - 1)) == 0;
    CHECK(static_cast<bool>(bit[n]) == power_of_two);
    if (power_of_two) CHECK(catalan_parity_aware(n) == 1);
  }
}

TEST_CASE("growth bounds") {
  CatalanCache cache;
  cache.extend(200);
  for (long n = 3; n <= 200; ++n) CHECK(cache.at(n) >= 2 * cache.at(n - 1));
  for (long n = 1; n <= 200; ++n) CHECK(cache.at(n) <= pow_int(Int(n), n));
}

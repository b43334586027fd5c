#include <numeric>
#include <random>
#include <utility>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "exactseq/catalan.hpp"
#include "exactseq/errors.hpp"
#include "exactseq/lrs.hpp"
#include "exactseq/oracle.hpp"
#include "exactseq/poly.hpp"

using namespace exactseq;

namespace {

PolyQ make_poly(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return PolyQ(std::move(c));
}

const LrsSpec kFib{{1, 1}, {1, 1}};
const LrsSpec kSquares{{1, -3, 3}, {1, 4, 9}};          // f(n) = n^2
const LrsSpec kPlusMinusTwo{{4, 0}, {0, 8}};            // f(n) = 2^n + (-2)^n
const LrsSpec kLinear{{-1, 2}, {1, 2}};                 // f(n) = n
const LrsSpec kAlternating{{-1}, {-1}};                 // f(n) = (-1)^n

LrsSpec random_spec(std::mt19937_64& rng, long max_order) {
  std::uniform_int_distribution<long> order_dist(1, max_order);
  std::uniform_int_distribution<long> coeff_dist(-9, 9);
  long k = order_dist(rng);
  LrsSpec spec;
  spec.coeffs.resize(k);
  spec.initial.resize(k);
  do {
    spec.coeffs[0] = coeff_dist(rng);
  } while (spec.coeffs[0] == 0);
  for (long i = 1; i < k; ++i) spec.coeffs[i] = coeff_dist(rng);
  for (long i = 0; i < k; ++i) spec.initial[i] = coeff_dist(rng);
  return spec;
}

// spec whose recurrence polynomial is a given monic product of (x-1)-powers
// and cyclotomics, so every section of the sequence is polynomial
LrsSpec spec_from_characteristic(const PolyQ& p, std::mt19937_64& rng) {
  long k = p.degree();
  std::uniform_int_distribution<long> init_dist(-9, 9);
  LrsSpec spec;
  spec.coeffs.resize(k);
  spec.initial.resize(k);
  for (long i = 0; i < k; ++i) {
    Rat c = -p.coeff(i);
    REQUIRE(c.get_den() == 1);
    spec.coeffs[i] = c.get_num();
  }
  for (long i = 0; i < k; ++i) spec.initial[i] = init_dist(rng);
  return spec;
}

}  // namespace

TEST_CASE("minimal polynomial of familiar sequences") {
  CHECK(minimal_polynomial(kFib) == make_poly({-1, -1, 1}));
  CHECK(minimal_polynomial(kLinear) == make_poly({1, -2, 1}));
  CHECK(minimal_polynomial(kSquares) == make_poly({-1, 3, -3, 1}));
  CHECK(minimal_polynomial(kPlusMinusTwo) == make_poly({-4, 0, 1}));
  CHECK(minimal_polynomial(kAlternating) == make_poly({1, 1}));
  CHECK(minimal_polynomial(LrsSpec{}) == PolyQ(1));
  CHECK(minimal_polynomial(LrsSpec{{1, 1}, {0, 0}}) == PolyQ(1));
}

TEST_CASE("minimal polynomial drops directions the initial values never excite") {
  // recurrence polynomial (x-1)(x-2), but the data is the constant sequence
  LrsSpec spec{{-2, 3}, {5, 5}};
  CHECK(recurrence_polynomial(spec) == make_poly({2, -3, 1}));
  CHECK(minimal_polynomial(spec) == make_poly({-1, 1}));
}

TEST_CASE("minimal polynomial divides the recurrence and annihilates the sequence") {
  std::mt19937_64 rng(0x5eed1101);
  for (int trial = 0; trial < 50; ++trial) {
    LrsSpec spec = random_spec(rng, 5);
    long k = spec.order();
    PolyQ p = minimal_polynomial(spec);
    CHECK(poly_divrem(recurrence_polynomial(spec), p).second.is_zero());
    auto f = lrs_prefix(spec, 4 * k);
    long d = p.degree();
    for (long n = 0; n + d < 4 * k; ++n) {
      Rat acc = 0;
      for (long i = 0; i <= d; ++i) acc += p.coeff(i) * Rat(f[n + i]);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("root ratio torsion moduli") {
  CHECK(ratio_unity_modulus(make_poly({-1, -1, 1})) == 1);  // x^2-x-1
  CHECK(ratio_unity_modulus(make_poly({-4, 0, 1})) == 2);   // x^2-4
  CHECK(ratio_unity_modulus(make_poly({-2, 1})) == 1);      // x-2
  CHECK(ratio_unity_modulus(make_poly({1, 0, 1})) == 4);    // x^2+1
  CHECK(ratio_unity_modulus(make_poly({1, 1, 1})) == 3);    // x^2+x+1
  CHECK(ratio_unity_modulus(make_poly({1, 1})) == 2);       // x+1
  CHECK(ratio_unity_modulus(make_poly({2, -3, 1})) == 1);   // (x-1)(x-2)
  CHECK(ratio_unity_modulus(make_poly({1, -2, 1})) == 1);   // (x-1)^2
  CHECK(ratio_unity_modulus(PolyQ(1)) == 1);
  CHECK(ratio_unity_modulus(make_poly({6, -5, 1})) == 1);   // (x-2)(x-3)
  CHECK(ratio_unity_modulus(make_poly({-30, 31, -10, 1})) == 1);  // (x-2)(x-3)(x-5)
  CHECK_THROWS_AS(ratio_unity_modulus(PolyQ::x()), std::domain_error);
  CHECK_THROWS_AS(ratio_unity_modulus(make_poly({0, 2, 1})), std::domain_error);
}

TEST_CASE("sections of a polynomial sequence") {
  auto cls = classify(kSquares);
  CHECK(cls.modulus == 1);
  CHECK(cls.min_poly == make_poly({-1, 3, -3, 1}));
  CHECK(cls.charpoly == cls.min_poly);
  REQUIRE(cls.sections.size() == 1);
  CHECK(cls.sections[0].kind == SectionKind::Polynomial);
  CHECK(cls.sections[0].poly == make_poly({0, 0, 1}));
  CHECK(cls.all_polynomial());

  CHECK(lrs_eval(kSquares, cls, 12) == 144);
  CHECK(lrs_eval(kSquares, cls, 1000000) == Int("1000000000000"));
  CHECK(lrs_eval(kSquares, cls, Int("10000000000")) == Int("100000000000000000000"));
}

TEST_CASE("sections of mixed polynomial and exponential type") {
  auto cls = classify(kPlusMinusTwo);
  CHECK(cls.modulus == 2);
  REQUIRE(cls.sections.size() == 2);
  CHECK(cls.sections[0].kind == SectionKind::Polynomial);
  CHECK(cls.sections[0].annihilator == PolyQ(1));
  CHECK(cls.sections[0].poly.is_zero());
  CHECK(cls.sections[1].kind == SectionKind::Exponential);
  CHECK(cls.sections[1].annihilator == make_poly({-4, 1}));
  CHECK_FALSE(cls.all_polynomial());
  CHECK(cls.charpoly == make_poly({16, -8, 1}));  // (x-4)^2

  CHECK(lrs_eval(kPlusMinusTwo, cls, Int(1000000001)) == 0);
  CHECK(lrs_eval(kPlusMinusTwo, cls, 10) == 2048);
  CHECK(lrs_eval(kPlusMinusTwo, cls, 2) == 8);
}

TEST_CASE("sections of a purely exponential sequence") {
  auto cls = classify(kFib);
  CHECK(cls.modulus == 1);
  REQUIRE(cls.sections.size() == 1);
  CHECK(cls.sections[0].kind == SectionKind::Exponential);
  CHECK_FALSE(cls.all_polynomial());
  CHECK(lrs_eval(kFib, cls, 12) == 144);
  CHECK(lrs_eval(kFib, cls, 1) == 1);
  CHECK_THROWS_AS(lrs_eval(kFib, cls, Int(2000001)), budget_error);
  CHECK_THROWS_AS(lrs_eval(kFib, cls, 0), std::domain_error);
}

TEST_CASE("sections of an alternating sign sequence") {
  auto cls = classify(kAlternating);
  CHECK(cls.modulus == 2);
  CHECK(cls.all_polynomial());
  CHECK(cls.sections[0].poly == PolyQ(-1));
  CHECK(cls.sections[1].poly == PolyQ(1));
  CHECK(lrs_eval(kAlternating, cls, Int(1000000000)) == 1);
  CHECK(lrs_eval(kAlternating, cls, Int(999999999)) == -1);
}

TEST_CASE("degenerate sequences classify as zero") {
  for (const LrsSpec& spec : {LrsSpec{}, LrsSpec{{1, 1}, {0, 0}}}) {
    auto cls = classify(spec);
    CHECK(cls.modulus == 1);
    CHECK(cls.all_polynomial());
    CHECK(lrs_eval(spec, cls, 7) == 0);
    CHECK(lrs_eval(spec, cls, Int("123456789123456789")) == 0);
  }
}

TEST_CASE("root of unity characteristic polynomials give polynomial sections") {
  // candidate cyclotomic indices with totient at most 6
  const std::vector<long> candidates{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
  std::mt19937_64 rng(0x5eed1102);
  std::uniform_int_distribution<long> e_dist(0, 4);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_int_distribution<long> n_dist(1, 10000);
  for (int trial = 0; trial < 15; ++trial) {
    long e = e_dist(rng);
    PolyQ p = poly_pow(make_poly({-1, 1}), e);
    long degree_budget = 6 - e;
    long lcm_d = 1;
    for (int tries = 0; tries < 4; ++tries) {
      long d = candidates[pick(rng)];
      const PolyQ& cyc = cyclotomic(d);
      if (cyc.degree() > degree_budget) continue;
      p = p * cyc;
      degree_budget -= cyc.degree();
      lcm_d = std::lcm(lcm_d, d);
    }
    if (p.degree() == 0) p = p * cyclotomic(1);
    LrsSpec spec = spec_from_characteristic(p, rng);
    auto cls = classify(spec);
    CHECK(cls.all_polynomial());
    CHECK(lcm_d % cls.modulus == 0);
    for (int probe = 0; probe < 5; ++probe) {
      long n = n_dist(rng);
      CHECK(lrs_eval(spec, cls, n) == oracle_lrs(spec, n));
    }
  }
}

TEST_CASE("classified evaluation matches the oracle on random recurrences") {
  std::mt19937_64 rng(0x5eed1103);
  for (int trial = 0; trial < 200; ++trial) {
    LrsSpec spec = random_spec(rng, 5);
    auto cls = classify(spec);
    auto f = lrs_prefix(spec, 60);
    for (long n = 1; n <= 60; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(lrs_eval(spec, cls, n) == f[n - 1]);
    }
  }
}

TEST_CASE("evaluation agrees with forward iteration at scattered indices") {
  std::mt19937_64 rng(0x5eed1104);
  std::uniform_int_distribution<long> n_dist(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    LrsSpec spec = random_spec(rng, 5);
    long n = n_dist(rng);
    CHECK(lrs_eval(spec, n) == oracle_lrs(spec, n));
  }
}

TEST_CASE("variable coefficient recurrences evaluate exactly") {
  HolonomicSpec catalan_spec{{{make_poly({-2, 4}), make_poly({1, 1})}}, {Rat(1)}, 1};
  CHECK(holonomic_eval(catalan_spec, 10) == Rat(4862));
  for (long n = 1; n <= 30; ++n)
    CHECK(holonomic_eval(catalan_spec, n) == Rat(catalan(n)));

  HolonomicSpec factorial{{{make_poly({1, 1}), PolyQ(1)}}, {Rat(1)}, 1};
  CHECK(holonomic_eval(factorial, 5) == Rat(120));
  CHECK(holonomic_eval(factorial, 1) == Rat(1));

  HolonomicSpec constant{{{PolyQ(1), PolyQ(1)}}, {Rat(7)}, 1};
  CHECK(holonomic_eval(constant, 100) == Rat(7));

  HolonomicSpec halving{{{PolyQ(Rat(1, 2)), PolyQ(1)}}, {Rat(7)}, 1};
  CHECK(holonomic_eval(halving, 3) == Rat(7, 4));

  // f(n) = (n-2) f(n-1) + f(n-2); the coefficient argument is the index of
  // the oldest window entry
  HolonomicSpec two_term{
      {{PolyQ(1), PolyQ(1)}, {make_poly({0, 1}), PolyQ(1)}}, {Rat(1), Rat(1)}, 1};
  CHECK(holonomic_eval(two_term, 1) == Rat(1));
  CHECK(holonomic_eval(two_term, 2) == Rat(1));
  CHECK(holonomic_eval(two_term, 3) == Rat(2));
  CHECK(holonomic_eval(two_term, 4) == Rat(5));
}

TEST_CASE("variable coefficient recurrences reject bad indices") {
  HolonomicSpec pole{{{PolyQ(1), make_poly({-3, 1})}}, {Rat(1)}, 1};
  CHECK_THROWS_AS(holonomic_eval(pole, 5), std::domain_error);
  CHECK(holonomic_eval(pole, 3) == Rat(1, 2));  // the pole at index 4 is never reached

  HolonomicSpec constant{{{PolyQ(1), PolyQ(1)}}, {Rat(7)}, 1};
  CHECK_THROWS_AS(holonomic_eval(constant, 0), std::domain_error);
  CHECK_THROWS_AS(holonomic_eval(constant, 2000001 + 1), budget_error);
}

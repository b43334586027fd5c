#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "exactseq/poly.hpp"

using namespace exactseq;

namespace {

PolyQ random_poly(std::mt19937_64& rng, long max_deg) {
  long deg = static_cast<long>(rng() % static_cast<unsigned long>(max_deg + 1));
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = Rat(static_cast<long>(rng() % 19) - 9);
  return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation") {
  PolyQ f({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  PolyQ g({Rat(-1), Rat(1)});          // x - 1
  CHECK(f.degree() == 2);
  CHECK((f + g).eval(2) == 4);
  CHECK((f * g).degree() == 3);
  CHECK(f.eval(Rat(3)) == 8);
  CHECK((f - f).is_zero());
  CHECK(poly_to_string(f) == "x^2 - 1");
  CHECK(poly_to_string(PolyQ()) == "0");
}

TEST_CASE("divrem roundtrip on random polynomials") {
  std::mt19937_64 rng(0x5eed0010);
  for (int trial = 0; trial < 200; ++trial) {
    PolyQ f = random_poly(rng, 8);
    PolyQ g = random_poly(rng, 5);
    if (g.is_zero()) {
      CHECK_THROWS_AS(poly_divrem(f, g), std::domain_error);
      continue;
    }
    auto [q, r] = poly_divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("gcd examples and properties") {
  PolyQ f({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  PolyQ g({Rat(-1), Rat(1)});          // x - 1
  CHECK(poly_gcd(f, g) == g);

  std::mt19937_64 rng(0x5eed0011);
  for (int trial = 0; trial < 100; ++trial) {
    PolyQ a = random_poly(rng, 4);
    PolyQ b = random_poly(rng, 4);
    PolyQ c = random_poly(rng, 3);
    PolyQ d = poly_gcd(a * c, b * c);
    if (c.is_zero()) continue;
    // gcd(ac, bc) must be divisible by c
    auto [q, r] = poly_divrem(d, c);
    if (a.is_zero() && b.is_zero()) continue;
    CHECK(r.is_zero());
  }
}

TEST_CASE("resultant pinned example and root-product law") {
  PolyQ xm2({Rat(-2), Rat(1)});
  PolyQ xm3({Rat(-3), Rat(1)});
  CHECK(poly_resultant(xm2, xm3) == Rat(-1));

  // Res((x-a)(x-b), g) = g(a) g(b) for monic first argument
  std::mt19937_64 rng(0x5eed0012);
  for (int trial = 0; trial < 100; ++trial) {
    Rat a(static_cast<long>(rng() % 11) - 5);
    Rat b(static_cast<long>(rng() % 11) - 5);
    PolyQ f = PolyQ({-a, Rat(1)}) * PolyQ({-b, Rat(1)});
    PolyQ g = random_poly(rng, 4);
    if (g.is_zero()) continue;
    CHECK(poly_resultant(f, g) == g.eval(a) * g.eval(b));
  }

  // swap antisymmetry: Res(f,g) = (-1)^(deg f * deg g) Res(g,f)
  for (int trial = 0; trial < 100; ++trial) {
    PolyQ f = random_poly(rng, 5);
    PolyQ g = random_poly(rng, 5);
    if (f.is_zero() || g.is_zero()) continue;
    Rat lhs = poly_resultant(f, g);
    Rat rhs = poly_resultant(g, f);
    if ((f.degree() % 2) && (g.degree() % 2)) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1) == PolyQ({Rat(-1), Rat(1)}));
  CHECK(cyclotomic(2) == PolyQ({Rat(1), Rat(1)}));
  CHECK(cyclotomic(4) == PolyQ({Rat(1), Rat(0), Rat(1)}));
  CHECK(cyclotomic(6) == PolyQ({Rat(1), Rat(-1), Rat(1)}));
  CHECK(cyclotomic(105).degree() == 48);
  CHECK_THROWS_AS(cyclotomic(0), std::domain_error);
}

TEST_CASE("cyclotomic(d) divides x^d - 1 for d <= 200") {
  for (long d = 1; d <= 200; ++d) {
    PolyQ xd = PolyQ::monomial(1, static_cast<std::size_t>(d)) - PolyQ(1);
    auto [q, r] = poly_divrem(xd, cyclotomic(d));
    CHECK(r.is_zero());
    // degree of the quotient accounts for all proper divisors
    long total = 0;
    for (long e = 1; e <= d; ++e) {
      if (d % e == 0) total += cyclotomic(e).degree();
    }
    CHECK(total == d);
  }
}

TEST_CASE("lagrange interpolation roundtrip") {
  std::mt19937_64 rng(0x5eed0013);
  for (int trial = 0; trial < 100; ++trial) {
    PolyQ f = random_poly(rng, 6);
    std::vector<std::pair<Rat, Rat>> pts;
    for (long x = 0; x <= 6; ++x) pts.push_back({Rat(x), f.eval(Rat(x))});
    CHECK(lagrange_interpolate(pts) == f);
  }
  CHECK_THROWS_AS(lagrange_interpolate({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}}),
                  std::domain_error);
}

TEST_CASE("poly_pow and derivative") {
  PolyQ xp1({Rat(1), Rat(1)});
  PolyQ p = poly_pow(xp1, 5);
  CHECK(p.degree() == 5);
  CHECK(p.coeff(2) == 10);
  CHECK(poly_derivative(p) == poly_pow(xp1, 4).scaled(5));
  CHECK(poly_pow(xp1, 0) == PolyQ(1));
}

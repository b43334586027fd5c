#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// univariate rational polynomial, coefficients lowest degree first,
// no trailing zero coefficients
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  PolyQ(int c) : PolyQ(Rat(c)) {}
  PolyQ(const Rat& c);

  static PolyQ monomial(const Rat& c, std::size_t deg);
  static PolyQ x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Rat eval(const Rat& at) const;

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  PolyQ scaled(const Rat& s) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// quotient and remainder with deg(rem) < deg(g); g must be nonzero
std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& f, const PolyQ& g);

// monic gcd (zero polynomial if both inputs are zero)
PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);

PolyQ poly_derivative(const PolyQ& f);

PolyQ poly_pow(const PolyQ& f, unsigned long e);

// Res(f,g) = lc(f)^deg(g) * prod g(alpha) over roots alpha of f,
// computed by the Euclidean remainder chain; 0 if either input is zero
Rat poly_resultant(const PolyQ& f, const PolyQ& g);

// d-th cyclotomic polynomial, memoized
const PolyQ& cyclotomic(long d);

// unique polynomial of degree < points.size() through the given points;
// x-coordinates must be pairwise distinct
PolyQ lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

std::string poly_to_string(const PolyQ& f, const std::string& var = "x");

}  // namespace exactseq

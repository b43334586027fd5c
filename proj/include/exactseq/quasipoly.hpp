#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "exactseq/int.hpp"
#include "exactseq/partitions.hpp"
#include "exactseq/poly.hpp"

namespace exactseq {

// f(n) = polys[n mod modulus](n) for all n >= threshold; polys[0] serves the
// residue class of multiples of the modulus
struct QuasiPolynomial {
  long modulus = 1;
  std::vector<PolyQ> polys = {PolyQ()};
  long threshold = 0;
  long degree = 0;  // declared bound; actual polynomial degrees never exceed it

  void validate() const;
};

// p_{n mod m}(n); refuses n below max(1, threshold), where the polynomials
// carry no promise and the caller must compute the value directly
Rat qp_eval(const QuasiPolynomial& q, const Int& n);

// the polynomials read as a total sequence, ignoring the threshold
Rat qp_extension(const QuasiPolynomial& q, long n);

// Cauchy convolution of the polynomial extensions: modulus lcm, degree
// d + d' + 1, threshold N + N'; sampled per residue class and interpolated,
// with one verification point per class
QuasiPolynomial qp_convolve(const QuasiPolynomial& f, const QuasiPolynomial& g);

// alpha*f + beta*g with modulus lcm, degree max, threshold max
QuasiPolynomial qp_combine(const Rat& alpha, const QuasiPolynomial& f, const Rat& beta,
                           const QuasiPolynomial& g);

// counting quasipolynomial for partitions with parts from the given set,
// built by convolving the single-part indicator sequences; cross-checked
// against the direct binomial sum at three sample indices
QuasiPolynomial bell_quasipoly(const std::vector<long>& parts);

// partitions of n with parts from the given set, by the explicit binomial sum
// over the mixed-radix index box with side D/a_i, D = lcm of the parts
Int robins_vignat_direct(const std::vector<long>& parts, long n);

using QpSource = std::function<Rat(long)>;

// fits degree-many+1 points per residue class starting at max(threshold, 1)
// and verifies one further point per class; a verification miss means the
// source is not of the guessed class
QuasiPolynomial interpolate_quasipoly(const QpSource& source, long modulus, long degree,
                                      long threshold);

// admits(part, mult) decides the allowed multiplicities; patterns must be
// period-periodic in mult from stable_from on, and parts above max_part may
// not appear
using MultiplicityTable = std::function<bool(long part, long mult)>;

// counting quasipolynomial for partitions whose multiplicities obey the
// table; threshold max_part*(max_part+1)/2 * stable_from
QuasiPolynomial bell_general(long max_part, long period, long stable_from,
                             const MultiplicityTable& admits);

// sum of weight(k) * (#partitions of n with exactly k parts) for variant P,
// or with exactly k distinct parts for variant Q
QuasiPolynomial weighted_finite_support(const std::map<long, Rat>& weight,
                                        PartVariant variant);

// text document: modulus, threshold, then one line per residue listing the
// coefficients lowest degree first as numerator/denominator
std::string qp_to_string(const QuasiPolynomial& q);

}  // namespace exactseq

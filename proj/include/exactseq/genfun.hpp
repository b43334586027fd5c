#pragma once

#include <functional>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// dense power series truncated at a fixed order; coeffs[e] is the q^e coefficient
struct TruncatedSeries {
  std::vector<Int> coeffs;

  TruncatedSeries() = default;
  explicit TruncatedSeries(long ord) : coeffs(ord + 1) {}

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  Int& operator[](long i) { return coeffs[i]; }
  const Int& operator[](long i) const { return coeffs[i]; }
  bool operator==(const TruncatedSeries&) const = default;
};

TruncatedSeries series_one(long order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// admits(n, i, j) decides whether parts of size i may appear with multiplicity j
// when counting at target n; cost_hint is the nominal work per call
struct MultiplicityPredicate {
  std::function<bool(long n, long i, long j)> admits;
  long cost_hint = 1;
};

// [q^n] of prod_{i=1}^n sum_{j=0}^{n/i} admits(n,i,j) q^{ij}
Int restricted_count(const MultiplicityPredicate& pred, long n);

// coefficients [q^0 .. q^target] of the same product taken at n = target;
// entry t equals restricted_count(pred, t) whenever admits ignores its first
// argument, at the cost of a single product pass
std::vector<Int> restricted_prefix(const MultiplicityPredicate& pred, long target);

// g(1) < g(2) < ... enumerates the allowed part sizes
using PartGenerator = std::function<long(long)>;

// partitions of n into parts from the range of g; d = gcd of the range,
// certified by the finite witness set B with gcd(B) = d
Int partitions_into_set(const PartGenerator& g, long d, const std::vector<long>& B,
                        long n);

Int distinct_squares_count(long n);
Int square_multiplicities_count(long n);
Int mary_partitions(long m, long n);

}  // namespace exactseq

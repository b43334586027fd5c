#pragma once

#include <functional>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// coefficient of q^n in prod(1 - q^k): +-1 at generalized pentagonal numbers,
// found by solving 24n+1 = (6i -+ 1)^2 with isqrt
Int q_pm(const Int& n);

// sum of (-1)^{parts} over all partitions of n; equals (-1)^n times the
// distinct-odd-parts count
Int p_pm(long n);

// coefficients of prod(1 - q^k)^l up to order n
std::vector<Int> eta_power_coeffs(long l, long n);

// coefficient of q^n in prod(1 - q^k)^2 through the multiplicative function G
// at 12n+1; needs the factorization, so large hard inputs can be refused
Int glaisher_q2(const Int& n);

// coefficient of q^n in prod(1 - q^k)^3: +-(2i+1) at triangular numbers
Int jacobi_q3(const Int& n);

Int ramanujan_tau(long n);

// f(n) = [q^n] prod_i prod_{k <= sorts(i)} sum_j admits(i,j,k) (-1)^j q^{ij}
struct SortedSignedSpec {
  std::function<long(long)> sorts;                    // i -> a_i >= 0
  std::function<bool(long, long, long)> admits;       // (i, j, k) -> {0, 1}
};

Int signed_sorted_count(const SortedSignedSpec& spec, long n);

enum class SquareSeriesKind {
  S,  // prod (1 - q^{k^2})
  T,  // 1 / prod (1 + q^{k^2})
};

std::vector<Int> signed_square_series(SquareSeriesKind kind, long n);

// coefficients of prod 1/(1 + q^k)^l up to order n
std::vector<Int> p_pm_power_series(long l, long n);

enum class TwoSquareForm { XPlus2Y2, X2Plus2Y2 };

// nonnegative solution counts of n = x + 2y^2 (closed form) and n = x^2 + 2y^2
// (divisor counts modulo 8)
Int two_square_forms(const Int& n, TwoSquareForm form);

}  // namespace exactseq

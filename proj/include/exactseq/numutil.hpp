#pragma once

#include <map>
#include <utility>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// floor square root by the bit-by-bit construction: m := 0, then add the
// largest power of two keeping (m + 2^r)^2 <= n, repeatedly
Int isqrt(const Int& n);

struct DivisorSums {
  Int tau;     // number of divisors
  Int sigma;   // sum of divisors
  Int tau_pm;  // odd divisors minus even divisors
  std::map<std::pair<long, long>, Int> tau_mod;  // (i, m) -> #divisors == i (mod m)
};

DivisorSums divisor_sums(const Int& n,
                         const std::vector<std::pair<long, long>>& residues = {});

bool is_prime(const Int& n);

// primes strictly increasing; product of prime^exp recovers n
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

// largest k with p^k | n!
Int legendre_nu(const Int& p, const Int& n);

// least n0 such that every n > n0 is a nonnegative integer combination of B;
// reachability DP up to a constructive Bezout bound
long frobenius_threshold(const std::vector<long>& B);

}  // namespace exactseq

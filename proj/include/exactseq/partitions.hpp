#pragma once

#include <functional>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// triangular table of partition counts by number of parts: entry(k, m) counts
// partitions of m with exactly k parts (or k distinct parts), 1 <= k <= m
struct PartitionTable {
  long limit = 0;
  std::vector<std::vector<Int>> rows;  // rows[m-1] holds k = 1..m

  const Int& entry(long k, long m) const;
  Int row_sum(long m) const;
};

PartitionTable build_pk_table(long n);
PartitionTable build_qk_table(long n);

// p(0), ..., p(n) via the generalized-pentagonal recurrence
std::vector<Int> p_pentagonal(long n);

// p(n) = (1/n) * sum_{i=1..n} sigma(i) p(n-i); the division must come out exact
Int p_sigma_recurrence(long n);

enum class PartVariant { P, Q };

// sum_k g(k) * p_k(n) (or q_k(n)); g must be >= 1 on 1..n
Int weighted_parts_sum(const std::function<Int(long)>& g, long n, PartVariant variant);

// total part count over all (distinct-part) partitions of n, via divisor sums
Int total_parts_divisor_form(long n, PartVariant variant);

// compositions of n with pairwise distinct parts: sum_k k! * q_k(n)
Int compositions_distinct_parts(long n);

}  // namespace exactseq

#include "exactseq/oracle.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "exactseq/errors.hpp"

namespace exactseq {

long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

std::map<long, long> Partition::multiplicities() const {
  std::map<long, long> mult;
  for (long p : parts) ++mult[p];
  return mult;
}

namespace {

void check_oracle_budget(long n, long limit) {
  if (n < 0) throw std::domain_error("oracle: negative n");
  if (n > limit) {
    throw budget_error("oracle: n = " + std::to_string(n) + " exceeds limit " +
                       std::to_string(limit));
  }
}

// descending first parts yield lexicographic order, largest part first
template <typename Visit>
void walk_partitions(long remaining, long max_part, Partition& cur, const Visit& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    cur.parts.push_back(p);
    walk_partitions(remaining - p, p, cur, visit);
    cur.parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n, const PartitionFilter& filter,
                                            long limit) {
  check_oracle_budget(n, limit);
  std::vector<Partition> out;
  Partition cur;
  walk_partitions(n, n == 0 ? 1 : n, cur, [&](const Partition& p) {
    if (!filter || filter(p)) out.push_back(p);
  });
  return out;
}

Int oracle_count(long n, const PartitionFilter& filter, const PartitionWeight& weight,
                 long limit) {
  check_oracle_budget(n, limit);
  Int total = 0;
  Partition cur;
  walk_partitions(n, n == 0 ? 1 : n, cur, [&](const Partition& p) {
    if (filter && !filter(p)) return;
    if (weight) {
      total += weight(p);
    } else {
      total += 1;
    }
  });
  return total;
}

Int oracle_lrs(const LrsSpec& spec, long n) {
  spec.validate();
  if (n < 1) throw std::domain_error("oracle_lrs: n must be >= 1");
  long k = spec.order();
  if (k == 0) return 0;
  std::vector<Int> f(spec.initial.begin(), spec.initial.end());
  f.reserve(std::max<long>(n, k));
  for (long i = k; i < n; ++i) {
    Int next = 0;
    for (long j = 0; j < k; ++j) next += spec.coeffs[j] * f[i - k + j];
    f.push_back(next);
  }
  return f[n - 1];
}

namespace {

Int count_distinct_squares(long n, long max_root) {
  if (n == 0) return 1;
  Int total = 0;
  for (long r = max_root; r >= 1; --r) {
    long sq = r * r;
    if (sq > n) continue;
    total += count_distinct_squares(n - sq, r - 1);
  }
  return total;
}

Int count_squares(long n, long max_root) {
  if (n == 0) return 1;
  Int total = 0;
  for (long r = max_root; r >= 1; --r) {
    long sq = r * r;
    if (sq > n) continue;
    total += count_squares(n - sq, r);
  }
  return total;
}

}  // namespace

Int oracle_diophantine(long n, DiophantineForm form) {
  if (n < 0) throw std::domain_error("oracle_diophantine: negative n");
  switch (form) {
    case DiophantineForm::XPlus2Y2: {
      check_oracle_budget(n, 10000);
      Int total = 0;
      for (long y = 0; 2 * y * y <= n; ++y)
        total += 1;  // x = n - 2y^2 >= 0 is forced
      return total;
    }
    case DiophantineForm::X2Plus2Y2: {
      check_oracle_budget(n, 10000);
      Int total = 0;
      for (long y = 0; 2 * y * y <= n; ++y) {
        long rest = n - 2 * y * y;
        for (long x = 0; x * x <= rest; ++x)
          if (x * x == rest) total += 1;
      }
      return total;
    }
    case DiophantineForm::DistinctSquares: {
      check_oracle_budget(n, 3000);
      long root = 0;
      while ((root + 1) * (root + 1) <= n) ++root;
      return count_distinct_squares(n, root);
    }
    case DiophantineForm::Squares: {
      check_oracle_budget(n, 200);
      long root = 0;
      while ((root + 1) * (root + 1) <= n) ++root;
      return count_squares(n, root);
    }
  }
  throw std::domain_error("oracle_diophantine: unsupported form");
}

}  // namespace exactseq

#include "exactseq/partitions.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "exactseq/errors.hpp"
#include "exactseq/numutil.hpp"

namespace exactseq {

const Int& PartitionTable::entry(long k, long m) const {
  static const Int zero = 0;
  if (m < 1 || m > limit) throw std::domain_error("PartitionTable: m out of range");
  if (k < 1 || k > m) return zero;
  return rows[m - 1][k - 1];
}

Int PartitionTable::row_sum(long m) const {
  if (m < 1 || m > limit) throw std::domain_error("PartitionTable: m out of range");
  Int total = 0;
  for (const Int& v : rows[m - 1]) total += v;
  return total;
}

PartitionTable build_pk_table(long n) {
  if (n < 1) throw std::domain_error("build_pk_table: n must be >= 1");
  PartitionTable t;
  t.limit = n;
  t.rows.resize(n);
  for (long m = 1; m <= n; ++m) t.rows[m - 1].resize(m);
  auto at = [&](long k, long m) -> Int {
    if (k == 0) return m == 0 ? Int(1) : Int(0);
    if (m < k) return 0;
    return t.rows[m - 1][k - 1];
  };
  // p_k(m) = p_k(m-k) + p_{k-1}(m-1)
  for (long m = 1; m <= n; ++m)
    for (long k = 1; k <= m; ++k)
      t.rows[m - 1][k - 1] = at(k, m - k) + at(k - 1, m - 1);
  return t;
}

PartitionTable build_qk_table(long n) {
  if (n < 1) throw std::domain_error("build_qk_table: n must be >= 1");
  PartitionTable t;
  t.limit = n;
  t.rows.resize(n);
  for (long m = 1; m <= n; ++m) t.rows[m - 1].resize(m);
  auto at = [&](long k, long m) -> Int {
    if (k == 0) return m == 0 ? Int(1) : Int(0);
    if (m < k) return 0;
    return t.rows[m - 1][k - 1];
  };
  // q_k(m) = q_k(m-k) + q_{k-1}(m-k)
  for (long m = 1; m <= n; ++m)
    for (long k = 1; k <= m; ++k)
      t.rows[m - 1][k - 1] = at(k, m - k) + at(k - 1, m - k);
  return t;
}

namespace {

// grown-on-demand shared tables; queries at or below the built limit reuse them
struct TableCache {
  std::mutex mu;
  std::shared_ptr<const PartitionTable> table;
};

std::shared_ptr<const PartitionTable> cached_table(TableCache& cache, long n,
                                                   PartitionTable (*build)(long)) {
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.table || cache.table->limit < n)
    cache.table = std::make_shared<const PartitionTable>(build(std::max(n, 64L)));
  return cache.table;
}

TableCache pk_cache;
TableCache qk_cache;

std::shared_ptr<const PartitionTable> table_for(PartVariant variant, long n) {
  return variant == PartVariant::P ? cached_table(pk_cache, n, build_pk_table)
                                   : cached_table(qk_cache, n, build_qk_table);
}

}  // namespace

std::vector<Int> p_pentagonal(long n) {
  if (n < 0) throw std::domain_error("p_pentagonal: negative n");
  std::vector<Int> p(n + 1);
  p[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Int v = 0;
    for (long i = 1;; ++i) {
      long a = i * (3 * i - 1) / 2;
      long b = i * (3 * i + 1) / 2;
      if (a > m) break;
      if (i % 2 == 1) {
        v += p[m - a];
        if (b <= m) v += p[m - b];
      } else {
        v -= p[m - a];
        if (b <= m) v -= p[m - b];
      }
    }
    p[m] = v;
  }
  return p;
}

Int p_sigma_recurrence(long n) {
  if (n < 1) throw std::domain_error("p_sigma_recurrence: n must be >= 1");
  std::vector<Int> p(n + 1);
  std::vector<Int> sigma(n + 1);
  for (long i = 1; i <= n; ++i) sigma[i] = divisor_sums(i).sigma;
  p[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Int v = 0;
    for (long i = 1; i <= m; ++i) v += sigma[i] * p[m - i];
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), Int(m).get_mpz_t());
    if (r != 0)
      throw consistency_error("p_sigma_recurrence: sum not divisible at m = " +
                              std::to_string(m));
    p[m] = q;
  }
  return p[n];
}

Int weighted_parts_sum(const std::function<Int(long)>& g, long n, PartVariant variant) {
  if (n < 1) throw std::domain_error("weighted_parts_sum: n must be >= 1");
  if (!g) throw std::domain_error("weighted_parts_sum: empty weight function");
  auto table = table_for(variant, n);
  Int total = 0;
  for (long k = 1; k <= n; ++k) {
    Int gk = g(k);
    if (gk < 1)
      throw std::domain_error("weighted_parts_sum: weight must be positive at k = " +
                              std::to_string(k));
    total += gk * table->entry(k, n);
  }
  return total;
}

Int total_parts_divisor_form(long n, PartVariant variant) {
  if (n < 1) throw std::domain_error("total_parts_divisor_form: n must be >= 1");
  Int total = 0;
  if (variant == PartVariant::P) {
    auto p = p_pentagonal(n);
    for (long i = 1; i <= n; ++i) total += divisor_sums(i).tau * p[n - i];
  } else {
    auto table = table_for(PartVariant::Q, n);
    std::vector<Int> q(n + 1);
    q[0] = 1;
    for (long m = 1; m <= n; ++m) q[m] = table->row_sum(m);
    for (long i = 1; i <= n; ++i) total += divisor_sums(i).tau_pm * q[n - i];
  }
  return total;
}

Int compositions_distinct_parts(long n) {
  if (n < 1) throw std::domain_error("compositions_distinct_parts: n must be >= 1");
  auto table = table_for(PartVariant::Q, n);
  Int total = 0;
  Int factorial = 1;
  for (long k = 1; k <= n; ++k) {
    factorial *= k;
    total += factorial * table->entry(k, n);
  }
  return total;
}

}  // namespace exactseq

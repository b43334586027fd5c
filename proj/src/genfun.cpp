#include "exactseq/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "exactseq/errors.hpp"
#include "exactseq/numutil.hpp"
#include "exactseq/oracle.hpp"

namespace exactseq {

TruncatedSeries series_one(long order) {
  if (order < 0) throw std::domain_error("series_one: negative order");
  TruncatedSeries s(order);
  s[0] = 1;
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::domain_error("series_mul: order mismatch");
  long ord = a.order();
  TruncatedSeries out(ord);
  for (long i = 0; i <= ord; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= ord; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

namespace {

// acc *= sum_{e in exponents} q^e, truncated at acc's order; exponents sorted,
// distinct, and must include 0 so the product keeps its low terms
void mul_sparse_factor(TruncatedSeries& acc, const std::vector<long>& exponents) {
  long ord = acc.order();
  if (exponents.size() == 1 && exponents[0] == 0) return;
  TruncatedSeries out(ord);
  for (long e : exponents) {
    if (e > ord) break;
    for (long s = e; s <= ord; ++s) {
      if (acc[s - e] == 0) continue;
      out[s] += acc[s - e];
    }
  }
  acc = std::move(out);
}

}  // namespace

Int restricted_count(const MultiplicityPredicate& pred, long n) {
  if (n < 0) throw std::domain_error("restricted_count: negative n");
  if (!pred.admits) throw std::domain_error("restricted_count: empty predicate");
  if (n == 0) return 1;  // empty product
  TruncatedSeries acc = series_one(n);
  std::vector<long> exps;
  for (long i = 1; i <= n; ++i) {
    exps.clear();
    for (long j = 0; i * j <= n; ++j)
      if (pred.admits(n, i, j)) exps.push_back(i * j);
    mul_sparse_factor(acc, exps);
  }
  return acc[n];
}

std::vector<Int> restricted_prefix(const MultiplicityPredicate& pred, long target) {
  if (target < 0) throw std::domain_error("restricted_prefix: negative target");
  if (!pred.admits) throw std::domain_error("restricted_prefix: empty predicate");
  if (target == 0) return {Int(1)};
  TruncatedSeries acc = series_one(target);
  std::vector<long> exps;
  for (long i = 1; i <= target; ++i) {
    exps.clear();
    for (long j = 0; i * j <= target; ++j)
      if (pred.admits(target, i, j)) exps.push_back(i * j);
    mul_sparse_factor(acc, exps);
  }
  return std::move(acc.coeffs);
}

namespace {

std::vector<long> parts_up_to(const PartGenerator& g, long bound) {
  std::vector<long> parts;
  long prev = 0;
  for (long k = 1;; ++k) {
    long v = g(k);
    if (v <= prev)
      throw std::domain_error("partitions_into_set: generator must be strictly increasing");
    if (v > bound) break;
    parts.push_back(v);
    prev = v;
  }
  return parts;
}

Int count_into_parts(long n, const std::vector<long>& parts) {
  std::set<long> allowed(parts.begin(), parts.end());
  long limit = std::max(kOracleLimit, n);
  if (n > 80)
    throw budget_error("partitions_into_set: brute-force range too large at n = " +
                       std::to_string(n));
  return oracle_count(
      n,
      [&](const Partition& p) {
        for (long part : p.parts)
          if (!allowed.count(part)) return false;
        return true;
      },
      {}, limit);
}

}  // namespace

Int partitions_into_set(const PartGenerator& g, long d, const std::vector<long>& B,
                        long n) {
  if (n < 0) throw std::domain_error("partitions_into_set: negative n");
  if (d < 1 || B.empty())
    throw std::domain_error("partitions_into_set: need d >= 1 and nonempty witness set");
  long gcd_b = 0;
  for (long b : B) gcd_b = std::gcd(gcd_b, b);
  if (gcd_b != d)
    throw std::domain_error("partitions_into_set: gcd of witness set is not d");

  // every witness must actually be an allowed part
  auto range = parts_up_to(g, *std::max_element(B.begin(), B.end()));
  for (long b : B)
    if (!std::binary_search(range.begin(), range.end(), b))
      throw std::domain_error("partitions_into_set: witness not in generator range");

  if (n % d != 0) return 0;

  std::vector<long> reduced;
  reduced.reserve(B.size());
  for (long b : B) reduced.push_back(b / d);
  long n0 = d * frobenius_threshold(reduced);
  if (n <= n0) return count_into_parts(n, parts_up_to(g, n));

  auto parts = parts_up_to(g, n);
  std::set<long> allowed(parts.begin(), parts.end());
  MultiplicityPredicate in_set{
      [&allowed](long, long i, long j) { return j == 0 || allowed.count(i) > 0; }, 1};
  return restricted_count(in_set, n);
}

Int distinct_squares_count(long n) {
  if (n < 0) throw std::domain_error("distinct_squares_count: negative n");
  TruncatedSeries acc = series_one(n);
  for (long k = 1; k * k <= n; ++k) mul_sparse_factor(acc, {0, k * k});
  return acc[n];
}

Int square_multiplicities_count(long n) {
  if (n < 0) throw std::domain_error("square_multiplicities_count: negative n");
  TruncatedSeries acc = series_one(n);
  std::vector<long> exps;
  for (long i = 1; i <= n; ++i) {
    exps.assign(1, 0);
    for (long j = 1; i * j * j <= n; ++j) exps.push_back(i * j * j);
    mul_sparse_factor(acc, exps);
  }
  return acc[n];
}

Int mary_partitions(long m, long n) {
  if (m < 2) throw std::domain_error("mary_partitions: base must be >= 2");
  if (n < 0) throw std::domain_error("mary_partitions: negative n");
  if (m == 2) {
    std::vector<Int> f(n + 1);
    f[0] = 1;
    for (long i = 1; i <= n; ++i) {
      f[i] = f[i - 1];
      if (i % 2 == 0) f[i] += f[i / 2];
    }
    return f[n];
  }
  TruncatedSeries acc = series_one(n);
  std::vector<long> exps;
  for (long power = 1; power <= n; power *= m) {
    exps.clear();
    for (long e = 0; e <= n; e += power) exps.push_back(e);
    mul_sparse_factor(acc, exps);
    if (power > n / m) break;
  }
  return acc[n];
}

}  // namespace exactseq

#include "exactseq/cancellative.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "exactseq/errors.hpp"
#include "exactseq/genfun.hpp"
#include "exactseq/numutil.hpp"

namespace exactseq {

Int q_pm(const Int& n) {
  if (n < 0) throw std::domain_error("q_pm: negative n");
  Int disc = 24 * n + 1;
  Int r = isqrt(disc);
  if (r * r != disc) return 0;
  // r = 6i - 1 or r = 6i + 1; either way the sign is (-1)^i
  Int i;
  if (r % 6 == 5) {
    i = (r + 1) / 6;
  } else if (r % 6 == 1) {
    i = (r - 1) / 6;
  } else {
    return 0;
  }
  return i % 2 == 0 ? 1 : -1;
}

namespace {

// acc *= sum over terms (exponent, coefficient), truncated at acc's order
void mul_signed_sparse(std::vector<Int>& acc, const std::vector<std::pair<long, long>>& terms) {
  long ord = static_cast<long>(acc.size()) - 1;
  std::vector<Int> out(ord + 1);
  for (auto& [e, c] : terms) {
    if (e > ord) continue;
    for (long s = e; s <= ord; ++s) {
      if (acc[s - e] == 0) continue;
      out[s] += c * acc[s - e];
    }
  }
  acc = std::move(out);
}

std::vector<Int> distinct_odd_series(long order) {
  std::vector<Int> acc(order + 1);
  acc[0] = 1;
  for (long k = 1; 2 * k - 1 <= order; ++k)
    mul_signed_sparse(acc, {{0, 1}, {2 * k - 1, 1}});
  return acc;
}

std::vector<Int> eta_base(long order) {
  std::vector<Int> coeffs(order + 1);
  coeffs[0] = 1;
  for (long i = 1;; ++i) {
    long a = i * (3 * i - 1) / 2;
    long b = i * (3 * i + 1) / 2;
    if (a > order) break;
    long sign = i % 2 == 0 ? 1 : -1;
    coeffs[a] += sign;
    if (b <= order) coeffs[b] += sign;
  }
  return coeffs;
}

TruncatedSeries as_series(std::vector<Int> coeffs) {
  TruncatedSeries s;
  s.coeffs = std::move(coeffs);
  return s;
}

// series^l by binary powering on truncated series
std::vector<Int> series_power(std::vector<Int> base_coeffs, long l) {
  long order = static_cast<long>(base_coeffs.size()) - 1;
  TruncatedSeries base = as_series(std::move(base_coeffs));
  TruncatedSeries result = series_one(order);
  long e = l;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return std::move(result.coeffs);
}

// coefficients of 1/u for a series u with constant term 1
std::vector<Int> series_reciprocal(const std::vector<Int>& u) {
  if (u.empty() || u[0] != 1)
    throw std::domain_error("series_reciprocal: constant term must be 1");
  long ord = static_cast<long>(u.size()) - 1;
  std::vector<Int> r(ord + 1);
  r[0] = 1;
  for (long n = 1; n <= ord; ++n) {
    Int v = 0;
    for (long i = 1; i <= n; ++i) {
      if (u[i] == 0) continue;
      v -= u[i] * r[n - i];
    }
    r[n] = v;
  }
  return r;
}

}  // namespace

Int p_pm(long n) {
  if (n < 0) throw std::domain_error("p_pm: negative n");
  auto qo = distinct_odd_series(n);
  return n % 2 == 0 ? qo[n] : Int(-qo[n]);
}

std::vector<Int> eta_power_coeffs(long l, long n) {
  if (l < 1) throw std::domain_error("eta_power_coeffs: l must be >= 1");
  if (n < 0) throw std::domain_error("eta_power_coeffs: negative n");
  auto base = eta_base(n);
  if (l == 1) return base;
  return series_power(std::move(base), l);
}

Int glaisher_q2(const Int& n) {
  if (n < 0) throw std::domain_error("glaisher_q2: negative n");
  Int m = 12 * n + 1;
  Int g = 1;
  for (auto& [p, r] : factorize(m)) {
    long pm12 = mpz_fdiv_ui(p.get_mpz_t(), 12);
    Int factor = 0;
    if ((pm12 == 7 || pm12 == 11) && r % 2 == 0) {
      factor = 1;
    } else if (pm12 == 5 && r % 2 == 0) {
      factor = (r / 2) % 2 == 0 ? 1 : -1;
    } else if (pm12 == 1) {
      Int base = p - 3;
      Int exp = (p - 1) / 4;
      Int t;
      mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
      if (t == 1)
        factor = r + 1;
      else if (t == p - 1)
        factor = r % 2 == 0 ? Int(r + 1) : Int(-(long)(r + 1));
    }
    if (factor == 0) return 0;
    g *= factor;
  }
  return g;
}

Int jacobi_q3(const Int& n) {
  if (n < 0) throw std::domain_error("jacobi_q3: negative n");
  Int disc = 8 * n + 1;
  Int r = isqrt(disc);
  if (r * r != disc || r % 2 != 1) return 0;
  Int i = (r - 1) / 2;
  Int value = 2 * i + 1;
  return i % 2 == 0 ? value : Int(-value);
}

Int ramanujan_tau(long n) {
  if (n < 1) throw std::domain_error("ramanujan_tau: n must be >= 1");
  return eta_power_coeffs(24, n - 1)[n - 1];
}

Int signed_sorted_count(const SortedSignedSpec& spec, long n) {
  if (n < 0) throw std::domain_error("signed_sorted_count: negative n");
  if (!spec.sorts || !spec.admits)
    throw std::domain_error("signed_sorted_count: spec not fully populated");
  std::vector<Int> acc(n + 1);
  acc[0] = 1;
  std::vector<std::pair<long, long>> terms;
  for (long i = 1; i <= n; ++i) {
    long a = spec.sorts(i);
    if (a < 0) throw std::domain_error("signed_sorted_count: negative sort count");
    for (long k = 1; k <= a; ++k) {
      terms.clear();
      for (long j = 0; i * j <= n; ++j)
        if (spec.admits(i, j, k)) terms.emplace_back(i * j, j % 2 == 0 ? 1 : -1);
      mul_signed_sparse(acc, terms);
    }
  }
  return acc[n];
}

std::vector<Int> signed_square_series(SquareSeriesKind kind, long n) {
  if (n < 0) throw std::domain_error("signed_square_series: negative n");
  std::vector<Int> acc(n + 1);
  acc[0] = 1;
  if (kind == SquareSeriesKind::S) {
    for (long k = 1; k * k <= n; ++k) mul_signed_sparse(acc, {{0, 1}, {k * k, -1}});
    return acc;
  }
  for (long k = 1; k * k <= n; ++k) mul_signed_sparse(acc, {{0, 1}, {k * k, 1}});
  return series_reciprocal(acc);
}

std::vector<Int> p_pm_power_series(long l, long n) {
  if (l < 1) throw std::domain_error("p_pm_power_series: l must be >= 1");
  if (n < 0) throw std::domain_error("p_pm_power_series: negative n");
  std::vector<Int> acc(n + 1);
  acc[0] = 1;
  for (long k = 1; k <= n; ++k) mul_signed_sparse(acc, {{0, 1}, {k, 1}});
  return series_power(series_reciprocal(acc), l);
}

Int two_square_forms(const Int& n, TwoSquareForm form) {
  if (n < 1) throw std::domain_error("two_square_forms: n must be >= 1");
  if (form == TwoSquareForm::XPlus2Y2) return isqrt(n / 2) + 1;

  auto sums = divisor_sums(n, {{1, 8}, {3, 8}, {5, 8}, {7, 8}});
  Int total = sums.tau_mod.at({1, 8}) + sums.tau_mod.at({3, 8}) -
              sums.tau_mod.at({5, 8}) - sums.tau_mod.at({7, 8});
  Int root = isqrt(n);
  if (root * root == n) {
    total += 1;
  } else if (n % 2 == 0) {
    Int half = n / 2;
    Int hroot = isqrt(half);
    if (hroot * hroot == half) total += 1;
  }
  if (total % 2 != 0)
    throw consistency_error("two_square_forms: divisor sum has odd parity");
  return total / 2;
}

}  // namespace exactseq

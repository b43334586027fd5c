#include "exactseq/numutil.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "exactseq/errors.hpp"

namespace exactseq {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n == 0) return 0;
  Int m = 0;
  for (long r = bit_length(n) / 2 + 1; r >= 0; --r) {
    Int cand = m + (Int(1) << static_cast<unsigned long>(r));
    if (cand * cand <= n) m = std::move(cand);
  }
  return m;
}

DivisorSums divisor_sums(const Int& n,
                         const std::vector<std::pair<long, long>>& residues) {
  if (n <= 0) throw std::domain_error("divisor_sums: n must be positive");
  if (bit_length(n) > 50)
    throw budget_error("divisor_sums: n too large for divisor enumeration");
  const unsigned long nn = mpz_get_ui(n.get_mpz_t());

  DivisorSums out;
  out.tau = 0;
  out.sigma = 0;
  out.tau_pm = 0;
  for (const auto& [i, m] : residues) {
    if (m < 1) throw std::domain_error("divisor_sums: modulus must be positive");
    out.tau_mod[{i, m}] = 0;
  }
  auto record = [&](unsigned long d) {
    out.tau += 1;
    out.sigma += d;
    out.tau_pm += (d % 2 == 1) ? 1 : -1;
    for (auto& [key, count] : out.tau_mod) {
      const auto [i, m] = key;
      long r = static_cast<long>(d % static_cast<unsigned long>(m));
      long want = ((i % m) + m) % m;
      if (r == want) count += 1;
    }
  };
  for (unsigned long d = 1; d * d <= nn; ++d) {
    if (nn % d != 0) continue;
    record(d);
    if (d != nn / d) record(nn / d);
  }
  return out;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  // deterministic witness set for n < 3.317e24
  for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (miller_rabin_witness(n, Int(a), d, s)) return false;
  }
  static const Int deterministic_limit("3317044064679887385961981");
  if (n < deterministic_limit) return true;
  // beyond the deterministic range: extra fixed pseudo-random witnesses,
  // probabilistic certificate (error < 4^-32)
  Int a = 40499 % n;
  for (int i = 0; i < 32; ++i) {
    a = (a * 48271 + 11) % n;
    if (a < 2) a += 2;
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

namespace {

Int pollard_rho_split(const Int& n) {
  // Floyd iteration x -> x^2 + c, gcd probes batched
  for (unsigned long c = 1; c <= 40; ++c) {
    Int x = 2, y = 2, d = 1, prod = 1;
    long iter = 0;
    const long max_iter = 4'000'000;
    while (iter < max_iter) {
      ++iter;
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = (x >= y) ? Int(x - y) : Int(y - x);
      if (diff == 0) break;  // cycle without factor, retry with next c
      prod = (prod * diff) % n;
      if (iter % 64 == 0) {
        mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
        if (d != 1) break;
      }
    }
    if (d == 1) {
      mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
  throw budget_error("factorize: factoring effort budget exceeded");
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
  if (n <= 0) throw std::domain_error("factorize: n must be positive");
  std::map<Int, unsigned long> acc;
  Int rest = n;
  for (unsigned long d = 2; d < 10000 && d * d <= rest; d = (d == 2 ? 3 : d + 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      acc[Int(d)] += 1;
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  std::vector<Int> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      acc[m] += 1;
      continue;
    }
    Int d = pollard_rho_split(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return {acc.begin(), acc.end()};
}

Int legendre_nu(const Int& p, const Int& n) {
  if (!is_prime(p)) throw std::domain_error("legendre_nu: p must be prime");
  if (n < 1) throw std::domain_error("legendre_nu: n must be positive");
  Int total = 0;
  Int q = p;
  while (q <= n) {
    total += n / q;
    q *= p;
  }
  return total;
}

long frobenius_threshold(const std::vector<long>& B) {
  if (B.empty()) throw std::domain_error("frobenius_threshold: empty set");
  for (long b : B) {
    if (b < 1) throw std::domain_error("frobenius_threshold: elements must be positive");
  }
  long g = 0;
  for (long b : B) g = std::gcd(g, b);
  if (g != 1) throw std::domain_error("frobenius_threshold: gcd must be 1");

  std::vector<long> sorted = B;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 1) return 0;

  // Bezout coefficients via the iterated extended gcd give the reachability bound
  Int acc_g = sorted[0];
  std::vector<Int> coef{1};
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    Int s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc_g.get_mpz_t(),
               Int(sorted[i]).get_mpz_t());
    for (auto& c : coef) c *= s;
    coef.push_back(t);
    acc_g = g2;
  }
  assert(acc_g == 1);
  Int maxc = 0;
  for (const auto& c : coef) maxc = std::max(maxc, Int(abs(c)));
  Int bound = 0;
  for (long b : sorted) bound += Int(b) * sorted[0] * maxc;
  if (bound > 20'000'000) throw budget_error("frobenius_threshold: DP bound too large");
  const long U = to_long(bound);

  std::vector<char> reach(static_cast<std::size_t>(U) + 1, 0);
  reach[0] = 1;
  for (long x = 1; x <= U; ++x) {
    for (long b : sorted) {
      if (x >= b && reach[static_cast<std::size_t>(x - b)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  for (long x = U; x >= 1; --x) {
    if (!reach[static_cast<std::size_t>(x)]) return x;
  }
  return 0;
}

}  // namespace exactseq

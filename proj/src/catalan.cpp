#include "exactseq/catalan.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "exactseq/errors.hpp"

namespace exactseq {

void CatalanCache::extend(long n) {
  if (prefix.empty()) prefix.push_back(1);
  while (static_cast<long>(prefix.size()) < n) {
    long m = static_cast<long>(prefix.size()) + 1;
    Int next = 0;
    for (long k = 1; k <= m - 1; ++k) next += prefix[k - 1] * prefix[m - k - 1];
    prefix.push_back(next);
  }
}

const Int& CatalanCache::at(long n) const {
  if (n < 1 || n > static_cast<long>(prefix.size()))
    throw std::domain_error("CatalanCache: index outside computed prefix");
  return prefix[n - 1];
}

namespace {

constexpr long kCrossCheckLimit = 64;

const CatalanCache& reference_prefix() {
  static CatalanCache cache;
  static std::once_flag once;
  std::call_once(once, [] { cache.extend(kCrossCheckLimit); });
  return cache;
}

}  // namespace

Int catalan(long n) {
  if (n < 1) throw std::domain_error("catalan: n must be >= 1");
  const CatalanCache& ref = reference_prefix();
  Int c = 1;
  if (ref.at(1) != c) throw consistency_error("catalan: recurrences disagree at 1");
  for (long m = 1; m < n; ++m) {
    // c_{m+1} = (4m-2) c_m / (m+1)
    c *= 4 * m - 2;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), Int(m + 1).get_mpz_t());
    if (r != 0)
      throw consistency_error("catalan: inexact division at n = " + std::to_string(m + 1));
    c = q;
    if (m + 1 <= kCrossCheckLimit && ref.at(m + 1) != c)
      throw consistency_error("catalan: recurrences disagree at " + std::to_string(m + 1));
  }
  return c;
}

Int catalan_parity_aware(const Int& n) {
  if (n < 1) throw std::domain_error("catalan_parity_aware: n must be >= 1");
  if (mpz_popcount(n.get_mpz_t()) == 1) return 1;
  if (!n.fits_slong_p())
    throw budget_error("catalan_parity_aware: n too large for the dense path");
  return catalan(n.get_si());
}

}  // namespace exactseq

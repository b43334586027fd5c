#include "exactseq/quasipoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "exactseq/errors.hpp"
#include "exactseq/genfun.hpp"
#include "exactseq/oracle.hpp"

namespace exactseq {

void QuasiPolynomial::validate() const {
  if (modulus < 1) throw std::domain_error("QuasiPolynomial: modulus must be positive");
  if (static_cast<long>(polys.size()) != modulus)
    throw std::domain_error("QuasiPolynomial: need exactly modulus-many polynomials");
  if (threshold < 0) throw std::domain_error("QuasiPolynomial: negative threshold");
  if (degree < 0) throw std::domain_error("QuasiPolynomial: negative degree bound");
  for (const PolyQ& p : polys)
    if (p.degree() > degree)
      throw std::domain_error("QuasiPolynomial: polynomial degree exceeds declared bound");
}

namespace {

Rat ext_at(const QuasiPolynomial& q, long n) {
  return q.polys[n % q.modulus].eval(Rat(n));
}

constexpr long kModulusBudget = 100000;

}  // namespace

Rat qp_eval(const QuasiPolynomial& q, const Int& n) {
  q.validate();
  if (n < std::max(1L, q.threshold))
    throw std::domain_error("qp_eval: index below validity threshold");
  long r = to_long(Int(n % q.modulus));
  return q.polys[r].eval(Rat(n));
}

Rat qp_extension(const QuasiPolynomial& q, long n) {
  q.validate();
  if (n < 0) throw std::domain_error("qp_extension: negative index");
  return ext_at(q, n);
}

QuasiPolynomial qp_convolve(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  f.validate();
  g.validate();
  QuasiPolynomial out;
  out.modulus = std::lcm(f.modulus, g.modulus);
  out.degree = f.degree + g.degree + 1;
  out.threshold = f.threshold + g.threshold;
  if (out.modulus > kModulusBudget)
    throw budget_error("qp_convolve: combined modulus too large");

  long max_n = out.threshold + out.modulus * (out.degree + 2);
  std::vector<Rat> fv, gv;
  fv.reserve(max_n + 1);
  gv.reserve(max_n + 1);
  for (long i = 0; i <= max_n; ++i) {
    fv.push_back(ext_at(f, i));
    gv.push_back(ext_at(g, i));
  }
  std::vector<Rat> conv(max_n + 1, Rat(0));
  for (long i = 0; i <= max_n; ++i) {
    if (fv[i] == 0) continue;
    for (long j = 0; i + j <= max_n; ++j) {
      if (gv[j] == 0) continue;
      conv[i + j] += fv[i] * gv[j];
    }
  }

  out.polys.assign(out.modulus, PolyQ());
  for (long r = 0; r < out.modulus; ++r) {
    long base =
        out.threshold + ((r - out.threshold) % out.modulus + out.modulus) % out.modulus;
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(out.degree + 1);
    for (long t = 0; t <= out.degree; ++t)
      pts.emplace_back(Rat(base + t * out.modulus), conv[base + t * out.modulus]);
    PolyQ fit = lagrange_interpolate(pts);
    long check = base + (out.degree + 1) * out.modulus;
    if (fit.eval(Rat(check)) != conv[check])
      throw consistency_error("qp_convolve: interpolated class fails verification");
    out.polys[r] = std::move(fit);
  }
  return out;
}

QuasiPolynomial qp_combine(const Rat& alpha, const QuasiPolynomial& f, const Rat& beta,
                           const QuasiPolynomial& g) {
  f.validate();
  g.validate();
  QuasiPolynomial out;
  out.modulus = std::lcm(f.modulus, g.modulus);
  out.degree = std::max(f.degree, g.degree);
  out.threshold = std::max(f.threshold, g.threshold);
  if (out.modulus > kModulusBudget)
    throw budget_error("qp_combine: combined modulus too large");
  out.polys.resize(out.modulus);
  for (long r = 0; r < out.modulus; ++r)
    out.polys[r] =
        f.polys[r % f.modulus].scaled(alpha) + g.polys[r % g.modulus].scaled(beta);
  return out;
}

namespace {

QuasiPolynomial part_indicator(long a) {
  QuasiPolynomial q;
  q.modulus = a;
  q.polys.assign(a, PolyQ());
  q.polys[0] = PolyQ(1);
  q.threshold = 0;
  q.degree = 0;
  return q;
}

std::vector<long> normalize_parts(std::vector<long> parts, const std::string& who) {
  if (parts.empty()) throw std::domain_error(who + ": empty part set");
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (parts.front() < 1) throw std::domain_error(who + ": parts must be positive");
  return parts;
}

Int parts_filter_count(const std::vector<long>& parts, long n) {
  std::set<long> allowed(parts.begin(), parts.end());
  return oracle_count(n, [&](const Partition& p) {
    for (long part : p.parts)
      if (!allowed.count(part)) return false;
    return true;
  });
}

}  // namespace

Int robins_vignat_direct(const std::vector<long>& parts_in, long n) {
  auto parts = normalize_parts(parts_in, "robins_vignat_direct");
  if (n < 0) throw std::domain_error("robins_vignat_direct: negative n");
  Int lcm_d = 1;
  for (long a : parts) mpz_lcm_ui(lcm_d.get_mpz_t(), lcm_d.get_mpz_t(), a);
  Int box = 1;
  for (long a : parts) box *= lcm_d / a;
  if (box > 2000000)
    throw budget_error("robins_vignat_direct: index box too large");
  long d = to_long(lcm_d);
  long k = static_cast<long>(parts.size());

  std::vector<long> radix(k), idx(k, 0);
  for (long i = 0; i < k; ++i) radix[i] = d / parts[i];
  Int total = 0;
  while (true) {
    long dot = 0;
    for (long i = 0; i < k; ++i) dot += parts[i] * idx[i];
    if (dot <= n && (n - dot) % d == 0) {
      Int term;
      mpz_bin_uiui(term.get_mpz_t(),
                   static_cast<unsigned long>((n - dot) / d + k - 1),
                   static_cast<unsigned long>(k - 1));
      total += term;
    }
    long pos = 0;
    while (pos < k && ++idx[pos] == radix[pos]) idx[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

QuasiPolynomial bell_quasipoly(const std::vector<long>& parts_in) {
  auto parts = normalize_parts(parts_in, "bell_quasipoly");
  QuasiPolynomial acc = part_indicator(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = qp_convolve(acc, part_indicator(parts[i]));

  for (long n : {1L, acc.modulus + 2, 2 * acc.modulus + 23}) {
    Int expected;
    try {
      expected = robins_vignat_direct(parts, n);
    } catch (const budget_error&) {
      n = std::min(n, 40L);
      expected = parts_filter_count(parts, n);
    }
    if (qp_eval(acc, n) != Rat(expected))
      throw consistency_error("bell_quasipoly: value disagrees with the direct sum at n = " +
                              std::to_string(n));
  }
  return acc;
}

QuasiPolynomial interpolate_quasipoly(const QpSource& source, long modulus, long degree,
                                      long threshold) {
  if (!source) throw std::domain_error("interpolate_quasipoly: empty source");
  if (modulus < 1) throw std::domain_error("interpolate_quasipoly: modulus must be positive");
  if (degree < 0) throw std::domain_error("interpolate_quasipoly: negative degree");
  if (threshold < 0) throw std::domain_error("interpolate_quasipoly: negative threshold");
  QuasiPolynomial out;
  out.modulus = modulus;
  out.degree = degree;
  out.threshold = threshold;
  out.polys.assign(modulus, PolyQ());
  long start = std::max(threshold, 1L);
  for (long r = 0; r < modulus; ++r) {
    long base = start + ((r - start) % modulus + modulus) % modulus;
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(degree + 1);
    for (long t = 0; t <= degree; ++t)
      pts.emplace_back(Rat(base + t * modulus), source(base + t * modulus));
    PolyQ fit = lagrange_interpolate(pts);
    long check = base + (degree + 1) * modulus;
    if (fit.eval(Rat(check)) != source(check))
      throw class_error("class hypothesis violated for residue " + std::to_string(r) +
                        " mod " + std::to_string(modulus));
    out.polys[r] = std::move(fit);
  }
  return out;
}

QuasiPolynomial bell_general(long max_part, long period, long stable_from,
                             const MultiplicityTable& admits) {
  if (max_part < 1) throw std::domain_error("bell_general: max_part must be >= 1");
  if (period < 1) throw std::domain_error("bell_general: period must be >= 1");
  if (stable_from < 0) throw std::domain_error("bell_general: negative stable_from");
  if (!admits) throw std::domain_error("bell_general: empty multiplicity table");

  long threshold = max_part * (max_part + 1) / 2 * stable_from;
  long modulus = 1;
  long active = 0;
  for (long i = 1; i <= max_part; ++i) {
    bool appears = false;
    for (long j = 1; j <= stable_from + period && !appears; ++j) appears = admits(i, j);
    if (!appears) continue;
    ++active;
    modulus = std::lcm(modulus, i * period);
    if (modulus > kModulusBudget)
      throw budget_error("bell_general: materialized modulus too large");
  }
  long degree = std::max(active - 1, 0L);

  long max_n = std::max(threshold, 1L) + modulus * (degree + 2);
  if (max_n > 200000)
    throw budget_error("bell_general: sample indices exceed the series budget");
  MultiplicityPredicate table_only{
      [&](long, long i, long j) { return i <= max_part ? admits(i, j) : j == 0; }, 1};
  auto prefix = restricted_prefix(table_only, max_n);
  return interpolate_quasipoly([&](long n) { return Rat(prefix[n]); }, modulus, degree,
                               threshold);
}

QuasiPolynomial weighted_finite_support(const std::map<long, Rat>& weight,
                                        PartVariant variant) {
  std::map<long, Rat> support;
  for (const auto& [k, w] : weight) {
    if (w == 0) continue;
    if (k < 1)
      throw std::domain_error("weighted_finite_support: support must be positive");
    support.emplace(k, w);
  }
  QuasiPolynomial acc;
  if (support.empty()) return acc;
  long s = support.rbegin()->first;
  if (s > 8) throw budget_error("weighted_finite_support: support maximum too large");

  std::map<std::vector<long>, QuasiPolynomial> cache;
  auto bell_of = [&](const std::vector<long>& parts) -> const QuasiPolynomial& {
    auto it = cache.find(parts);
    if (it == cache.end()) it = cache.emplace(parts, bell_quasipoly(parts)).first;
    return it->second;
  };
  auto add = [&](const Rat& coef, const QuasiPolynomial& piece) {
    acc = qp_combine(Rat(1), acc, coef, piece);
  };

  for (const auto& [k, w] : support) {
    if (variant == PartVariant::P) {
      // exactly k parts: those with parts in [k] that use part k
      std::vector<long> upto(k);
      std::iota(upto.begin(), upto.end(), 1);
      add(w, bell_of(upto));
      if (k > 1) {
        upto.resize(k - 1);
        add(-w, bell_of(upto));
      }
    } else {
      // exactly k distinct parts: parts in [k] using every one of them,
      // by inclusion-exclusion over the omitted subset
      for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        std::vector<long> kept;
        for (long i = 1; i <= k; ++i)
          if (!(mask & (1UL << (i - 1)))) kept.push_back(i);
        if (kept.empty()) continue;  // that term only touches n = 0
        Rat coef = std::popcount(mask) % 2 == 0 ? w : Rat(-w);
        add(coef, bell_of(kept));
      }
    }
  }
  return acc;
}

std::string qp_to_string(const QuasiPolynomial& q) {
  q.validate();
  std::ostringstream out;
  out << "modulus " << q.modulus << "\n";
  out << "threshold " << q.threshold << "\n";
  for (long j = 1; j <= q.modulus; ++j) {
    const PolyQ& p = q.polys[j % q.modulus];
    out << 'p' << j;
    if (p.is_zero()) {
      out << " 0/1";
    } else {
      for (long i = 0; i <= p.degree(); ++i) {
        const Rat& c = p.coeff(i);
        out << ' ' << c.get_num() << '/' << c.get_den();
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace exactseq

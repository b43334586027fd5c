#include "exactseq/lrs.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "exactseq/errors.hpp"

namespace exactseq {

void LrsSpec::validate() const {
  if (coeffs.size() != initial.size())
    throw std::domain_error("LrsSpec: need exactly order-many initial values");
  if (!coeffs.empty() && coeffs.front() == 0)
    throw std::domain_error("LrsSpec: leading coefficient a_0 must be nonzero");
}

PolyQ recurrence_polynomial(const LrsSpec& spec) {
  spec.validate();
  long k = spec.order();
  std::vector<Rat> c(k + 1);
  c[k] = 1;
  for (long i = 0; i < k; ++i) c[i] = Rat(-spec.coeffs[i]);
  return PolyQ(std::move(c));
}

std::vector<Int> lrs_prefix(const LrsSpec& spec, long count) {
  spec.validate();
  if (count < 0) throw std::domain_error("lrs_prefix: negative count");
  long k = spec.order();
  std::vector<Int> f;
  f.reserve(count);
  for (long i = 0; i < std::min(count, k); ++i) f.push_back(spec.initial[i]);
  for (long i = k; i < count; ++i) {
    Int next = 0;
    for (long j = 0; j < k; ++j) next += spec.coeffs[j] * f[i - k + j];
    f.push_back(next);
  }
  if (k == 0) f.assign(count, Int(0));
  return f;
}

namespace {

// shortest linear recurrence satisfied by the whole sample, returned as the
// monic polynomial whose reversal is the connection polynomial
PolyQ berlekamp_massey(const std::vector<Rat>& s) {
  std::vector<Rat> conn{Rat(1)}, prev{Rat(1)};
  long len = 0, gap = 1;
  Rat prev_delta = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rat delta = s[n];
    for (long i = 1; i <= len; ++i) delta += conn[i] * s[n - i];
    if (delta == 0) {
      ++gap;
      continue;
    }
    std::vector<Rat> keep;
    bool grow = 2 * len <= static_cast<long>(n);
    if (grow) keep = conn;
    Rat scale = delta / prev_delta;
    if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, Rat(0));
    for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= scale * prev[i];
    if (grow) {
      len = static_cast<long>(n) + 1 - len;
      prev = std::move(keep);
      prev_delta = delta;
      gap = 1;
    } else {
      ++gap;
    }
  }
  conn.resize(len + 1, Rat(0));
  std::vector<Rat> p(len + 1);
  for (long i = 0; i <= len; ++i) p[len - i] = conn[i];
  return PolyQ(std::move(p));
}

bool annihilates(const PolyQ& p, const std::vector<Int>& f) {
  long d = p.degree();
  if (d < 0) return false;
  for (std::size_t n = 0; n + d < f.size(); ++n) {
    Rat acc = 0;
    for (long i = 0; i <= d; ++i) acc += p.coeff(i) * Rat(f[n + i]);
    if (acc != 0) return false;
  }
  return true;
}

bool divides(const PolyQ& divisor, const PolyQ& target) {
  if (divisor.is_zero()) return target.is_zero();
  return poly_divrem(target, divisor).second.is_zero();
}

long euler_phi(long d) {
  long phi = d;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    phi -= phi / p;
    while (d % p == 0) d /= p;
  }
  if (d > 1) phi -= phi / d;
  return phi;
}

// p with every root raised to the m-th power, recovered by interpolating
// s -> Res_y(p(y), s - y^m) at deg(p)+1 sample points
PolyQ power_map_charpoly(const PolyQ& p, long m) {
  long k = p.degree();
  assert(k >= 1 && m >= 1);
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(k + 1);
  long s = 0;
  for (long i = 0; i <= k; ++i) {
    std::vector<Rat> g(m + 1);
    g[0] = Rat(s);
    g[m] = -1;
    pts.emplace_back(Rat(s), poly_resultant(p, PolyQ(std::move(g))));
    s = s > 0 ? -s : -s + 1;
  }
  return lagrange_interpolate(pts);
}

using Mat = std::vector<std::vector<Int>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t k = a.size();
  Mat c(k, std::vector<Int>(k, Int(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

}  // namespace

PolyQ minimal_polynomial(const LrsSpec& spec) {
  spec.validate();
  long k = spec.order();
  if (k == 0) return PolyQ(1);
  auto f = lrs_prefix(spec, 2 * k + 2);
  std::vector<Rat> sample(f.begin(), f.end());
  PolyQ p = berlekamp_massey(sample);
  if (!annihilates(p, f))
    throw consistency_error("minimal_polynomial: candidate fails on the sampled prefix");
  if (!divides(p, recurrence_polynomial(spec)))
    throw consistency_error("minimal_polynomial: candidate does not divide the recurrence polynomial");
  if (p.degree() >= 1 && p.coeff(0) == 0)
    throw consistency_error("minimal_polynomial: candidate has a zero root");
  return p;
}

long ratio_unity_modulus(const PolyQ& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw std::domain_error("ratio_unity_modulus: polynomial must have nonzero constant term");
  long k = p.degree();
  if (k == 0) return 1;

  // ratio polynomial: eliminate y from p(y) and p(x*y); its roots are the
  // pairwise root ratios, sampled at nonzero points where the y-degree stays k
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(k * k + 1);
  long s = 1;
  for (long i = 0; i <= k * k; ++i) {
    std::vector<Rat> g(k + 1);
    Rat power = 1;
    for (long j = 0; j <= k; ++j) {
      g[j] = p.coeff(j) * power;
      power *= s;
    }
    pts.emplace_back(Rat(s), poly_resultant(p, PolyQ(std::move(g))));
    s = s > 0 ? -s : -s + 1;
  }
  PolyQ ratio = lagrange_interpolate(pts);
  PolyQ squarefree = poly_divrem(ratio, poly_gcd(ratio, poly_derivative(ratio))).first;

  long bound = std::max(k, squarefree.degree());
  long m = 1;
  for (long d = 1; d <= 2 * bound * bound; ++d) {
    if (euler_phi(d) > bound) continue;
    const PolyQ& cyc = cyclotomic(d);
    if (divides(cyc, p) || divides(cyc, squarefree)) m = std::lcm(m, d);
  }
  return m;
}

bool SectionClassification::all_polynomial() const {
  return std::all_of(sections.begin(), sections.end(), [](const SectionInfo& s) {
    return s.kind == SectionKind::Polynomial;
  });
}

std::string classification_summary(const SectionClassification& cls) {
  std::string out = "m=" + std::to_string(cls.modulus);
  for (long j = 1; j <= cls.modulus; ++j) {
    const SectionInfo& sec = cls.sections[j - 1];
    out += "; r" + std::to_string(j) + ": ";
    if (sec.kind == SectionKind::Exponential) {
      out += "exponential";
    } else {
      out += "poly";
      if (sec.poly.degree() < 0) {
        out += " 0";
      } else {
        for (long i = 0; i <= sec.poly.degree(); ++i)
          out += " " + sec.poly.coeff(i).get_str();
      }
    }
  }
  return out;
}

SectionClassification classify(const LrsSpec& spec) {
  spec.validate();
  SectionClassification cls;
  cls.min_poly = minimal_polynomial(spec);
  if (cls.min_poly.degree() == 0) {
    cls.modulus = 1;
    cls.charpoly = cls.min_poly;
    cls.sections = {SectionInfo{SectionKind::Polynomial, cls.min_poly, PolyQ()}};
    return cls;
  }

  long k = spec.order();
  long m = ratio_unity_modulus(cls.min_poly);
  cls.modulus = m;
  cls.charpoly = power_map_charpoly(cls.min_poly, m);

  long per_section = 4 * k + 4;
  if (m > 100000 / per_section)
    throw budget_error("classify: section modulus needs too many forward terms");
  auto f = lrs_prefix(spec, m * per_section);

  cls.sections.reserve(m);
  for (long j = 1; j <= m; ++j) {
    std::vector<Int> terms(per_section);
    for (long t = 0; t < per_section; ++t) terms[t] = f[j - 1 + t * m];
    std::vector<Rat> sample(terms.begin(), terms.end());
    SectionInfo info;
    info.annihilator = berlekamp_massey(sample);
    if (!divides(info.annihilator, cls.charpoly))
      throw consistency_error("classify: section annihilator does not divide the power-map polynomial");
    long e = info.annihilator.degree();
    PolyQ shifted = poly_pow(PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}),
                             static_cast<unsigned long>(e));
    if (info.annihilator == shifted) {
      info.kind = SectionKind::Polynomial;
      if (e > 0) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (long t = 1; t <= k; ++t) pts.emplace_back(Rat(t), Rat(terms[t - 1]));
        info.poly = lagrange_interpolate(pts);
        for (long t = k + 1; t <= 2 * k; ++t)
          if (info.poly.eval(Rat(t)) != Rat(terms[t - 1]))
            throw consistency_error("classify: fitted section polynomial fails verification");
      }
    } else {
      info.kind = SectionKind::Exponential;
    }
    cls.sections.push_back(std::move(info));
  }
  return cls;
}

Int lrs_eval(const LrsSpec& spec, const SectionClassification& cls, const Int& n) {
  spec.validate();
  if (n < 1) throw std::domain_error("lrs_eval: index must be >= 1");
  long k = spec.order();
  if (k == 0) return 0;
  if (n <= k) return spec.initial[to_long(n) - 1];

  long m = cls.modulus;
  long j = to_long(Int((n - 1) % m)) + 1;
  const SectionInfo& sec = cls.sections[j - 1];
  if (sec.kind == SectionKind::Polynomial) {
    Int t = (n + m - j) / m;
    Rat v = sec.poly.eval(Rat(t));
    if (v.get_den() != 1)
      throw consistency_error("lrs_eval: polynomial section produced a non-integer");
    return v.get_num();
  }

  if (n > 2000000)
    throw budget_error("lrs_eval: exponential section index above budget");
  long steps = to_long(n) - 1;
  Mat base(k, std::vector<Int>(k, Int(0)));
  for (long r = 0; r + 1 < k; ++r) base[r][r + 1] = 1;
  for (long c = 0; c < k; ++c) base[k - 1][c] = spec.coeffs[c];
  Mat acc(k, std::vector<Int>(k, Int(0)));
  for (long r = 0; r < k; ++r) acc[r][r] = 1;
  while (steps > 0) {
    if (steps & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    steps >>= 1;
  }
  Int value = 0;
  for (long c = 0; c < k; ++c) value += acc[0][c] * spec.initial[c];
  return value;
}

Int lrs_eval(const LrsSpec& spec, const Int& n) {
  return lrs_eval(spec, classify(spec), n);
}

void HolonomicSpec::validate() const {
  if (coeffs.size() != initial.size())
    throw std::domain_error("HolonomicSpec: need exactly order-many initial values");
  for (const auto& [num, den] : coeffs)
    if (den.is_zero())
      throw std::domain_error("HolonomicSpec: zero denominator polynomial");
}

Rat holonomic_eval(const HolonomicSpec& spec, long n) {
  spec.validate();
  long k = spec.order();
  if (n < spec.start)
    throw std::domain_error("holonomic_eval: n before start index");
  if (k == 0) return Rat(0);
  if (n - spec.start >= 2000000)
    throw budget_error("holonomic_eval: index too far from start");
  // window holds f(i-k..i-1); the recurrence is anchored at m = i - k
  std::vector<Rat> window(spec.initial.begin(), spec.initial.end());
  for (long i = spec.start + k; i <= n; ++i) {
    Rat m(i - k);
    Rat next(0);
    for (long j = 0; j < k; ++j) {
      const auto& [num, den] = spec.coeffs[j];
      Rat d = den.eval(m);
      if (d == 0)
        throw std::domain_error("holonomic_eval: denominator vanishes at index " +
                                std::to_string(i - k));
      next += num.eval(m) / d * window[j];
    }
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window[n < spec.start + k ? n - spec.start : k - 1];
}

}  // namespace exactseq

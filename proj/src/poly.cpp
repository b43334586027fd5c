#include "exactseq/poly.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace exactseq {

namespace {
const Rat kZero = 0;
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ PolyQ::monomial(const Rat& c, std::size_t deg) {
  if (c == 0) return PolyQ();
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& PolyQ::coeff(std::size_t i) const {
  if (i >= c_.size()) return kZero;
  return c_[i];
}

const Rat& PolyQ::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Rat PolyQ::eval(const Rat& at) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * at + c_[i];
  }
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PolyQ(std::move(v));
}

PolyQ PolyQ::scaled(const Rat& s) const {
  if (s == 0) return PolyQ();
  PolyQ r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& f, const PolyQ& g) {
  if (g.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
  if (f.degree() < g.degree()) return {PolyQ(), f};
  std::vector<Rat> rem(f.coeffs());
  const long dg = g.degree();
  std::vector<Rat> quo(static_cast<std::size_t>(f.degree() - dg) + 1, Rat(0));
  const Rat& lead = g.leading();
  for (long i = f.degree(); i >= dg; --i) {
    Rat& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat q = top / lead;
    quo[static_cast<std::size_t>(i - dg)] = q;
    for (long j = 0; j <= dg; ++j) {
      rem[static_cast<std::size_t>(i - dg + j)] -= q * g.coeff(static_cast<std::size_t>(j));
    }
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ poly_gcd(const PolyQ& f, const PolyQ& g) {
  PolyQ a = f, b = g;
  while (!b.is_zero()) {
    PolyQ r = poly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());
}

PolyQ poly_derivative(const PolyQ& f) {
  if (f.degree() < 1) return PolyQ();
  std::vector<Rat> v(static_cast<std::size_t>(f.degree()), Rat(0));
  for (long i = 1; i <= f.degree(); ++i) {
    v[static_cast<std::size_t>(i - 1)] = f.coeff(static_cast<std::size_t>(i)) * i;
  }
  return PolyQ(std::move(v));
}

PolyQ poly_pow(const PolyQ& f, unsigned long e) {
  PolyQ r(1);
  PolyQ b = f;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rat poly_resultant(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  PolyQ a = f, b = g;
  Rat acc = 1;
  while (b.degree() > 0) {
    PolyQ r = poly_divrem(a, b).second;
    if (r.is_zero()) return 0;
    // Res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b,r)
    if ((a.degree() % 2) && (b.degree() % 2)) acc = -acc;
    acc *= pow_rat(b.leading(), static_cast<unsigned long>(a.degree() - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant
  return acc * pow_rat(b.leading(), static_cast<unsigned long>(a.degree()));
}

namespace {

std::map<long, PolyQ>& cyclotomic_cache() {
  static std::map<long, PolyQ> cache;
  return cache;
}

const PolyQ& cyclotomic_impl(long d) {
  auto& cache = cyclotomic_cache();
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  PolyQ xd_minus_1 = PolyQ::monomial(1, static_cast<std::size_t>(d)) - PolyQ(1);
  PolyQ denom(1);
  for (long e = 1; e < d; ++e) {
    if (d % e == 0) denom = denom * cyclotomic_impl(e);
  }
  auto [q, r] = poly_divrem(xd_minus_1, denom);
  assert(r.is_zero());
  return cache.emplace(d, std::move(q)).first->second;
}

}  // namespace

const PolyQ& cyclotomic(long d) {
  if (d < 1) throw std::domain_error("cyclotomic: index must be positive");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_impl(d);
}

PolyQ lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  // Newton form with divided differences
  const std::size_t n = points.size();
  if (n == 0) return PolyQ();
  std::vector<Rat> xs(n), dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = points[i].first;
    dd[i] = points[i].second;
  }
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rat dx = xs[i] - xs[i - level];
      if (dx == 0) throw std::domain_error("lagrange_interpolate: repeated x coordinate");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  PolyQ result(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * (PolyQ::x() - PolyQ(xs[i])) + PolyQ(dd[i]);
  }
  return result;
}

std::string poly_to_string(const PolyQ& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    const Rat& c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit = (a == 1);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace exactseq

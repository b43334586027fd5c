#pragma once

#include <utility>
#include <vector>

#include "exactseq/int.hpp"
#include "exactseq/poly.hpp"

namespace exactseq {

// f(n+k) = a_{k-1} f(n+k-1) + ... + a_0 f(n), given a_0..a_{k-1} and f(1)..f(k);
// a_0 must be nonzero unless k = 0 (the zero sequence)
struct LrsSpec {
  std::vector<Int> coeffs;
  std::vector<Int> initial;

  long order() const { return static_cast<long>(coeffs.size()); }
  void validate() const;
};

// x^k - a_{k-1} x^{k-1} - ... - a_0
PolyQ recurrence_polynomial(const LrsSpec& spec);

// f(1), ..., f(count) by forward iteration
std::vector<Int> lrs_prefix(const LrsSpec& spec, long count);

// monic generator of the annihilator ideal; divides the recurrence polynomial
PolyQ minimal_polynomial(const LrsSpec& spec);

// lcm of all d whose cyclotomic polynomial divides p or the ratio polynomial
// R(x) = Res_y(p(y), p(x*y)); requires p(0) != 0
long ratio_unity_modulus(const PolyQ& p);

enum class SectionKind { Polynomial, Exponential };

struct SectionInfo {
  SectionKind kind = SectionKind::Polynomial;
  PolyQ annihilator;  // minimal polynomial of the section sequence
  PolyQ poly;         // fitted polynomial in section position (Polynomial verdicts)
};

struct SectionClassification {
  long modulus = 1;
  PolyQ min_poly;
  PolyQ charpoly;  // Res_y(p(y), x - y^m); annihilates every m-section
  std::vector<SectionInfo> sections;  // sections[j-1] describes residue j in [1..m]

  bool all_polynomial() const;
};

SectionClassification classify(const LrsSpec& spec);

// one-line rendering: "m=2; r1: poly 0; r2: exponential"
std::string classification_summary(const SectionClassification& cls);

// exact term: polynomial residues in poly(log n) time, exponential residues by
// companion-matrix binary powering (refused above an index budget)
Int lrs_eval(const LrsSpec& spec, const SectionClassification& cls, const Int& n);
Int lrs_eval(const LrsSpec& spec, const Int& n);

// f(n+k) = a_{k-1}(n) f(n+k-1) + ... + a_0(n) f(n); coefficients are rational
// functions num/den; initials are f(start), ..., f(start+k-1)
struct HolonomicSpec {
  std::vector<std::pair<PolyQ, PolyQ>> coeffs;
  std::vector<Rat> initial;
  long start = 1;

  long order() const { return static_cast<long>(coeffs.size()); }
  void validate() const;
};

Rat holonomic_eval(const HolonomicSpec& spec, long n);

}  // namespace exactseq

#include "exactseq/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "exactseq/cancellative.hpp"
#include "exactseq/catalan.hpp"
#include "exactseq/errors.hpp"
#include "exactseq/genfun.hpp"
#include "exactseq/lrs.hpp"
#include "exactseq/oracle.hpp"
#include "exactseq/partitions.hpp"

namespace exactseq {

namespace {

void check_order(long n, const EvalBudget& budget, const char* who) {
  if (n > budget.max_order)
    throw budget_error(std::string(who) + ": index exceeds the configured order budget");
}

// coefficients of prod (1 + q^k) up to q^n: partitions into distinct parts
std::vector<Int> distinct_parts_prefix(long n) {
  std::vector<Int> c(n + 1);
  c[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long e = n; e >= k; --e) c[e] += c[e - k];
  return c;
}

const MultiplicityPredicate kMultDividesN{
    [](long n, long, long j) { return j == 0 || n % j == 0; }, 1};
const MultiplicityPredicate kPartDividesN{
    [](long n, long i, long j) { return j == 0 || n % i == 0; }, 1};

bool distinct_multiplicities(const Partition& p) {
  auto mults = p.multiplicities();
  std::vector<long> seen;
  seen.reserve(mults.size());
  for (const auto& [part, mult] : mults) seen.push_back(mult);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

const LrsSpec kFibSpec{{1, 1}, {1, 1}};

long require_k(const SequenceParams& params) {
  if (params.k < 1) throw std::domain_error("this sequence needs --k >= 1");
  return params.k;
}

std::vector<SequenceEntry> build_registry() {
  std::vector<SequenceEntry> reg;

  reg.push_back({"catalan", "Catalan numbers c_n (c_1 = c_2 = 1)", 1, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "catalan");
                   return catalan(n);
                 },
                 nullptr});

  reg.push_back({"fib", "Fibonacci numbers f(1) = f(2) = 1", 1, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return lrs_eval(kFibSpec, Int(n));
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget&) {
                   auto all = lrs_prefix(kFibSpec, hi);
                   return std::vector<Int>(all.begin() + (lo - 1), all.end());
                 }});

  reg.push_back({"p", "partition numbers p(n)", 0, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "p");
                   return p_pentagonal(n)[n];
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget& b) {
                   check_order(hi, b, "p");
                   auto all = p_pentagonal(hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"q", "partitions of n into distinct parts", 0, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "q");
                   return distinct_parts_prefix(n)[n];
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget& b) {
                   check_order(hi, b, "q");
                   auto all = distinct_parts_prefix(hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"pk", "partitions of n with exactly k parts", 1, true, false, false,
                 [](long n, const SequenceParams& params, const EvalBudget& b) {
                   long k = require_k(params);
                   check_order(n, b, "pk");
                   if (k > n) return Int(0);
                   return build_pk_table(n).entry(k, n);
                 },
                 [](long lo, long hi, const SequenceParams& params,
                    const EvalBudget& b) {
                   long k = require_k(params);
                   check_order(hi, b, "pk");
                   auto table = build_pk_table(hi);
                   std::vector<Int> out;
                   for (long n = lo; n <= hi; ++n)
                     out.push_back(k > n ? Int(0) : table.entry(k, n));
                   return out;
                 }});

  reg.push_back({"qk", "partitions of n with exactly k distinct parts", 1, true,
                 false, false,
                 [](long n, const SequenceParams& params, const EvalBudget& b) {
                   long k = require_k(params);
                   check_order(n, b, "qk");
                   if (k > n) return Int(0);
                   return build_qk_table(n).entry(k, n);
                 },
                 [](long lo, long hi, const SequenceParams& params,
                    const EvalBudget& b) {
                   long k = require_k(params);
                   check_order(hi, b, "qk");
                   auto table = build_qk_table(hi);
                   std::vector<Int> out;
                   for (long n = lo; n <= hi; ++n)
                     out.push_back(k > n ? Int(0) : table.entry(k, n));
                   return out;
                 }});

  reg.push_back({"fcdp", "compositions of n with pairwise distinct parts", 1, false,
                 false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fcdp");
                   return compositions_distinct_parts(n);
                 },
                 nullptr});

  reg.push_back({"a006128", "total number of parts over all partitions of n", 1,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "a006128");
                   return total_parts_divisor_form(n, PartVariant::P);
                 },
                 nullptr});

  reg.push_back({"a015723", "total number of parts over distinct-part partitions", 1,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "a015723");
                   return total_parts_divisor_form(n, PartVariant::Q);
                 },
                 nullptr});

  reg.push_back({"fm", "partitions whose multiplicities all divide n", 0, false,
                 false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fm");
                   return restricted_count(kMultDividesN, n);
                 },
                 nullptr});

  reg.push_back({"fp", "partitions whose parts all divide n", 0, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fp");
                   return restricted_count(kPartDividesN, n);
                 },
                 nullptr});

  reg.push_back({"fsq", "partitions of n into square parts", 0, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fsq");
                   return partitions_into_set([](long k) { return k * k; }, 1, {1}, n);
                 },
                 nullptr});

  reg.push_back({"fdsq", "partitions of n into distinct square parts", 0, false,
                 false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fdsq");
                   return distinct_squares_count(n);
                 },
                 nullptr});

  reg.push_back({"fsm", "partitions whose multiplicities are perfect squares", 0,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fsm");
                   return square_multiplicities_count(n);
                 },
                 nullptr});

  reg.push_back({"fdm", "partitions with pairwise distinct multiplicities", 0, false,
                 false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   return oracle_count(n, distinct_multiplicities, {}, b.oracle_limit);
                 },
                 nullptr});

  reg.push_back({"fbp", "binary partitions: parts are powers of two", 0, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "fbp");
                   return mary_partitions(2, n);
                 },
                 nullptr});

  reg.push_back({"mary", "partitions into powers of the base", 0, false, false, true,
                 [](long n, const SequenceParams& params, const EvalBudget& b) {
                   check_order(n, b, "mary");
                   return mary_partitions(params.base, n);
                 },
                 nullptr});

  reg.push_back({"qpm", "coefficient of q^n in prod (1 - q^k)", 0, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return q_pm(Int(n));
                 },
                 nullptr});

  reg.push_back({"ppm", "sum of (-1)^(number of parts) over partitions of n", 0,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "ppm");
                   return p_pm(n);
                 },
                 nullptr});

  reg.push_back({"etapow", "coefficient of q^n in prod (1 - q^k)^l", 0, false, true,
                 false,
                 [](long n, const SequenceParams& params, const EvalBudget& b) {
                   check_order(n, b, "etapow");
                   return eta_power_coeffs(params.l, n)[n];
                 },
                 [](long lo, long hi, const SequenceParams& params,
                    const EvalBudget& b) {
                   check_order(hi, b, "etapow");
                   auto all = eta_power_coeffs(params.l, hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"ppmpow", "coefficient of q^n in prod 1/(1 + q^k)^l", 0, false, true,
                 false,
                 [](long n, const SequenceParams& params, const EvalBudget& b) {
                   check_order(n, b, "ppmpow");
                   return p_pm_power_series(params.l, n)[n];
                 },
                 [](long lo, long hi, const SequenceParams& params,
                    const EvalBudget& b) {
                   check_order(hi, b, "ppmpow");
                   auto all = p_pm_power_series(params.l, hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"glaisher2", "coefficient of q^n in prod (1 - q^k)^2", 0, false,
                 false, false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return glaisher_q2(Int(n));
                 },
                 nullptr});

  reg.push_back({"jacobi3", "coefficient of q^n in prod (1 - q^k)^3", 0, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return jacobi_q3(Int(n));
                 },
                 nullptr});

  reg.push_back({"tau", "Ramanujan tau function", 1, false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "tau");
                   return ramanujan_tau(n);
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget& b) {
                   check_order(hi, b, "tau");
                   auto all = eta_power_coeffs(24, hi - 1);
                   return std::vector<Int>(all.begin() + (lo - 1), all.end());
                 }});

  reg.push_back({"s", "coefficient of q^n in prod (1 - q^(k^2))", 0, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "s");
                   return signed_square_series(SquareSeriesKind::S, n)[n];
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget& b) {
                   check_order(hi, b, "s");
                   auto all = signed_square_series(SquareSeriesKind::S, hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"t", "coefficient of q^n in 1 / prod (1 + q^(k^2))", 0, false, false,
                 false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   check_order(n, b, "t");
                   return signed_square_series(SquareSeriesKind::T, n)[n];
                 },
                 [](long lo, long hi, const SequenceParams&, const EvalBudget& b) {
                   check_order(hi, b, "t");
                   auto all = signed_square_series(SquareSeriesKind::T, hi);
                   return std::vector<Int>(all.begin() + lo, all.end());
                 }});

  reg.push_back({"x2y2", "solutions of n = x^2 + 2 y^2 in nonnegative integers", 1,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return two_square_forms(Int(n), TwoSquareForm::X2Plus2Y2);
                 },
                 nullptr});

  reg.push_back({"xp2y2", "solutions of n = x + 2 y^2 in nonnegative integers", 1,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget&) {
                   return two_square_forms(Int(n), TwoSquareForm::XPlus2Y2);
                 },
                 nullptr});

  reg.push_back({"parity", "Catalan numbers with the power-of-two parity shortcut", 1,
                 false, false, false,
                 [](long n, const SequenceParams&, const EvalBudget& b) {
                   if ((n & (n - 1)) != 0) check_order(n, b, "parity");
                   return catalan_parity_aware(Int(n));
                 },
                 nullptr});

  return reg;
}

}  // namespace

const std::vector<SequenceEntry>& sequence_registry() {
  static const std::vector<SequenceEntry> reg = build_registry();
  return reg;
}

const SequenceEntry* find_sequence(const std::string& name) {
  for (const SequenceEntry& entry : sequence_registry())
    if (entry.name == name) return &entry;
  return nullptr;
}

std::vector<Int> sequence_range(const SequenceEntry& entry, long lo, long hi,
                                const SequenceParams& params,
                                const EvalBudget& budget) {
  if (lo > hi) throw std::domain_error("sequence_range: empty range");
  if (lo < entry.min_index)
    throw std::domain_error(entry.name + ": first defined index is " +
                            std::to_string(entry.min_index));
  if (entry.eval_range) return entry.eval_range(lo, hi, params, budget);
  std::vector<Int> out;
  out.reserve(hi - lo + 1);
  for (long n = lo; n <= hi; ++n) out.push_back(entry.eval(n, params, budget));
  return out;
}

}  // namespace exactseq

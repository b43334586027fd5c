#include "exactseq/golden.hpp"

#include <stdexcept>

#include "exactseq/cancellative.hpp"
#include "exactseq/catalan.hpp"
#include "exactseq/numutil.hpp"
#include "exactseq/partitions.hpp"
#include "exactseq/registry.hpp"

namespace exactseq {

namespace {

bool check_value(VerifyResult& res, const std::string& label, const Int& got,
                 const Int& want) {
  if (!res.ok) return false;
  ++res.checks;
  if (got == want) return true;
  res.ok = false;
  res.message = label + ": expected " + want.get_str() + ", got " + got.get_str();
  return false;
}

bool check_table(VerifyResult& res, const std::string& name, long start,
                 const std::vector<long>& want, const SequenceParams& params = {}) {
  if (!res.ok) return false;
  const SequenceEntry* entry = find_sequence(name);
  if (entry == nullptr) throw std::domain_error("unregistered sequence: " + name);
  EvalBudget budget;
  long hi = start + static_cast<long>(want.size()) - 1;
  auto got = sequence_range(*entry, start, hi, params, budget);
  for (size_t i = 0; i < want.size(); ++i) {
    std::string label = name + "(" + std::to_string(start + static_cast<long>(i)) + ")";
    if (!check_value(res, label, got[i], Int(want[i]))) return false;
  }
  return true;
}

Int at(const std::string& name, long n, const SequenceParams& params = {}) {
  const SequenceEntry* entry = find_sequence(name);
  if (entry == nullptr) throw std::domain_error("unregistered sequence: " + name);
  return entry->eval(n, params, EvalBudget{});
}

VerifyResult golden_prefixes() {
  VerifyResult res;

  check_table(res, "catalan", 1, {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862});
  check_table(res, "fib", 1, {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144});
  check_table(res, "p", 1,
              {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176});
  check_table(res, "q", 1, {1, 1, 2, 2, 3, 4, 5});
  check_table(res, "a006128", 1, {1, 3, 6, 12, 20, 35, 54, 86, 128, 192});
  check_table(res, "a015723", 1, {1, 1, 3, 3, 5, 8, 10, 13, 18, 25});
  check_table(res, "fcdp", 1, {1, 1, 3, 3, 5, 11, 13, 19, 27});
  check_table(res, "fm", 1, {1, 2, 3, 5, 4, 10, 6, 17, 14, 26, 13, 66, 19, 63, 60});
  check_table(res, "fp", 1, {1, 2, 2, 4, 2, 8, 2, 10, 5, 11, 2, 45, 2, 14, 14});
  check_table(res, "fsq", 1, {1, 1, 1, 2, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 8});
  check_table(res, "fdsq", 1, {1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0});
  if (res.ok) {
    check_value(res, "fdsq(25)", at("fdsq", 25), 2);
    check_value(res, "fdsq(128)", at("fdsq", 128), 0);
  }
  check_table(res, "fsm", 1,
              {1, 1, 2, 3, 3, 5, 6, 8, 12, 12, 17, 23, 27, 32, 41, 52});
  check_table(res, "fdm", 1, {1, 2, 2, 4, 5, 7, 10, 13, 15, 21, 28, 31, 45, 55, 62});
  if (res.ok) {
    std::vector<long> fbp{1, 2, 4, 6, 10, 14, 20, 26, 36, 46, 60, 74};
    for (long i = 0; res.ok && i < static_cast<long>(fbp.size()); ++i)
      check_value(res, "fbp(" + std::to_string(2 * i) + ")", at("fbp", 2 * i), fbp[i]);
  }

  SequenceParams eta2;
  eta2.l = 2;
  check_table(res, "etapow", 0,
              {1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, 0, 0, 2, 3, -2, 2, 0}, eta2);
  check_table(res, "etapow", 58,
              {0, -2, 0, -2, 0, -2, 2, 0, -4, 0, 0, -2, -1, 2, 0, 2, 0, 0}, eta2);
  SequenceParams ppm2;
  ppm2.l = 2;
  check_table(res, "ppmpow", 0,
              {1, -2, 1, -2, 4, -4, 5, -6, 9, -12, 13, -16, 21, -26}, ppm2);

  check_table(res, "tau", 1, {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643});
  check_table(res, "t", 32,
              {1, -2, 3, -4, 3, -2, 1, 0, 1, -2, 3, -4, 3, -2, 1, 0, 0, -2});
  check_table(res, "s", 2990, {111, -112, 61, 46, -114, 116, -21, 11, -30, -17, 37});
  if (res.ok) {
    auto s = signed_square_series(SquareSeriesKind::S, 3000);
    Int max_abs = 0;
    for (const Int& v : s) {
      Int mag = v < 0 ? Int(-v) : v;
      if (mag > max_abs) max_abs = mag;
    }
    check_value(res, "max |s(n)| for n <= 3000", max_abs, 319);
  }

  check_table(res, "qpm", 0, {1, -1, -1, 0, 0, 1, 0, 1});
  if (res.ok) {
    check_value(res, "glaisher2(0)", at("glaisher2", 0), 1);
    check_value(res, "glaisher2(58)", at("glaisher2", 58), 0);
    check_value(res, "glaisher2(59)", at("glaisher2", 59), -2);
    check_value(res, "jacobi3(0)", at("jacobi3", 0), 1);
    check_value(res, "jacobi3(3)", at("jacobi3", 3), 5);
    check_value(res, "jacobi3(4)", at("jacobi3", 4), 0);
    check_value(res, "ppm(0)", at("ppm", 0), 1);
    check_value(res, "ppm(4)", at("ppm", 4), 1);
    check_value(res, "ppm(9)", at("ppm", 9), -2);
  }

  if (res.ok) {
    check_value(res, "parity(6)", at("parity", 6), 42);
    check_value(res, "parity(7)", at("parity", 7), 132);
    check_value(res, "parity(8)", at("parity", 8), 1);
    check_value(res, "parity(2^40)", at("parity", 1L << 40), 1);
  }

  if (res.ok) {
    SequenceParams k2, k5, k3;
    k2.k = 2;
    k5.k = 5;
    k3.k = 3;
    check_value(res, "pk(5), k=2", at("pk", 5, k2), 2);
    check_value(res, "pk(5), k=5", at("pk", 5, k5), 1);
    check_value(res, "qk(5), k=2", at("qk", 5, k2), 2);
    check_value(res, "qk(6), k=3", at("qk", 6, k3), 1);
    SequenceParams base3;
    base3.base = 3;
    check_value(res, "mary(2), base 3", at("mary", 2, base3), 1);
    check_value(res, "mary(22), base 2", at("mary", 22), 74);
  }

  if (res.ok) {
    check_value(res, "x2y2(3)", at("x2y2", 3), 1);
    check_value(res, "x2y2(5)", at("x2y2", 5), 0);
    check_value(res, "xp2y2(8)", at("xp2y2", 8), 3);
  }

  if (res.ok) {
    auto one = [](long) { return Int(1); };
    auto id = [](long k) { return Int(k); };
    check_value(res, "sum of g over parts, g = 1, n = 8",
                weighted_parts_sum(one, 8, PartVariant::P), 22);
    check_value(res, "sum of g over parts, g = id, n = 6",
                weighted_parts_sum(id, 6, PartVariant::P), 35);
    check_value(res, "sum over distinct-part partitions, g = id, n = 5",
                weighted_parts_sum(id, 5, PartVariant::Q), 5);
    check_value(res, "sum over distinct-part partitions, g = id, n = 6",
                weighted_parts_sum(id, 6, PartVariant::Q), 8);
    check_value(res, "frobenius threshold of {3, 5}",
                Int(frobenius_threshold({3, 5})), 7);
  }

  return res;
}

VerifyResult s_window_3000() {
  VerifyResult res;
  check_table(res, "s", 2990, {111, -112, 61, 46, -114, 116, -21, 11, -30, -17, 37});
  check_table(res, "t", 32,
              {1, -2, 3, -4, 3, -2, 1, 0, 1, -2, 3, -4, 3, -2, 1, 0, 0, -2});
  if (res.ok) {
    auto s = signed_square_series(SquareSeriesKind::S, 3000);
    Int max_abs = 0;
    for (const Int& v : s) {
      Int mag = v < 0 ? Int(-v) : v;
      if (mag > max_abs) max_abs = mag;
    }
    check_value(res, "max |s(n)| for n <= 3000", max_abs, 319);
  }
  return res;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"golden-prefixes", "s-window-3000"};
}

VerifyResult run_verify_suite(const std::string& suite) {
  if (suite == "golden-prefixes") return golden_prefixes();
  if (suite == "s-window-3000") return s_window_3000();
  throw std::domain_error("unknown verify suite: " + suite);
}

}  // namespace exactseq

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "exactseq/errors.hpp"
#include "exactseq/golden.hpp"
#include "exactseq/lrs.hpp"
#include "exactseq/quasipoly.hpp"
#include "exactseq/registry.hpp"
#include "json.hpp"

using namespace exactseq;

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  try {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
      long n = std::stol(text);
      return {n, n};
    }
    long lo = std::stol(text.substr(0, pos));
    long hi = std::stol(text.substr(pos + 2));
    if (lo > hi) throw std::domain_error("range: LO must not exceed HI");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw std::domain_error("range: expected N or LO..HI");
  } catch (const std::out_of_range&) {
    throw std::domain_error("range: index does not fit a machine word");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (from <= text.size()) {
    auto pos = text.find(sep, from);
    if (pos == std::string::npos) pos = text.size();
    out.push_back(text.substr(from, pos - from));
    from = pos + 1;
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  for (const std::string& tok : split(text, ',')) {
    try {
      out.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw std::domain_error(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  for (const Int& v : parse_int_list(text, what)) out.push_back(to_long(v));
  return out;
}

void emit_indexed(long lo, const std::vector<Int>& values, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << lo + static_cast<long>(i) << "," << values[i].get_str() << "\n";
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      rows.push_back({{"n", lo + static_cast<long>(i)}, {"value", values[i].get_str()}});
    std::cout << rows.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << lo + static_cast<long>(i) << "\t" << values[i].get_str() << "\n";
  }
}

long double ln_int(const Int& x) {
  long bits = bit_length(x);
  long shift = bits > 63 ? bits - 63 : 0;
  Int top = x >> shift;
  long double d = static_cast<long double>(top.get_d());
  return std::log(d) + static_cast<long double>(shift) * 0.693147180559945309L;
}

int run_profile(const SequenceEntry& entry, const std::vector<long>& indices,
                const SequenceParams& params, const EvalBudget& budget) {
  std::cout << "n,bits,m,duration_ns\n";
  std::vector<long double> xs, ys;
  for (long n : indices) {
    auto t0 = std::chrono::steady_clock::now();
    Int value = entry.eval(n, params, budget);
    auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ns < 1) ns = 1;
    Int mag = value < 0 ? Int(-value) : value;
    long double m = ln_int(Int(n + 1)) + ln_int(Int(mag + 2));
    char mbuf[64];
    std::snprintf(mbuf, sizeof mbuf, "%.12Lg", m);
    std::cout << n << "," << bit_length(value) << "," << mbuf << "," << ns << "\n";
    xs.push_back(std::log(m));
    ys.push_back(std::log(static_cast<long double>(ns)));
  }
  long double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= xs.size();
  ybar /= ys.size();
  long double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  long double exponent = den > 0 ? num / den : 0;
  char ebuf[64];
  std::snprintf(ebuf, sizeof ebuf, "%.6Lg", exponent);
  std::cout << "fitted exponent " << ebuf << "\n";
  return 0;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const class_error& e) {
    std::cerr << "class: " << e.what() << "\n";
    return 1;
  } catch (const consistency_error& e) {
    std::cerr << "consistency: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer sequence calculator with verified fast routes"};
  app.require_subcommand(1);

  std::string format = "plain";
  EvalBudget budget;
  SequenceParams params;
  auto add_shared = [&](CLI::App* cmd, bool with_format) {
    if (with_format)
      cmd->add_option("--format", format, "plain, csv, or json")
          ->check(CLI::IsMember({"plain", "csv", "json"}));
    cmd->add_option("--max-order", budget.max_order, "series and table order cap");
    cmd->add_option("--oracle-limit", budget.oracle_limit,
                    "largest n the enumeration oracle accepts");
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--k", params.k, "part-count selector (pk, qk)");
    cmd->add_option("--l", params.l, "product exponent (etapow, ppmpow)");
    cmd->add_option("--base", params.base, "radix (mary)");
  };

  auto* seq = app.add_subcommand("seq", "print values of a registered sequence");
  std::string seq_name, seq_range_str;
  seq->add_option("name", seq_name, "sequence identifier")->required();
  seq->add_option("range", seq_range_str, "index N or range LO..HI")->required();
  add_shared(seq, true);
  add_params(seq);

  auto* lrs = app.add_subcommand("lrs", "evaluate or classify a linear recurrence");
  std::string lrs_coeffs, lrs_init, lrs_range_str;
  bool lrs_classify = false;
  lrs->add_option("--coeffs", lrs_coeffs,
                  "a_0,...,a_{k-1} with f(n+k) = a_{k-1} f(n+k-1) + ... + a_0 f(n)")
      ->required();
  lrs->add_option("--init", lrs_init, "f(1),...,f(k)")->required();
  lrs->add_option("-n,--range", lrs_range_str, "index N or range LO..HI");
  lrs->add_flag("--classify", lrs_classify, "print per-residue section verdicts");
  add_shared(lrs, true);

  auto* qp = app.add_subcommand("qp", "build a quasipolynomial and print it");
  qp->require_subcommand(1);
  auto* qp_bell = qp->add_subcommand("bell", "counts partitions with parts from a set");
  std::string qp_parts;
  qp_bell->add_option("parts", qp_parts, "comma-separated part sizes")->required();
  auto* qp_weighted =
      qp->add_subcommand("weighted", "part-count weighted partition statistic");
  std::string qp_variant, qp_weights;
  qp_weighted->add_option("variant", qp_variant, "P (all) or Q (distinct parts)")
      ->required()
      ->check(CLI::IsMember({"P", "Q"}));
  qp_weighted
      ->add_option("weights", qp_weights, "len:weight pairs, e.g. 2:-1,3:1/2")
      ->required();

  auto* verify = app.add_subcommand("verify", "recompute a pinned value table");
  std::string verify_suite;
  verify->add_option("suite", verify_suite, "golden-prefixes or s-window-3000")
      ->required();

  auto* profile =
      app.add_subcommand("profile", "time a sequence across an index ladder");
  std::string profile_name, profile_indices;
  profile->add_option("name", profile_name, "sequence identifier")->required();
  profile->add_option("indices", profile_indices, "comma-separated indices")
      ->required();
  add_shared(profile, false);
  add_params(profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return run_guarded([&]() -> int {
    if (*seq) {
      const SequenceEntry* entry = find_sequence(seq_name);
      if (entry == nullptr) throw std::domain_error("unknown sequence: " + seq_name);
      if (entry->needs_k && params.k < 1)
        throw std::domain_error(seq_name + " needs --k");
      auto [lo, hi] = parse_range(seq_range_str);
      emit_indexed(lo, sequence_range(*entry, lo, hi, params, budget), format);
      return 0;
    }
    if (*lrs) {
      LrsSpec spec{parse_int_list(lrs_coeffs, "--coeffs"),
                   parse_int_list(lrs_init, "--init")};
      spec.validate();
      if (lrs_classify) {
        std::cout << classification_summary(classify(spec)) << "\n";
        return 0;
      }
      if (lrs_range_str.empty())
        throw std::domain_error("lrs: need -n N, --range LO..HI, or --classify");
      auto [lo, hi] = parse_range(lrs_range_str);
      if (lo < 1) throw std::domain_error("lrs: indices start at 1");
      auto cls = classify(spec);
      std::vector<Int> values;
      values.reserve(hi - lo + 1);
      for (long n = lo; n <= hi; ++n) values.push_back(lrs_eval(spec, cls, Int(n)));
      emit_indexed(lo, values, format);
      return 0;
    }
    if (*qp_bell) {
      std::cout << qp_to_string(bell_quasipoly(parse_long_list(qp_parts, "parts")));
      return 0;
    }
    if (*qp_weighted) {
      std::map<long, Rat> weights;
      for (const std::string& tok : split(qp_weights, ',')) {
        auto pos = tok.find(':');
        if (pos == std::string::npos)
          throw std::domain_error("weights: expected len:weight, got '" + tok + "'");
        try {
          Rat w(tok.substr(pos + 1));
          w.canonicalize();
          weights[std::stol(tok.substr(0, pos))] = w;
        } catch (const std::invalid_argument&) {
          throw std::domain_error("weights: bad entry '" + tok + "'");
        }
      }
      PartVariant variant = qp_variant == "P" ? PartVariant::P : PartVariant::Q;
      std::cout << qp_to_string(weighted_finite_support(weights, variant));
      return 0;
    }
    if (*verify) {
      VerifyResult res = run_verify_suite(verify_suite);
      if (res.ok) {
        std::cout << "ok " << verify_suite << " (" << res.checks << " checks)\n";
        return 0;
      }
      std::cout << "mismatch " << res.message << "\n";
      return 1;
    }
    if (*profile) {
      const SequenceEntry* entry = find_sequence(profile_name);
      if (entry == nullptr)
        throw std::domain_error("unknown sequence: " + profile_name);
      auto indices = parse_long_list(profile_indices, "indices");
      if (indices.empty()) throw std::domain_error("profile: no indices given");
      return run_profile(*entry, indices, params, budget);
    }
    return 2;
  });
}

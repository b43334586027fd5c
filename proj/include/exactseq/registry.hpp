#pragma once

#include <functional>
#include <string>
#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// resource caps threaded through every registry evaluation; exceeding one
// raises budget_error rather than starting an oversized computation
struct EvalBudget {
  long max_order = 100000;
  long oracle_limit = 60;
};

struct SequenceParams {
  long k = 0;     // part-count selector (pk, qk)
  long l = 1;     // product exponent (etapow, ppmpow)
  long base = 2;  // radix (mary)
};

struct SequenceEntry {
  std::string name;
  std::string summary;
  long min_index = 0;
  bool needs_k = false;
  bool uses_l = false;
  bool uses_base = false;
  std::function<Int(long, const SequenceParams&, const EvalBudget&)> eval;
  // batched evaluation over [lo, hi]; amortizes shared tables and series
  std::function<std::vector<Int>(long, long, const SequenceParams&, const EvalBudget&)>
      eval_range;
};

const std::vector<SequenceEntry>& sequence_registry();

// nullptr when the name is not registered
const SequenceEntry* find_sequence(const std::string& name);

std::vector<Int> sequence_range(const SequenceEntry& entry, long lo, long hi,
                                const SequenceParams& params, const EvalBudget& budget);

}  // namespace exactseq

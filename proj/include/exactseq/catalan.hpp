#pragma once

#include <vector>

#include "exactseq/int.hpp"

namespace exactseq {

// convolution-recurrence prefix c_1..c_N; append-only, single writer
struct CatalanCache {
  std::vector<Int> prefix;

  void extend(long n);
  const Int& at(long n) const;  // 1-based
};

// c_n by the one-term holonomic recurrence; values with n <= 64 are
// cross-checked against the convolution recurrence
Int catalan(long n);

// returns 1 straight from the parity rule when n is a power of two
// (the only n with c_n odd); otherwise computes c_n
Int catalan_parity_aware(const Int& n);

}  // namespace exactseq

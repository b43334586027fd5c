#pragma once

#include <stdexcept>

namespace exactseq {

// a computation would exceed a declared resource budget
// (oracle enumeration range, series order, exponential-branch index, factoring effort)
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// two routes that must agree disagreed, or an exactness assumption
// (exact division, integral polynomial value) failed
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// sampled data contradicts a declared quasipolynomial class
struct class_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace exactseq

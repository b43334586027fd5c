#pragma once

#include <string>
#include <vector>

namespace exactseq {

struct VerifyResult {
  bool ok = true;
  long checks = 0;
  std::string message;  // first mismatch, "name(n): expected X, got Y"
};

std::vector<std::string> verify_suite_names();

// throws domain_error for an unknown suite name
VerifyResult run_verify_suite(const std::string& suite);

}  // namespace exactseq

#pragma once

#include <functional>
#include <map>
#include <vector>

#include "exactseq/int.hpp"
#include "exactseq/lrs.hpp"

namespace exactseq {

// brute-force reference implementations; every fast counter in the library is
// checked against one of these on small inputs

struct Partition {
  std::vector<long> parts;  // weakly decreasing, every part >= 1

  long size() const;    // sum of parts
  long length() const { return static_cast<long>(parts.size()); }
  std::map<long, long> multiplicities() const;  // part -> multiplicity
};

using PartitionFilter = std::function<bool(const Partition&)>;
using PartitionWeight = std::function<Int(const Partition&)>;

inline constexpr long kOracleLimit = 60;

// all partitions of n in lexicographic order, largest part first
std::vector<Partition> enumerate_partitions(long n, const PartitionFilter& filter = {},
                                            long limit = kOracleLimit);

// sum of weight(p) over partitions passing the filter; weight defaults to 1,
// streaming, so counts at the limit need no materialized list
Int oracle_count(long n, const PartitionFilter& filter = {},
                 const PartitionWeight& weight = {}, long limit = kOracleLimit);

// f(n) by naive forward iteration of the recurrence
Int oracle_lrs(const LrsSpec& spec, long n);

enum class DiophantineForm {
  XPlus2Y2,        // n = x + 2y^2, x >= 0, y >= 0
  X2Plus2Y2,       // n = x^2 + 2y^2, x >= 0, y >= 0
  DistinctSquares, // partitions of n into distinct positive squares
  Squares,         // partitions of n into positive squares
};

Int oracle_diophantine(long n, DiophantineForm form);

}  // namespace exactseq

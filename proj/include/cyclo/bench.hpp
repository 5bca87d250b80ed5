#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/emit.hpp"

namespace cyclo {

struct BenchRow {
  int n = 0;
  std::uint64_t degree = 0;  // degree of Q_{2^n 5}
  double explicit_ms = 0;
  double oracle_ms = 0;
  double ratio = 0;           // oracle / explicit
  std::optional<bool> equal;  // factor sets compared for n <= 7
};

struct BenchTable {
  FieldPtr ctx;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
};

/// Median-of-3 wall times of factor_explicit and of the oracle on Q_{2^n 5}, n = 4..n_max.
BenchTable bench_run(const FieldPtr& ctx, int n_max, std::uint64_t seed = 0, int repetitions = 3);

std::string emit(const BenchTable& table, Format format);

}  // namespace cyclo

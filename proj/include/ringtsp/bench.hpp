#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ringtsp/tsp.hpp"

namespace ringtsp {

struct BenchRow {
  std::size_t n = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> runtime_ms;  // one per seed
  std::vector<double> weights;
  double median_ms = 0.0;
  double predicted_ops = 0.0;  // (7n^4 - 16n^3)/24
};

struct BenchTable {
  std::vector<BenchRow> rows;
  double slope = 0.0;            // least-squares slope of log(median_ms) vs log(n)
  double predicted_slope = 0.0;  // same fit on predicted_ops
};

/// Times solve() on seeded random instances (weights 1..100), seeds
/// base_seed .. base_seed+seeds-1 per size. Instances run one after another;
/// each solve uses the OpenMP kernels.
[[nodiscard]] BenchTable run_bench(std::span<const std::size_t> sizes, std::size_t seeds, std::uint64_t base_seed,
                                   const SolveOptions& opt = {});

/// Least-squares slope of log(y) against log(x). Needs two distinct x.
[[nodiscard]] double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace ringtsp

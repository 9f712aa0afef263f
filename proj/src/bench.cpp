#include "ringtsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ringtsp/instance_io.hpp"

namespace ringtsp {

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_slope: need two or more points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw DomainError("loglog_slope: values must be positive");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= double(x.size());
  my /= double(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw DomainError("loglog_slope: x values are all equal");
  return sxy / sxx;
}

BenchTable run_bench(std::span<const std::size_t> sizes, std::size_t seeds, std::uint64_t base_seed,
                     const SolveOptions& opt) {
  if (sizes.empty() || seeds == 0) throw DomainError("bench: need at least one size and one seed");
  BenchTable t;
  std::vector<double> xs, ys, ps;
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n = n;
    for (std::size_t s = 0; s < seeds; ++s) {
      const std::uint64_t seed = base_seed + s;
      const auto inst = random_instance(n, seed, 1, 100);
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = solve(inst, opt);
      const auto t1 = std::chrono::steady_clock::now();
      row.seeds.push_back(seed);
      row.runtime_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      row.weights.push_back(r.tour.weight);
    }
    auto sorted = row.runtime_ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    row.median_ms = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    row.predicted_ops = op_count_estimate(n).total;
    xs.push_back(double(n));
    ys.push_back(std::max(row.median_ms, 1e-6));
    ps.push_back(row.predicted_ops);
    t.rows.push_back(std::move(row));
  }
  if (xs.size() >= 2) {
    t.slope = loglog_slope(xs, ys);
    t.predicted_slope = loglog_slope(xs, ps);
  }
  return t;
}

}  // namespace ringtsp

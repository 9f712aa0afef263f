#include "ringtsp/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "ringtsp/cycle.hpp"

namespace ringtsp {

namespace {

void check_size(const CompleteInstance& inst, std::size_t limit, const char* who) {
  if (inst.order() > limit) {
    throw DomainError(std::string(who) + ": n = " + std::to_string(inst.order()) + " exceeds " +
                      std::to_string(limit));
  }
}

double walk_weight(const CompleteInstance& inst, const std::vector<std::size_t>& rest, std::size_t first) {
  double w = inst.at(0, first);
  std::size_t prev = first;
  for (std::size_t v : rest) {
    w += inst.at(prev, v);
    prev = v;
  }
  return w + inst.at(prev, 0);
}

// Calls f(first, rest) once per undirected tour 0-first-rest...-0, using
// first < last to drop mirror images.
template <class F>
void for_each_tour_from(std::size_t n, std::size_t first, F&& f) {
  std::vector<std::size_t> rest;
  for (std::size_t v = 1; v < n; ++v) {
    if (v != first) rest.push_back(v);
  }
  do {
    if (first < rest.back()) f(rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<Vertex> as_tour(std::size_t first, const std::vector<std::size_t>& rest) {
  std::vector<Vertex> t{1, Vertex(first + 1)};
  for (std::size_t v : rest) t.push_back(Vertex(v + 1));
  return t;
}

}  // namespace

OracleResult brute_force(const CompleteInstance& inst) {
  check_size(inst, brute_force_limit, "brute_force");
  const std::size_t n = inst.order();
  OracleResult r;
  r.method = "brute-force";
  if (n == 3) {
    r.optimum = inst.at(0, 1) + inst.at(1, 2) + inst.at(2, 0);
    r.tour = {1, 2, 3};
    r.optimal_count = 1;
    return r;
  }

  struct Local {
    double best = std::numeric_limits<double>::infinity();
    std::uint64_t count = 0;
    std::vector<Vertex> tour;
  };
  std::vector<Local> per_first(n);
  // Each branch fixes the vertex after v1.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t first = 1; first < n; ++first) {
    auto& loc = per_first[first];
    for_each_tour_from(n, first, [&](const std::vector<std::size_t>& rest) {
      const double w = walk_weight(inst, rest, first);
      if (w < loc.best) {
        loc.best = w;
        loc.count = 0;
        loc.tour.clear();
      }
      if (w == loc.best) {
        ++loc.count;
        auto t = canonical_rotation(as_tour(first, rest));
        if (loc.tour.empty() || t < loc.tour) loc.tour = std::move(t);
      }
    });
  }
  r.optimum = std::numeric_limits<double>::infinity();
  std::uint64_t count = 0;
  for (const auto& loc : per_first) {
    if (loc.tour.empty()) continue;
    if (loc.best < r.optimum) {
      r.optimum = loc.best;
      count = 0;
      r.tour.clear();
    }
    if (loc.best == r.optimum) {
      count += loc.count;
      if (r.tour.empty() || loc.tour < r.tour) r.tour = loc.tour;
    }
  }
  r.optimal_count = count;
  return r;
}

std::vector<double> all_tour_weights(const CompleteInstance& inst) {
  check_size(inst, brute_force_limit, "all_tour_weights");
  const std::size_t n = inst.order();
  if (n == 3) return {inst.at(0, 1) + inst.at(1, 2) + inst.at(2, 0)};
  std::vector<double> out;
  for (std::size_t first = 1; first < n; ++first) {
    for_each_tour_from(n, first, [&](const std::vector<std::size_t>& rest) { out.push_back(walk_weight(inst, rest, first)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult held_karp(const CompleteInstance& inst) {
  check_size(inst, held_karp_limit, "held_karp");
  const std::size_t n = inst.order();
  const std::size_t k = n - 1;  // vertices 1..n-1 (0-based) in the mask
  const std::size_t full = std::size_t{1} << k;
  constexpr double inf = std::numeric_limits<double>::infinity();
  // dp[mask*k + j]: shortest path 0 -> ... -> j+1 visiting exactly mask.
  std::vector<double> dp(full * k, inf);
  std::vector<std::uint8_t> from(full * k, 0xff);
  for (std::size_t j = 0; j < k; ++j) dp[(std::size_t{1} << j) * k + j] = inst.at(0, j + 1);

  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const double base = dp[mask * k + j];
      if (base == inf) continue;
      const double* row = inst.row(j + 1);
      for (std::size_t x = 0; x < k; ++x) {
        if (mask >> x & 1) continue;
        const std::size_t next = mask | (std::size_t{1} << x);
        const double w = base + row[x + 1];
        if (w < dp[next * k + x]) {
          dp[next * k + x] = w;
          from[next * k + x] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  OracleResult r;
  r.method = "held-karp";
  r.optimum = inf;
  std::size_t last = 0;
  const std::size_t all = full - 1;
  for (std::size_t j = 0; j < k; ++j) {
    const double w = dp[all * k + j] + inst.at(j + 1, 0);
    if (w < r.optimum) {
      r.optimum = w;
      last = j;
    }
  }
  std::vector<Vertex> walk;
  std::size_t mask = all, j = last;
  while (true) {
    walk.push_back(Vertex(j + 2));
    const std::uint8_t p = from[mask * k + j];
    mask &= ~(std::size_t{1} << j);
    if (p == 0xff) break;
    j = p;
  }
  walk.push_back(1);
  std::reverse(walk.begin(), walk.end());
  r.tour = canonical_rotation(walk);
  return r;
}

OracleResult exact_optimum(const CompleteInstance& inst) {
  return inst.order() <= brute_force_limit ? brute_force(inst) : held_karp(inst);
}

}  // namespace ringtsp

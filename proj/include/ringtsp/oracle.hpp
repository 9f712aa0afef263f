#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringtsp/graph.hpp"

namespace ringtsp {

/// Exact optimum of a small symmetric instance.
struct OracleResult {
  double optimum = 0.0;
  std::vector<Vertex> tour;                     // canonical; smallest among optimal tours
  std::optional<std::uint64_t> optimal_count;   // distinct undirected optimal tours (enumeration only)
  std::string method;                           // "brute-force" or "held-karp"
};

inline constexpr std::size_t brute_force_limit = 10;
inline constexpr std::size_t held_karp_limit = 20;

/// Enumerates all (n-1)!/2 undirected tours. n <= 10, otherwise DomainError.
[[nodiscard]] OracleResult brute_force(const CompleteInstance& inst);

/// Bitmask dynamic programme, O(2^n n^2). n <= 20, otherwise DomainError.
[[nodiscard]] OracleResult held_karp(const CompleteInstance& inst);

/// brute_force when it fits, held_karp otherwise.
[[nodiscard]] OracleResult exact_optimum(const CompleteInstance& inst);

/// Weight of every undirected tour, ascending. n <= 10.
[[nodiscard]] std::vector<double> all_tour_weights(const CompleteInstance& inst);

}  // namespace ringtsp

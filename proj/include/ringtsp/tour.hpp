#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringtsp/edge_set.hpp"

namespace ringtsp {

/// One ring-sum step of a construction: the triangle added and the cycle it
/// produced.
struct TraceStep {
  std::uint64_t triangle = 0;  // canonical triangle id (c<k>)
  EdgeSet cycle;
  double weight = 0.0;
};

/// Four-vertex seed of the weighted heuristic.
struct SeedInfo {
  std::array<Vertex, 4> quad{};
  std::uint64_t label = 0;  // z<label>: 3*(quad rank - 1) + position + 1
  EdgeSet cycle;
  double weight = 0.0;
};

/// A Hamiltonian cycle plus the ring sums that built it.
struct TourResult {
  std::vector<Vertex> tour;  // canonical closed walk, starts at the smallest vertex
  EdgeSet edges;
  double weight = 0.0;
  std::optional<SeedInfo> seed;
  std::vector<TraceStep> steps;
};

}  // namespace ringtsp

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringtsp/cycle.hpp"

namespace ringtsp {

/// Isometric cycles of one ambient graph, in a deterministic order. Indices
/// in reports are 1-based (c1, c2, ...).
struct IsometricCycleSet {
  std::vector<Cycle> cycles;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

/// All C(n,3) triangles of K_n in lexicographic vertex-triple order.
[[nodiscard]] IsometricCycleSet triangles(std::size_t n);
[[nodiscard]] inline IsometricCycleSet triangles(const CompleteInstance& inst) { return triangles(inst.order()); }

/// Vertex triple (increasing) of triangle id t (1-based) in K_n.
[[nodiscard]] std::array<Vertex, 3> triangle_vertices(std::uint64_t t, std::size_t n);
/// Triangle id of {a,b,c} in K_n (any order).
[[nodiscard]] std::uint64_t triangle_id(Vertex a, Vertex b, Vertex c, std::size_t n);

/// Every simple cycle whose arc distances equal the host graph's shortest-path
/// distances, deduplicated by edge set and sorted in canonical edge-set order.
/// Throws DomainError for disconnected graphs.
[[nodiscard]] IsometricCycleSet isometric_cycles(const GeneralGraph& g);

/// All-pairs BFS distances, 0-based row-major n*n; unreachable = SIZE_MAX.
[[nodiscard]] std::vector<std::size_t> bfs_distances(const GeneralGraph& g);

/// Per-edge and per-vertex counts of cycles passing through each element.
struct PassVectors {
  std::vector<std::uint32_t> p_e;  // index e-1
  std::vector<std::uint32_t> p_v;  // index v-1
  friend bool operator==(const PassVectors&, const PassVectors&) = default;
};

[[nodiscard]] PassVectors pass_vectors(std::span<const Cycle> cycles, std::size_t edge_count,
                                       std::size_t vertex_count);
[[nodiscard]] inline PassVectors pass_vectors(const IsometricCycleSet& s) {
  return pass_vectors(s.cycles, s.edge_count, s.vertex_count);
}

/// Quadratic MacLane functional over the non-zero entries of p_e:
/// sum p^2 - 3 sum p + 2 m', m' = number of edges with p > 0.
[[nodiscard]] std::int64_t maclane_f1(const PassVectors& pv);
/// Cubic MacLane functional over all entries: sum p^3 - 3 sum p^2 + 2 sum p.
[[nodiscard]] std::int64_t maclane_f2(const PassVectors& pv);

struct DeletionStep {
  std::optional<std::size_t> removed;  // 1-based index into the original set
  PassVectors pass;
  std::int64_t f2 = 0;
};

/// First entry describes the full set; one further entry per removal.
/// Indices are 1-based and must be distinct.
[[nodiscard]] std::vector<DeletionStep> deletion_trace(const IsometricCycleSet& s,
                                                       std::span<const std::size_t> order);

/// "c3 = {e1,e4,e7} <-> {v1,v2,v7}".
[[nodiscard]] std::string describe_cycle(const Cycle& c, std::size_t index);
/// "<5,5,6,...>".
[[nodiscard]] std::string format_vector(std::span<const std::uint32_t> v);

}  // namespace ringtsp

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ringtsp/edge_set.hpp"
#include "ringtsp/graph.hpp"

namespace ringtsp {

enum class CycleKind { empty, simple_cycle, quasicycle, not_cycle };

[[nodiscard]] const char* to_string(CycleKind kind) noexcept;

struct Classification;

/// An edge set in which every incident vertex has even degree (>= 2).
/// Built only through classify() / Cycle::of().
class Cycle {
 public:
  [[nodiscard]] const EdgeSet& edges() const noexcept { return edges_; }
  /// Incident vertices, increasing.
  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  /// (vertex, degree) for each incident vertex, increasing by vertex.
  [[nodiscard]] const std::vector<std::pair<Vertex, unsigned>>& degree_profile() const noexcept {
    return degrees_;
  }
  [[nodiscard]] bool is_simple() const noexcept { return simple_; }
  [[nodiscard]] std::size_t length() const noexcept { return edges_.size(); }
  [[nodiscard]] bool has_vertex(Vertex v) const noexcept;

  /// Throws DomainError when edges do not form a (quasi)cycle.
  static Cycle of(const EdgeSet& edges, std::span<const VertexPair> endpoints, std::size_t n);
  static Cycle of(const EdgeSet& edges, const CompleteInstance& g) {
    return of(edges, g.endpoints(), g.order());
  }
  static Cycle of(const EdgeSet& edges, const GeneralGraph& g) { return of(edges, g.endpoints(), g.order()); }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }

 private:
  friend Classification classify(const EdgeSet&, std::span<const VertexPair>, std::size_t);

  Cycle() = default;

  EdgeSet edges_;
  std::vector<Vertex> vertices_;
  std::vector<std::pair<Vertex, unsigned>> degrees_;
  bool simple_ = false;
};

struct Classification {
  CycleKind kind = CycleKind::empty;
  std::optional<Cycle> cycle;  // set for simple_cycle and quasicycle
};

/// Total function: empty / simple_cycle / quasicycle / not_cycle.
[[nodiscard]] Classification classify(const EdgeSet& edges, std::span<const VertexPair> endpoints, std::size_t n);
[[nodiscard]] inline Classification classify(const EdgeSet& edges, const CompleteInstance& g) {
  return classify(edges, g.endpoints(), g.order());
}
[[nodiscard]] inline Classification classify(const EdgeSet& edges, const GeneralGraph& g) {
  return classify(edges, g.endpoints(), g.order());
}

/// Additive weight of the member edges.
[[nodiscard]] double cycle_weight(const EdgeSet& edges, const CompleteInstance& inst);
[[nodiscard]] inline double cycle_weight(const Cycle& c, const CompleteInstance& inst) {
  return cycle_weight(c.edges(), inst);
}

/// Rim of a cycle family: left fold of ring_sum. Empty input gives the empty
/// set of the given capacity.
[[nodiscard]] EdgeSet obod(std::span<const EdgeSet> cycles, std::size_t capacity);
[[nodiscard]] EdgeSet obod(std::span<const Cycle> cycles, std::size_t capacity);

/// Cyclic vertex order of a simple cycle, starting at its smallest vertex and
/// heading toward the smaller of that vertex's two neighbours.
/// Throws DomainError if the edge set is not a simple cycle.
[[nodiscard]] std::vector<Vertex> to_vertex_sequence(const EdgeSet& edges, std::span<const VertexPair> endpoints,
                                                     std::size_t n);
[[nodiscard]] inline std::vector<Vertex> to_vertex_sequence(const EdgeSet& edges, const CompleteInstance& g) {
  return to_vertex_sequence(edges, g.endpoints(), g.order());
}

/// Canonical rotation/reflection of a closed vertex walk (same rule as above).
[[nodiscard]] std::vector<Vertex> canonical_rotation(std::span<const Vertex> cyclic);

/// Edge set of a closed vertex walk in K_n.
[[nodiscard]] EdgeSet edges_of_tour(std::span<const Vertex> cyclic, std::size_t n);

/// "(v1,v2,v6,v5,v4,v3)".
[[nodiscard]] std::string format_tour(std::span<const Vertex> tour);
/// "{v1,v2,v3}".
[[nodiscard]] std::string format_vertex_set(std::span<const Vertex> vs);

}  // namespace ringtsp

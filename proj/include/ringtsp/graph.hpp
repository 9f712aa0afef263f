#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringtsp {

/// 1-based vertex label, as used in every report and file.
using Vertex = std::uint32_t;
/// 1-based canonical edge id.
using EdgeId = std::uint32_t;

using VertexPair = std::pair<Vertex, Vertex>;

/// Thrown for out-of-range vertices, ids and other argument errors.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Failure while reading or validating an instance.
class InstanceError : public std::runtime_error {
 public:
  enum class Kind {
    io,             // file missing or unreadable
    parse,          // malformed token stream
    too_small,      // n < 3
    asymmetric,     // w(i,j) != w(j,i)
    negative,       // w(i,j) < 0
    non_finite,     // NaN or infinity
    diagonal,       // w(i,i) != 0
  };

  InstanceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[nodiscard]] const char* to_string(InstanceError::Kind kind) noexcept;

/// Number of edges of K_n.
[[nodiscard]] constexpr std::size_t complete_edge_count(std::size_t n) noexcept {
  return n * (n - 1) / 2;
}

/// Lexicographic edge id: (1,2),(1,3),...,(1,n),(2,3),... -> 1,2,...
/// Symmetric in (i, j).
[[nodiscard]] EdgeId edge_id(Vertex i, Vertex j, std::size_t n);

/// Inverse of edge_id; returns (min, max).
[[nodiscard]] VertexPair edge_endpoints(EdgeId id, std::size_t n);

/// 1-based rank of a strictly increasing k-subset of {1..n} in lexicographic
/// order. Triangles of K_n are numbered this way (c1 = {v1,v2,v3}, ...), as are
/// vertex quadruples.
[[nodiscard]] std::uint64_t combination_rank(std::span<const Vertex> sorted, std::size_t n);

[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Symmetric weighted complete graph. Immutable after construction.
class CompleteInstance {
 public:
  /// Validates and takes a row-major n*n matrix. Throws InstanceError.
  CompleteInstance(std::size_t n, std::vector<double> weights);

  /// Builds from edge weights listed in canonical edge-id order.
  static CompleteInstance from_edge_weights(std::size_t n, std::span<const double> by_edge);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return complete_edge_count(n_); }

  /// Weight between 1-based vertices.
  [[nodiscard]] double weight(Vertex i, Vertex j) const;
  [[nodiscard]] double edge_weight(EdgeId e) const;

  /// Unchecked 0-based access for inner loops.
  [[nodiscard]] double at(std::size_t a, std::size_t b) const noexcept { return w_[a * n_ + b]; }
  [[nodiscard]] const double* row(std::size_t a) const noexcept { return w_.data() + a * n_; }

  [[nodiscard]] std::span<const double> matrix() const noexcept { return w_; }
  [[nodiscard]] std::span<const VertexPair> endpoints() const noexcept { return endpoints_; }
  [[nodiscard]] VertexPair endpoints(EdgeId e) const;

  /// Every weight multiplied by factor (> 0).
  [[nodiscard]] CompleteInstance scaled(double factor) const;
  /// Relabels vertex v as perm[v-1]; perm is a permutation of 1..n.
  [[nodiscard]] CompleteInstance relabeled(std::span<const Vertex> perm) const;
  /// Copy with one edge weight replaced.
  [[nodiscard]] CompleteInstance with_weight(Vertex i, Vertex j, double w) const;

  friend bool operator==(const CompleteInstance& a, const CompleteInstance& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  std::size_t n_;
  std::vector<double> w_;
  std::vector<VertexPair> endpoints_;
};

/// Arbitrary simple graph. Edge ids follow the order of the edge list.
class GeneralGraph {
 public:
  GeneralGraph(std::size_t n, std::vector<VertexPair> edges);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const VertexPair> endpoints() const noexcept { return edges_; }
  [[nodiscard]] VertexPair endpoints(EdgeId e) const;

  /// 0 when absent.
  [[nodiscard]] EdgeId find_edge(Vertex u, Vertex v) const noexcept;
  [[nodiscard]] const std::vector<Vertex>& neighbours(Vertex v) const { return adj_.at(v - 1); }

  /// Complete graph on n vertices with canonical edge numbering.
  static GeneralGraph complete(std::size_t n);

 private:
  std::size_t n_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<EdgeId> id_;  // n*n lookup, 0 = no edge
};

}  // namespace ringtsp

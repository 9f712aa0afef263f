#include "ringtsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ringtsp {

const char* to_string(InstanceError::Kind kind) noexcept {
  switch (kind) {
    case InstanceError::Kind::io: return "io";
    case InstanceError::Kind::parse: return "parse";
    case InstanceError::Kind::too_small: return "too_small";
    case InstanceError::Kind::asymmetric: return "asymmetric";
    case InstanceError::Kind::negative: return "negative";
    case InstanceError::Kind::non_finite: return "non_finite";
    case InstanceError::Kind::diagonal: return "diagonal";
  }
  return "unknown";
}

EdgeId edge_id(Vertex i, Vertex j, std::size_t n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    std::ostringstream msg;
    msg << "edge_id: invalid vertex pair (" << i << "," << j << ") for n=" << n;
    throw DomainError(msg.str());
  }
  const std::size_t a = std::min(i, j);
  const std::size_t b = std::max(i, j);
  return static_cast<EdgeId>((a - 1) * n - a * (a + 1) / 2 + b);
}

VertexPair edge_endpoints(EdgeId id, std::size_t n) {
  if (id < 1 || id > complete_edge_count(n)) {
    std::ostringstream msg;
    msg << "edge_endpoints: id " << id << " out of range for n=" << n;
    throw DomainError(msg.str());
  }
  // Block a holds ids (a-1)n - a(a-1)/2 + 1 ... through n-a more.
  std::size_t first = 1;
  for (std::size_t a = 1; a < n; ++a) {
    const std::size_t len = n - a;
    if (id < first + len) {
      return {static_cast<Vertex>(a), static_cast<Vertex>(a + 1 + (id - first))};
    }
    first += len;
  }
  throw DomainError("edge_endpoints: unreachable");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t combination_rank(std::span<const Vertex> sorted, std::size_t n) {
  const std::size_t k = sorted.size();
  std::uint64_t rank = 0;
  Vertex prev = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    const Vertex v = sorted[pos];
    if (v <= prev || v > n) throw DomainError("combination_rank: not a strictly increasing subset");
    // Count subsets that pick a smaller value at this position.
    for (Vertex u = prev + 1; u < v; ++u) {
      rank += binomial(n - u, k - pos - 1);
    }
    prev = v;
  }
  return rank + 1;
}

namespace {

std::vector<VertexPair> complete_endpoints(std::size_t n) {
  std::vector<VertexPair> out;
  out.reserve(complete_edge_count(n));
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

CompleteInstance::CompleteInstance(std::size_t n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)) {
  if (n_ < 3) {
    throw InstanceError(InstanceError::Kind::too_small,
                        "instance needs at least 3 vertices, got " + std::to_string(n_));
  }
  if (w_.size() != n_ * n_) {
    throw InstanceError(InstanceError::Kind::parse, "weight matrix has wrong size");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double w = w_[i * n_ + j];
      const auto where = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (!std::isfinite(w)) throw InstanceError(InstanceError::Kind::non_finite, "non-finite weight" + where);
      if (i == j && w != 0.0) throw InstanceError(InstanceError::Kind::diagonal, "non-zero diagonal" + where);
      if (w < 0.0) throw InstanceError(InstanceError::Kind::negative, "negative weight" + where);
      if (w != w_[j * n_ + i]) throw InstanceError(InstanceError::Kind::asymmetric, "asymmetric weight" + where);
    }
  }
  endpoints_ = complete_endpoints(n_);
}

CompleteInstance CompleteInstance::from_edge_weights(std::size_t n, std::span<const double> by_edge) {
  if (by_edge.size() != complete_edge_count(n)) {
    throw InstanceError(InstanceError::Kind::parse, "edge weight list has wrong length");
  }
  std::vector<double> w(n * n, 0.0);
  std::size_t e = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++e) {
      w[a * n + b] = by_edge[e];
      w[b * n + a] = by_edge[e];
    }
  }
  return CompleteInstance(n, std::move(w));
}

double CompleteInstance::weight(Vertex i, Vertex j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("weight: vertex out of range");
  return w_[(i - 1) * n_ + (j - 1)];
}

double CompleteInstance::edge_weight(EdgeId e) const {
  const auto [a, b] = endpoints(e);
  return at(a - 1, b - 1);
}

VertexPair CompleteInstance::endpoints(EdgeId e) const {
  if (e < 1 || e > endpoints_.size()) throw DomainError("edge id " + std::to_string(e) + " out of range");
  return endpoints_[e - 1];
}

CompleteInstance CompleteInstance::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<double> w = w_;
  for (double& x : w) x *= factor;
  return CompleteInstance(n_, std::move(w));
}

CompleteInstance CompleteInstance::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw DomainError("relabel: permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex v : perm) {
    if (v < 1 || v > n_ || seen[v - 1]) throw DomainError("relabel: not a permutation");
    seen[v - 1] = true;
  }
  std::vector<double> w(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      w[(perm[i] - 1) * n_ + (perm[j] - 1)] = w_[i * n_ + j];
    }
  }
  return CompleteInstance(n_, std::move(w));
}

CompleteInstance CompleteInstance::with_weight(Vertex i, Vertex j, double weight) const {
  (void)edge_id(i, j, n_);
  std::vector<double> w = w_;
  w[(i - 1) * n_ + (j - 1)] = weight;
  w[(j - 1) * n_ + (i - 1)] = weight;
  return CompleteInstance(n_, std::move(w));
}

GeneralGraph::GeneralGraph(std::size_t n, std::vector<VertexPair> edges)
    : n_(n), edges_(std::move(edges)), adj_(n), id_(n * n, 0) {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [u, v] = edges_[k];
    if (u < 1 || v < 1 || u > n_ || v > n_) throw DomainError("graph edge has vertex out of range");
    if (u == v) throw DomainError("graph edge is a loop at v" + std::to_string(u));
    if (id_[(u - 1) * n_ + (v - 1)] != 0) {
      throw DomainError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    const auto id = static_cast<EdgeId>(k + 1);
    id_[(u - 1) * n_ + (v - 1)] = id;
    id_[(v - 1) * n_ + (u - 1)] = id;
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

VertexPair GeneralGraph::endpoints(EdgeId e) const {
  if (e < 1 || e > edges_.size()) throw DomainError("edge id " + std::to_string(e) + " out of range");
  return edges_[e - 1];
}

EdgeId GeneralGraph::find_edge(Vertex u, Vertex v) const noexcept {
  if (u < 1 || v < 1 || u > n_ || v > n_) return 0;
  return id_[(u - 1) * n_ + (v - 1)];
}

GeneralGraph GeneralGraph::complete(std::size_t n) { return GeneralGraph(n, complete_endpoints(n)); }

}  // namespace ringtsp

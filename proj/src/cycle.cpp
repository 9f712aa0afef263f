#include "ringtsp/cycle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace ringtsp {

const char* to_string(CycleKind kind) noexcept {
  switch (kind) {
    case CycleKind::empty: return "empty";
    case CycleKind::simple_cycle: return "simple_cycle";
    case CycleKind::quasicycle: return "quasicycle";
    case CycleKind::not_cycle: return "not_cycle";
  }
  return "unknown";
}

bool Cycle::has_vertex(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Classification classify(const EdgeSet& edges, std::span<const VertexPair> endpoints, std::size_t n) {
  if (edges.capacity() != endpoints.size()) {
    throw DomainError("classify: edge set capacity does not match the graph");
  }
  Classification out;
  if (edges.empty()) return out;

  std::vector<unsigned> degree(n + 1, 0);
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  edges.for_each([&](EdgeId e) {
    const auto [u, v] = endpoints[e - 1];
    ++degree[u];
    ++degree[v];
    parent[find_root(parent, u)] = find_root(parent, v);
  });

  Cycle c;
  bool all_two = true;
  std::size_t root = 0;
  bool connected = true;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] % 2 != 0) {
      out.kind = CycleKind::not_cycle;
      return out;
    }
    all_two = all_two && degree[v] == 2;
    const std::size_t r = find_root(parent, v);
    if (root == 0) root = r;
    connected = connected && r == root;
    c.vertices_.push_back(v);
    c.degrees_.emplace_back(v, degree[v]);
  }
  c.edges_ = edges;
  c.simple_ = all_two && connected;
  out.kind = c.simple_ ? CycleKind::simple_cycle : CycleKind::quasicycle;
  out.cycle = std::move(c);
  return out;
}

Cycle Cycle::of(const EdgeSet& edges, std::span<const VertexPair> endpoints, std::size_t n) {
  auto cls = classify(edges, endpoints, n);
  if (!cls.cycle) {
    throw DomainError("edge set " + to_string(edges) + " is " + to_string(cls.kind) + ", not a cycle");
  }
  return std::move(*cls.cycle);
}

double cycle_weight(const EdgeSet& edges, const CompleteInstance& inst) {
  if (edges.capacity() != inst.edge_count()) throw DomainError("cycle_weight: edge set over a different graph");
  double w = 0.0;
  edges.for_each([&](EdgeId e) {
    const auto [a, b] = inst.endpoints()[e - 1];
    w += inst.at(a - 1, b - 1);
  });
  return w;
}

EdgeSet obod(std::span<const EdgeSet> cycles, std::size_t capacity) {
  EdgeSet rim(capacity);
  for (const auto& c : cycles) rim ^= c;
  return rim;
}

EdgeSet obod(std::span<const Cycle> cycles, std::size_t capacity) {
  EdgeSet rim(capacity);
  for (const auto& c : cycles) rim ^= c.edges();
  return rim;
}

std::vector<Vertex> to_vertex_sequence(const EdgeSet& edges, std::span<const VertexPair> endpoints, std::size_t n) {
  auto cls = classify(edges, endpoints, n);
  if (cls.kind != CycleKind::simple_cycle) {
    throw DomainError("to_vertex_sequence: " + to_string(edges) + " is not a simple cycle");
  }
  std::vector<std::array<Vertex, 2>> nbr(n + 1, {0, 0});
  edges.for_each([&](EdgeId e) {
    const auto [u, v] = endpoints[e - 1];
    nbr[u][nbr[u][0] ? 1 : 0] = v;
    nbr[v][nbr[v][0] ? 1 : 0] = u;
  });
  const Vertex start = cls.cycle->vertices().front();
  std::vector<Vertex> seq{start};
  Vertex prev = start;
  Vertex cur = std::min(nbr[start][0], nbr[start][1]);
  while (cur != start) {
    seq.push_back(cur);
    const Vertex next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
  }
  return seq;
}

std::vector<Vertex> canonical_rotation(std::span<const Vertex> cyclic) {
  const std::size_t L = cyclic.size();
  if (L == 0) return {};
  const auto it = std::min_element(cyclic.begin(), cyclic.end());
  const std::size_t s = static_cast<std::size_t>(it - cyclic.begin());
  const bool forward = L < 3 || cyclic[(s + 1) % L] < cyclic[(s + L - 1) % L];
  std::vector<Vertex> out(L);
  for (std::size_t k = 0; k < L; ++k) {
    out[k] = forward ? cyclic[(s + k) % L] : cyclic[(s + L - k) % L];
  }
  return out;
}

EdgeSet edges_of_tour(std::span<const Vertex> cyclic, std::size_t n) {
  EdgeSet s(complete_edge_count(n));
  for (std::size_t k = 0; k < cyclic.size(); ++k) {
    s.insert(edge_id(cyclic[k], cyclic[(k + 1) % cyclic.size()], n));
  }
  return s;
}

std::string format_tour(std::span<const Vertex> tour) {
  std::ostringstream o;
  o << '(';
  for (std::size_t k = 0; k < tour.size(); ++k) o << (k ? "," : "") << 'v' << tour[k];
  o << ')';
  return o.str();
}

std::string format_vertex_set(std::span<const Vertex> vs) {
  std::ostringstream o;
  o << '{';
  for (std::size_t k = 0; k < vs.size(); ++k) o << (k ? "," : "") << 'v' << vs[k];
  o << '}';
  return o.str();
}

}  // namespace ringtsp

#include "ringtsp/isometric.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace ringtsp {

IsometricCycleSet triangles(std::size_t n) {
  if (n < 3) throw DomainError("triangles: n must be at least 3");
  IsometricCycleSet out;
  out.vertex_count = n;
  out.edge_count = complete_edge_count(n);
  const auto ends = GeneralGraph::complete(n);
  out.cycles.reserve(binomial(n, 3));
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = b + 1; c <= n; ++c) {
        EdgeSet s(out.edge_count, {edge_id(a, b, n), edge_id(a, c, n), edge_id(b, c, n)});
        out.cycles.push_back(Cycle::of(s, ends));
      }
    }
  }
  return out;
}

std::array<Vertex, 3> triangle_vertices(std::uint64_t t, std::size_t n) {
  if (t < 1 || t > binomial(n, 3)) throw DomainError("triangle id c" + std::to_string(t) + " out of range");
  // Unrank: walk the lexicographic blocks.
  std::array<Vertex, 3> out{};
  std::uint64_t rest = t - 1;
  Vertex next = 1;
  for (std::size_t pos = 0; pos < 3; ++pos) {
    for (Vertex v = next;; ++v) {
      const std::uint64_t block = binomial(n - v, 2 - pos);
      if (rest < block) {
        out[pos] = v;
        next = v + 1;
        break;
      }
      rest -= block;
    }
  }
  return out;
}

std::uint64_t triangle_id(Vertex a, Vertex b, Vertex c, std::size_t n) {
  std::array<Vertex, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return combination_rank(v, n);
}

std::vector<std::size_t> bfs_distances(const GeneralGraph& g) {
  const std::size_t n = g.order();
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> d(n * n, inf);
  for (Vertex s = 1; s <= n; ++s) {
    std::queue<Vertex> q;
    d[(s - 1) * n + (s - 1)] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbours(u)) {
        auto& dw = d[(s - 1) * n + (w - 1)];
        if (dw == inf) {
          dw = d[(s - 1) * n + (u - 1)] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

namespace {

struct CycleSearch {
  const GeneralGraph& g;
  const std::vector<std::size_t>& dist;
  std::size_t n;
  std::size_t max_len;
  std::vector<Vertex> path;
  std::vector<bool> on_path;
  std::vector<EdgeSet> found;

  bool isometric(const std::vector<Vertex>& cyc) const {
    const std::size_t L = cyc.size();
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = i + 1; j < L; ++j) {
        const std::size_t arc = std::min(j - i, L - (j - i));
        if (dist[(cyc[i] - 1) * n + (cyc[j] - 1)] != arc) return false;
      }
    }
    return true;
  }

  // Length bounds implied by the path so far: each pair at path distance p
  // either needs L >= 2p (shortest along the path) or forces L = p + d.
  void extend(Vertex start, std::size_t min_len, std::size_t forced_len) {
    const Vertex cur = path.back();
    for (Vertex w : g.neighbours(cur)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (isometric(path)) {
          EdgeSet s(g.edge_count());
          for (std::size_t k = 0; k < path.size(); ++k) {
            s.insert(g.find_edge(path[k], path[(k + 1) % path.size()]));
          }
          found.push_back(std::move(s));
        }
        continue;
      }
      if (w <= start || on_path[w] || path.size() >= max_len) continue;
      const std::size_t k = path.size();
      std::size_t lo = std::max(min_len, k + 1);
      std::size_t forced = forced_len;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const std::size_t p = k - i;
        const std::size_t d = dist[(path[i] - 1) * n + (w - 1)];
        if (d == p) {
          lo = std::max(lo, 2 * p);
        } else {
          const std::size_t need = p + d;
          ok = forced == 0 || forced == need;
          forced = need;
        }
      }
      if (!ok || lo > max_len || (forced != 0 && forced < lo)) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(start, lo, forced);
      path.pop_back();
      on_path[w] = false;
    }
  }
};

}  // namespace

IsometricCycleSet isometric_cycles(const GeneralGraph& g) {
  const std::size_t n = g.order();
  const auto dist = bfs_distances(g);
  std::size_t diameter = 0;
  for (std::size_t x : dist) {
    if (x == std::numeric_limits<std::size_t>::max()) throw DomainError("isometric_cycles: graph is disconnected");
    diameter = std::max(diameter, x);
  }
  CycleSearch search{g, dist, n, std::min(n, 2 * diameter + 1), {}, std::vector<bool>(n + 1, false), {}};
  for (Vertex s = 1; s <= n; ++s) {
    search.path = {s};
    search.on_path[s] = true;
    search.extend(s, 3, 0);
    search.on_path[s] = false;
  }
  auto& found = search.found;
  std::sort(found.begin(), found.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.canonical_compare(b) < 0; });
  found.erase(std::unique(found.begin(), found.end()), found.end());

  IsometricCycleSet out;
  out.vertex_count = n;
  out.edge_count = g.edge_count();
  for (const auto& s : found) out.cycles.push_back(Cycle::of(s, g));
  return out;
}

PassVectors pass_vectors(std::span<const Cycle> cycles, std::size_t edge_count, std::size_t vertex_count) {
  PassVectors pv{std::vector<std::uint32_t>(edge_count, 0), std::vector<std::uint32_t>(vertex_count, 0)};
  for (const auto& c : cycles) {
    if (c.edges().capacity() != edge_count) throw DomainError("pass_vectors: cycle over a different graph");
    c.edges().for_each([&](EdgeId e) { ++pv.p_e[e - 1]; });
    for (Vertex v : c.vertices()) ++pv.p_v.at(v - 1);
  }
  return pv;
}

std::int64_t maclane_f1(const PassVectors& pv) {
  std::int64_t sq = 0, lin = 0, m = 0;
  for (std::int64_t p : pv.p_e) {
    if (p == 0) continue;
    sq += p * p;
    lin += p;
    ++m;
  }
  return sq - 3 * lin + 2 * m;
}

std::int64_t maclane_f2(const PassVectors& pv) {
  std::int64_t cube = 0, sq = 0, lin = 0;
  for (std::int64_t p : pv.p_e) {
    cube += p * p * p;
    sq += p * p;
    lin += p;
  }
  return cube - 3 * sq + 2 * lin;
}

std::vector<DeletionStep> deletion_trace(const IsometricCycleSet& s, std::span<const std::size_t> order) {
  std::vector<bool> removed(s.cycles.size(), false);
  for (std::size_t idx : order) {
    if (idx < 1 || idx > s.cycles.size()) throw DomainError("deletion_trace: cycle index c" + std::to_string(idx) + " out of range");
    if (removed[idx - 1]) throw DomainError("deletion_trace: cycle c" + std::to_string(idx) + " removed twice");
    removed[idx - 1] = true;
  }

  std::vector<DeletionStep> trace;
  PassVectors pv = pass_vectors(s);
  trace.push_back({std::nullopt, pv, maclane_f2(pv)});
  for (std::size_t idx : order) {
    const Cycle& c = s.cycles[idx - 1];
    c.edges().for_each([&](EdgeId e) { --pv.p_e[e - 1]; });
    for (Vertex v : c.vertices()) --pv.p_v[v - 1];
    trace.push_back({idx, pv, maclane_f2(pv)});
  }
  return trace;
}

std::string describe_cycle(const Cycle& c, std::size_t index) {
  std::ostringstream o;
  o << 'c' << index << " = " << to_string(c.edges()) << " <-> " << format_vertex_set(c.vertices());
  return o.str();
}

std::string format_vector(std::span<const std::uint32_t> v) {
  std::ostringstream o;
  o << '<';
  for (std::size_t k = 0; k < v.size(); ++k) o << (k ? "," : "") << v[k];
  o << '>';
  return o.str();
}

}  // namespace ringtsp

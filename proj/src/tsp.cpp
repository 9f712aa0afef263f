#include "ringtsp/tsp.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "ringtsp/hamiltonian.hpp"

namespace ringtsp {

Beam Beam::width(std::size_t b) {
  if (b == 0) throw DomainError("beam width must be positive");
  return Beam(b);
}

Beam Beam::parse(std::string_view text) {
  if (text == "all-ties") return all_ties();
  std::size_t b = 0;
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, b);
  if (ec != std::errc{} || p != end || b == 0) {
    throw DomainError("beam must be 'all-ties' or a positive integer, got '" + std::string(text) + "'");
  }
  return Beam(b);
}

std::string Beam::to_string() const { return is_all_ties() ? "all-ties" : std::to_string(width_); }

QuadCycleTriple quad_cycles(const CompleteInstance& inst, std::array<Vertex, 4> quad) {
  const std::size_t n = inst.order();
  std::sort(quad.begin(), quad.end());
  for (std::size_t k = 0; k < 4; ++k) {
    if (quad[k] < 1 || quad[k] > n) throw DomainError("quad vertex out of range");
    if (k && quad[k] == quad[k - 1]) throw DomainError("quad vertices must be distinct");
  }
  const auto [a, b, c, d] = quad;
  const std::uint64_t base = 3 * (combination_rank(quad, n) - 1);
  QuadCycleTriple out;
  out.quad = quad;
  const std::array<std::array<Vertex, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto& q = out.cycles[k];
    q.order = orders[k];
    q.edges = edges_of_tour(q.order, n);
    q.weight = cycle_weight(q.edges, inst);
    q.label = base + k + 1;
  }
  return out;
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bool canonical_less(const Candidate& x, const Candidate& y) {
  if (x.weight != y.weight) return x.weight < y.weight;
  return x.edges.canonical_compare(y.edges) < 0;
}

// Merge duplicate edge sets, order by (weight, edge set), apply the beam.
std::vector<Candidate> select(std::vector<Candidate> pool, const Beam& beam) {
  std::sort(pool.begin(), pool.end(),
            [](const Candidate& x, const Candidate& y) { return x.edges.canonical_compare(y.edges) < 0; });
  std::vector<Candidate> merged;
  for (auto& c : pool) {
    if (!merged.empty() && merged.back().edges == c.edges) {
      auto& o = merged.back().origins;
      o.insert(o.end(), c.origins.begin(), c.origins.end());
    } else {
      merged.push_back(std::move(c));
    }
  }
  for (auto& c : merged) {
    std::sort(c.origins.begin(), c.origins.end());
    c.origins.erase(std::unique(c.origins.begin(), c.origins.end()), c.origins.end());
  }
  std::sort(merged.begin(), merged.end(), canonical_less);
  if (merged.empty()) return merged;
  const double cutoff = beam.is_all_ties() ? merged.front().weight
                        : merged.size() > beam.width() ? merged[beam.width() - 1].weight
                                                       : merged.back().weight;
  std::size_t keep = 0;
  while (keep < merged.size() && merged[keep].weight <= cutoff) ++keep;
  merged.resize(keep);
  return merged;
}

void guard(std::size_t size, std::size_t limit, std::size_t length) {
  if (size > limit) {
    throw FrontierOverflow("frontier of length " + std::to_string(length) + " exceeds " +
                           std::to_string(limit) + " candidates");
  }
}

int team_size(const SolveOptions& opt) { return opt.threads > 0 ? opt.threads : omp_get_max_threads(); }

// Per-thread hit buffer with a running admission threshold. all-ties keeps
// only hits equal to the running minimum; width mode keeps hits no worse than
// the cap-th smallest seen so far (cap chosen so that at least B distinct
// cycles survive).
template <class Hit>
struct HitBuffer {
  std::vector<Hit> hits;
  double threshold = inf;

  void admit(const Hit& h, bool all_ties, std::size_t cap) {
    if (all_ties) {
      if (h.w < threshold) {
        hits.clear();
        threshold = h.w;
      }
      hits.push_back(h);
      return;
    }
    hits.push_back(h);
    if (hits.size() > 2 * cap + 64) {
      std::nth_element(hits.begin(), hits.begin() + (cap - 1), hits.end(),
                       [](const Hit& x, const Hit& y) { return x.w < y.w; });
      threshold = hits[cap - 1].w;
      std::erase_if(hits, [&](const Hit& x) { return x.w > threshold; });
    }
  }
};

template <class Hit>
std::vector<Hit> gather(std::vector<HitBuffer<Hit>>& buffers, bool all_ties, std::size_t cap) {
  std::vector<Hit> all;
  for (auto& b : buffers) all.insert(all.end(), b.hits.begin(), b.hits.end());
  if (all.empty()) return all;
  double cutoff;
  if (all_ties) {
    cutoff = std::min_element(all.begin(), all.end(), [](const Hit& x, const Hit& y) { return x.w < y.w; })->w;
  } else if (all.size() > cap) {
    std::nth_element(all.begin(), all.begin() + (cap - 1), all.end(),
                     [](const Hit& x, const Hit& y) { return x.w < y.w; });
    cutoff = all[cap - 1].w;
  } else {
    return all;
  }
  std::erase_if(all, [&](const Hit& x) { return x.w > cutoff; });
  return all;
}

struct SeedHit {
  double w;
  Vertex a, b, c, d;
  std::uint8_t pos;
};

struct GrowHit {
  double w;
  std::uint32_t parent;
  std::uint32_t k;  // insert after position k
  Vertex x;         // 0-based new vertex
};

}  // namespace

Frontier seed_frontier(const CompleteInstance& inst, const SolveOptions& opt) {
  const std::size_t n = inst.order();
  if (n < 4) throw DomainError("seed_frontier: n must be at least 4");
  const bool all_ties = opt.beam.is_all_ties();
  const std::size_t cap = all_ties ? 0 : opt.beam.width();
  const int nt = team_size(opt);
  std::vector<HitBuffer<SeedHit>> buffers(static_cast<std::size_t>(nt));
  std::atomic<bool> overflow{false};

#pragma omp parallel num_threads(nt)
  {
    auto& buf = buffers[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<double> tmp(n);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t a = 0; a < n; ++a) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      const double* ra = inst.row(a);
      for (std::size_t b = a + 1; b < n; ++b) {
        const double* rb = inst.row(b);
        const double ab = ra[b];
        for (std::size_t c = b + 1; c < n; ++c) {
          const double* rc = inst.row(c);
          const double ac = ra[c], bc = rb[c];
          double rowmin = inf;
          // a-b-c-d, a-b-d-c, a-c-b-d
          for (std::size_t d = c + 1; d < n; ++d) {
            const double w1 = ab + bc + rc[d] + ra[d];
            const double w2 = ab + rb[d] + rc[d] + ac;
            const double w3 = ac + bc + rb[d] + ra[d];
            const double m = std::min(w1, std::min(w2, w3));
            tmp[d] = m;
            rowmin = std::min(rowmin, m);
          }
          if (rowmin > buf.threshold) continue;
          for (std::size_t d = c + 1; d < n; ++d) {
            const double m = tmp[d];
            if (m > buf.threshold) continue;
            const double w[3] = {ab + bc + rc[d] + ra[d], ab + rb[d] + rc[d] + ac, ac + bc + rb[d] + ra[d]};
            for (std::uint8_t p = 0; p < 3; ++p) {
              if (w[p] == m) {
                buf.admit({m, Vertex(a + 1), Vertex(b + 1), Vertex(c + 1), Vertex(d + 1), p}, all_ties, cap);
              }
            }
          }
          if (buf.hits.size() > opt.max_frontier) overflow.store(true, std::memory_order_relaxed);
        }
      }
    }
  }
  if (overflow) guard(opt.max_frontier + 1, opt.max_frontier, 4);

  const auto hits = gather(buffers, all_ties, cap);
  std::vector<Candidate> pool;
  pool.reserve(hits.size());
  for (const auto& h : hits) {
    const auto triple = quad_cycles(inst, {h.a, h.b, h.c, h.d});
    const auto& q = triple.cycles[h.pos];
    pool.push_back({canonical_rotation(q.order), q.edges, q.weight, q.label, {}});
  }
  Frontier f{4, opt.beam, select(std::move(pool), opt.beam)};
  guard(f.candidates.size(), opt.max_frontier, 4);
  return f;
}

Frontier extend_frontier(const CompleteInstance& inst, const Frontier& f, const SolveOptions& opt) {
  const std::size_t n = inst.order();
  const std::size_t L = f.length;
  if (L >= n) throw DomainError("extend_frontier: frontier is already Hamiltonian");
  if (f.candidates.empty()) throw DomainError("extend_frontier: empty frontier");
  const std::size_t F = f.candidates.size();
  const bool all_ties = opt.beam.is_all_ties();
  // An (L+1)-cycle is reachable from at most L+1 parents, so this many hits
  // always contain B distinct cycles.
  const std::size_t cap = all_ties ? 0 : opt.beam.width() * (L + 1);
  const std::size_t hit_limit = opt.max_frontier * (L + 1);

  std::vector<std::uint8_t> on(F * n, 0);
  for (std::size_t i = 0; i < F; ++i) {
    for (Vertex v : f.candidates[i].order) on[i * n + v - 1] = 1;
  }

  const int nt = team_size(opt);
  std::vector<HitBuffer<GrowHit>> buffers(static_cast<std::size_t>(nt));
  std::atomic<bool> overflow{false};
  const std::size_t tasks = F * L;

#pragma omp parallel num_threads(nt)
  {
    auto& buf = buffers[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<double> tmp(n);
#pragma omp for schedule(dynamic, 16)
    for (std::size_t t = 0; t < tasks; ++t) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      const std::size_t i = t / L, k = t % L;
      const auto& cand = f.candidates[i];
      const std::size_t a = cand.order[k] - 1, b = cand.order[(k + 1) % L] - 1;
      const double base = cand.weight - inst.at(a, b);
      const double* ra = inst.row(a);
      const double* rb = inst.row(b);
      const std::uint8_t* in = on.data() + i * n;
      double rowmin = inf;
      for (std::size_t x = 0; x < n; ++x) {
        const double w = in[x] ? inf : base + ra[x] + rb[x];
        tmp[x] = w;
        rowmin = std::min(rowmin, w);
      }
      if (rowmin > buf.threshold) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (tmp[x] <= buf.threshold && !in[x]) {
          buf.admit({tmp[x], std::uint32_t(i), std::uint32_t(k), Vertex(x)}, all_ties, cap);
        }
      }
      if (buf.hits.size() > hit_limit) overflow.store(true, std::memory_order_relaxed);
    }
  }
  if (overflow) guard(opt.max_frontier + 1, opt.max_frontier, L + 1);

  const auto hits = gather(buffers, all_ties, cap);
  // Dedup by canonical walk before building edge sets.
  std::map<std::vector<Vertex>, Candidate> by_walk;
  std::vector<Vertex> walk(L + 1);
  for (const auto& h : hits) {
    const auto& order = f.candidates[h.parent].order;
    std::copy(order.begin(), order.begin() + h.k + 1, walk.begin());
    walk[h.k + 1] = h.x + 1;
    std::copy(order.begin() + h.k + 1, order.end(), walk.begin() + h.k + 2);
    auto canon = canonical_rotation(walk);
    const Origin o{h.parent, triangle_id(order[h.k], order[(h.k + 1) % L], h.x + 1, n)};
    auto it = by_walk.find(canon);
    if (it == by_walk.end()) {
      Candidate c;
      c.edges = edges_of_tour(canon, n);
      c.weight = cycle_weight(c.edges, inst);
      c.order = canon;
      c.origins.push_back(o);
      by_walk.emplace(std::move(canon), std::move(c));
    } else {
      it->second.origins.push_back(o);
    }
  }
  std::vector<Candidate> pool;
  pool.reserve(by_walk.size());
  for (auto& [walk_key, c] : by_walk) pool.push_back(std::move(c));
  Frontier out{L + 1, opt.beam, select(std::move(pool), opt.beam)};
  guard(out.candidates.size(), opt.max_frontier, L + 1);
  return out;
}

namespace {

TourResult triangle_tour(const CompleteInstance& inst) {
  TourResult t;
  t.tour = {1, 2, 3};
  t.edges = edges_of_tour(t.tour, 3);
  t.weight = cycle_weight(t.edges, inst);
  return t;
}

// Follow first origins from the best Hamiltonian cycle back to its seed.
TourResult lineage(const std::vector<Frontier>& frontiers) {
  TourResult t;
  const auto& best = frontiers.back().candidates.front();
  t.tour = best.order;
  t.edges = best.edges;
  t.weight = best.weight;
  std::size_t idx = 0;
  for (std::size_t level = frontiers.size() - 1; level > 0; --level) {
    const auto& c = frontiers[level].candidates[idx];
    t.steps.push_back({c.origins.front().triangle, c.edges, c.weight});
    idx = c.origins.front().parent;
  }
  std::reverse(t.steps.begin(), t.steps.end());
  const auto& s = frontiers.front().candidates[idx];
  SeedInfo seed;
  std::copy(s.order.begin(), s.order.end(), seed.quad.begin());
  std::sort(seed.quad.begin(), seed.quad.end());
  seed.label = s.label;
  seed.cycle = s.edges;
  seed.weight = s.weight;
  t.seed = std::move(seed);
  return t;
}

}  // namespace

SolveResult solve(const CompleteInstance& inst, const SolveOptions& opt) {
  const std::size_t n = inst.order();
  SolveResult r;
  if (n == 3) {
    r.tour = triangle_tour(inst);
    return r;
  }
  r.frontiers.push_back(seed_frontier(inst, opt));
  while (r.frontiers.back().length < n) r.frontiers.push_back(extend_frontier(inst, r.frontiers.back(), opt));
  r.tour = lineage(r.frontiers);
  return r;
}

namespace reference {

Frontier seed_frontier(const CompleteInstance& inst, const Beam& beam, const IsometricCycleSet& tris) {
  const std::size_t n = inst.order();
  if (n < 4) throw DomainError("seed_frontier: n must be at least 4");
  // Every 4-cycle is the ring sum of two touching triangles (split along
  // either diagonal). Group the sums by vertex quadruple.
  std::map<std::array<Vertex, 4>, std::vector<Candidate>> by_quad;
  const auto& T = tris.cycles;
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      if (!is_touching(T[i], T[j])) continue;
      const auto cls = classify(ring_sum(T[i].edges(), T[j].edges()), inst);
      if (cls.kind != CycleKind::simple_cycle || cls.cycle->vertices().size() != 4) {
        throw std::logic_error("touching triangles did not sum to a 4-cycle");
      }
      std::array<Vertex, 4> quad{};
      std::copy(cls.cycle->vertices().begin(), cls.cycle->vertices().end(), quad.begin());
      Candidate c;
      c.edges = cls.cycle->edges();
      c.order = to_vertex_sequence(c.edges, inst);
      c.weight = cycle_weight(c.edges, inst);
      by_quad[quad].push_back(std::move(c));
    }
  }
  std::vector<Candidate> pool;
  for (auto& [quad, cands] : by_quad) {
    auto best = select(std::move(cands), Beam::all_ties());
    const auto triple = quad_cycles(inst, quad);
    for (auto& c : best) {
      for (const auto& q : triple.cycles) {
        if (q.edges == c.edges) c.label = q.label;
      }
      pool.push_back(std::move(c));
    }
  }
  return {4, beam, select(std::move(pool), beam)};
}

Frontier extend_frontier(const CompleteInstance& inst, const Frontier& f, const IsometricCycleSet& tris) {
  const std::size_t L = f.length;
  if (L >= inst.order()) throw DomainError("extend_frontier: frontier is already Hamiltonian");
  std::vector<Candidate> pool;
  for (std::size_t i = 0; i < f.candidates.size(); ++i) {
    const Cycle z = Cycle::of(f.candidates[i].edges, inst);
    for (std::size_t t = 0; t < tris.cycles.size(); ++t) {
      if (!is_touching(z, tris.cycles[t])) continue;
      const auto cls = classify(ring_sum(z.edges(), tris.cycles[t].edges()), inst);
      if (cls.kind != CycleKind::simple_cycle || cls.cycle->vertices().size() != L + 1) {
        throw std::logic_error("touching ring sum did not grow the cycle");
      }
      Candidate c;
      c.edges = cls.cycle->edges();
      c.order = to_vertex_sequence(c.edges, inst);
      c.weight = cycle_weight(c.edges, inst);
      c.origins.push_back({i, t + 1});
      pool.push_back(std::move(c));
    }
  }
  return {L + 1, f.beam, select(std::move(pool), f.beam)};
}

SolveResult solve(const CompleteInstance& inst, const Beam& beam) {
  const std::size_t n = inst.order();
  SolveResult r;
  if (n == 3) {
    r.tour = triangle_tour(inst);
    return r;
  }
  const auto tris = triangles(inst);
  r.frontiers.push_back(seed_frontier(inst, beam, tris));
  while (r.frontiers.back().length < n) r.frontiers.push_back(extend_frontier(inst, r.frontiers.back(), tris));
  r.tour = lineage(r.frontiers);
  return r;
}

}  // namespace reference

OpCounts op_count_estimate(std::size_t n) {
  if (n < 3) throw DomainError("op_count_estimate: n must be at least 3");
  OpCounts c;
  c.triangles = binomial(n, 3);
  c.four_cycles = 3 * binomial(n, 4);
  const auto m = static_cast<std::int64_t>(n);
  c.total_times_24 = 7 * m * m * m * m - 16 * m * m * m;
  c.total = static_cast<double>(c.total_times_24) / 24.0;
  return c;
}

std::string format_frontier(const Frontier& f, const Frontier* previous) {
  std::ostringstream o;
  o << "length " << f.length << " (beam " << f.beam.to_string() << "): " << f.candidates.size() << " cycle"
    << (f.candidates.size() == 1 ? "" : "s") << '\n';
  for (std::size_t i = 0; i < f.candidates.size(); ++i) {
    const auto& c = f.candidates[i];
    o << "  ";
    if (c.label) o << 'z' << c.label << ' ';
    o << to_string(c.edges) << " = " << c.weight;
    if (!c.origins.empty()) {
      o << " <- ";
      for (std::size_t k = 0; k < c.origins.size(); ++k) {
        const auto& og = c.origins[k];
        if (k) o << ", ";
        if (previous && og.parent < previous->candidates.size() && previous->candidates[og.parent].label) {
          o << 'z' << previous->candidates[og.parent].label;
        } else {
          o << '#' << og.parent + 1;
        }
        o << " ⊕ c" << og.triangle;
      }
    }
    o << '\n';
  }
  return o.str();
}

}  // namespace ringtsp

#include "ringtsp/hamiltonian.hpp"

#include <algorithm>
#include <sstream>

#include "ringtsp/isometric.hpp"

namespace ringtsp {

bool is_touching(const Cycle& z, const Cycle& c) {
  if (z.edges().intersection_size(c.edges()) != 1) return false;
  std::size_t fresh = 0;
  for (Vertex v : c.vertices()) fresh += z.has_vertex(v) ? 0 : 1;
  return fresh == 1;
}

namespace {

Cycle triangle_cycle(std::uint64_t t, const CompleteInstance& inst) {
  const std::size_t n = inst.order();
  const auto [a, b, c] = triangle_vertices(t, n);
  EdgeSet s(inst.edge_count(), {edge_id(a, b, n), edge_id(a, c, n), edge_id(b, c, n)});
  return Cycle::of(s, inst);
}

// One step of the construction; the invariant is re-checked on every sum.
Cycle add_triangle(const Cycle& z, const Cycle& tri, std::uint64_t t, const CompleteInstance& inst,
                   TourResult& out) {
  if (!is_touching(z, tri)) {
    throw DomainError("triangle c" + std::to_string(t) + " is not touching " + to_string(z.edges()));
  }
  auto cls = classify(ring_sum(z.edges(), tri.edges()), inst);
  if (cls.kind != CycleKind::simple_cycle || cls.cycle->vertices().size() != z.vertices().size() + 1) {
    throw DomainError("ring sum with c" + std::to_string(t) + " did not grow a simple cycle");
  }
  out.steps.push_back({t, cls.cycle->edges(), cycle_weight(*cls.cycle, inst)});
  return std::move(*cls.cycle);
}

void finish(const Cycle& z, const CompleteInstance& inst, TourResult& out) {
  out.edges = z.edges();
  out.weight = cycle_weight(z, inst);
  out.tour = to_vertex_sequence(z.edges(), inst);
}

}  // namespace

TourResult build_hamiltonian(const CompleteInstance& inst, std::optional<std::uint64_t> start_triangle) {
  const std::size_t n = inst.order();
  const std::uint64_t start = start_triangle.value_or(1);
  TourResult out;
  Cycle z = triangle_cycle(start, inst);
  out.steps.push_back({start, z.edges(), cycle_weight(z, inst)});

  while (z.vertices().size() < n) {
    // First touching triangle in canonical order: exactly one of its edges on
    // z and exactly one vertex off z.
    std::uint64_t t = 0;
    std::uint64_t chosen = 0;
    for (Vertex a = 1; a <= n && !chosen; ++a) {
      for (Vertex b = a + 1; b <= n && !chosen; ++b) {
        for (Vertex c = b + 1; c <= n; ++c) {
          ++t;
          const int off = !z.has_vertex(a) + !z.has_vertex(b) + !z.has_vertex(c);
          if (off != 1) continue;
          const int shared = z.edges().contains(edge_id(a, b, n)) + z.edges().contains(edge_id(a, c, n)) +
                             z.edges().contains(edge_id(b, c, n));
          if (shared == 1) {
            chosen = t;
            break;
          }
        }
      }
    }
    if (!chosen) throw DomainError("no touching triangle found");  // unreachable in K_n
    z = add_triangle(z, triangle_cycle(chosen, inst), chosen, inst, out);
  }
  finish(z, inst, out);
  return out;
}

TourResult build_hamiltonian_from(const CompleteInstance& inst, std::span<const std::uint64_t> sequence) {
  if (sequence.empty()) throw DomainError("triangle sequence is empty");
  TourResult out;
  Cycle z = triangle_cycle(sequence.front(), inst);
  out.steps.push_back({sequence.front(), z.edges(), cycle_weight(z, inst)});
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    z = add_triangle(z, triangle_cycle(sequence[k], inst), sequence[k], inst, out);
  }
  if (z.vertices().size() != inst.order()) {
    throw DomainError("sequence covers " + std::to_string(z.vertices().size()) + " of " +
                      std::to_string(inst.order()) + " vertices");
  }
  finish(z, inst, out);
  return out;
}

std::string format_hamiltonian_trace(const TourResult& t, const CompleteInstance& inst) {
  std::ostringstream o;
  if (t.steps.empty()) return {};
  o << "start c" << t.steps.front().triangle << " = " << to_string(t.steps.front().cycle) << '\n';
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    o << 'z' << k << " = ";
    if (k == 1) {
      o << 'c' << t.steps.front().triangle;
    } else {
      o << 'z' << k - 1;
    }
    const auto cyc = Cycle::of(s.cycle, inst);
    o << " ⊕ c" << s.triangle << " = " << to_string(s.cycle) << " <-> " << format_vertex_set(cyc.vertices())
      << '\n';
  }
  o << "tour " << format_tour(t.tour) << " weight " << t.weight << '\n';
  return o.str();
}

}  // namespace ringtsp

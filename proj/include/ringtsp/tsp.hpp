#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringtsp/cycle.hpp"
#include "ringtsp/isometric.hpp"
#include "ringtsp/tour.hpp"

namespace ringtsp {

/// Frontier retention rule. all-ties keeps every candidate tied at the
/// minimum weight; width(B) keeps the B best distinct cycles plus anything
/// tied with the B-th.
class Beam {
 public:
  static Beam all_ties() noexcept { return Beam(0); }
  static Beam width(std::size_t b);
  /// "all-ties" or a positive integer.
  static Beam parse(std::string_view text);

  [[nodiscard]] bool is_all_ties() const noexcept { return width_ == 0; }
  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Beam&, const Beam&) = default;

 private:
  explicit Beam(std::size_t w) noexcept : width_(w) {}
  std::size_t width_;
};

/// The three Hamiltonian cycles on a vertex quadruple (a<b<c<d):
/// a-b-c-d, a-b-d-c, a-c-b-d. Between them every quad edge is used twice.
struct QuadCycle {
  std::array<Vertex, 4> order{};
  EdgeSet edges;
  double weight = 0.0;
  std::uint64_t label = 0;  // z<label>
};
struct QuadCycleTriple {
  std::array<Vertex, 4> quad{};
  std::array<QuadCycle, 3> cycles;
};

/// Throws DomainError on repeated or out-of-range vertices.
[[nodiscard]] QuadCycleTriple quad_cycles(const CompleteInstance& inst, std::array<Vertex, 4> quad);

/// How a frontier cycle was reached: previous-frontier index plus triangle.
struct Origin {
  std::size_t parent = 0;
  std::uint64_t triangle = 0;
  friend auto operator<=>(const Origin&, const Origin&) = default;
};

struct Candidate {
  std::vector<Vertex> order;  // canonical closed walk
  EdgeSet edges;
  double weight = 0.0;
  std::uint64_t label = 0;      // seed label (length-4 frontier only)
  std::vector<Origin> origins;  // every (parent, triangle) producing this edge set, sorted
};

/// Working set of simple cycles of one length, sorted by (weight, canonical
/// edge-set order) with distinct edge sets.
struct Frontier {
  std::size_t length = 0;
  Beam beam = Beam::all_ties();
  std::vector<Candidate> candidates;
};

/// Raised when a frontier grows past SolveOptions::max_frontier (degenerate
/// instances with massive ties under all-ties).
class FrontierOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  Beam beam = Beam::all_ties();
  int threads = 0;  // 0: OpenMP default
  std::size_t max_frontier = 4'000'000;
};

/// Best 4-cycles over all vertex quadruples (per-quad minima, then the beam
/// rule across quads). OpenMP kernel. Requires n >= 4.
[[nodiscard]] Frontier seed_frontier(const CompleteInstance& inst, const SolveOptions& opt = {});

/// One growth round: every candidate ring-summed with every touching
/// triangle, duplicates merged, beam applied. OpenMP kernel.
[[nodiscard]] Frontier extend_frontier(const CompleteInstance& inst, const Frontier& f, const SolveOptions& opt = {});

struct SolveResult {
  TourResult tour;
  std::vector<Frontier> frontiers;  // lengths 4..n (empty for n == 3)
};

/// Ring-sum heuristic for the symmetric TSP. Not exact. Ties among final
/// tours go to the smallest canonical edge set.
[[nodiscard]] SolveResult solve(const CompleteInstance& inst, const SolveOptions& opt = {});

/// Serial reference: the same algorithm expressed directly in GF(2) terms
/// (touching-triangle ring sums over EdgeSets). Kept for cross-checking the
/// kernels; cost grows like n^6 in seeding, so desk-scale only.
namespace reference {

[[nodiscard]] Frontier seed_frontier(const CompleteInstance& inst, const Beam& beam,
                                     const IsometricCycleSet& tris);
[[nodiscard]] Frontier extend_frontier(const CompleteInstance& inst, const Frontier& f,
                                       const IsometricCycleSet& tris);
[[nodiscard]] SolveResult solve(const CompleteInstance& inst, const Beam& beam = Beam::all_ties());

}  // namespace reference

/// Closed-form operation counts: triangles n(n-1)(n-2)/6, 4-cycles
/// 3*C(n,4), and total f(n) = (7n^4 - 16n^3)/24.
struct OpCounts {
  std::uint64_t triangles = 0;
  std::uint64_t four_cycles = 0;
  std::int64_t total_times_24 = 0;
  double total = 0.0;
};
[[nodiscard]] OpCounts op_count_estimate(std::size_t n);

/// "z19 ⊕ c3" style provenance plus "{e..} = w" per candidate.
[[nodiscard]] std::string format_frontier(const Frontier& f, const Frontier* previous);

}  // namespace ringtsp

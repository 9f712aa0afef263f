#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "ringtsp/cycle.hpp"
#include "ringtsp/tour.hpp"

namespace ringtsp {

/// Two simple cycles are touching when they share exactly one edge and c
/// brings exactly one vertex that z lacks; their ring sum is then a simple
/// cycle one vertex longer.
[[nodiscard]] bool is_touching(const Cycle& z, const Cycle& c);

/// Hamiltonian cycle of K_n by repeated ring sums of touching triangles.
/// Starts from `start_triangle` (default c1 = {v1,v2,v3}) and at every step
/// takes the first touching triangle in canonical order. Uses n-2 triangles.
[[nodiscard]] TourResult build_hamiltonian(const CompleteInstance& inst,
                                           std::optional<std::uint64_t> start_triangle = std::nullopt);

/// Same construction with every triangle named explicitly (first entry is the
/// starting triangle). Throws DomainError if a triangle is not touching the
/// current cycle or the sequence does not reach all n vertices.
[[nodiscard]] TourResult build_hamiltonian_from(const CompleteInstance& inst,
                                                std::span<const std::uint64_t> sequence);

/// Text trace, one line per ring sum:
///   z1 = c1 ⊕ c2 = {e2,e3,e6,e7} <-> {v1,v2,v3,v4}
[[nodiscard]] std::string format_hamiltonian_trace(const TourResult& t, const CompleteInstance& inst);

}  // namespace ringtsp

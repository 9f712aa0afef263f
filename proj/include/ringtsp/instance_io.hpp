#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "ringtsp/graph.hpp"

namespace ringtsp {

struct MatrixFile {
  std::filesystem::path path;
};
struct UpperRowFile {
  std::filesystem::path path;
};
struct CoordinateFile {
  std::filesystem::path path;
};
struct RandomSpec {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t lo = 1;
  std::int64_t hi = 100;
};

using InstanceSource = std::variant<MatrixFile, UpperRowFile, CoordinateFile, RandomSpec>;

[[nodiscard]] CompleteInstance load_instance(const InstanceSource& source);

// Text formats. All start with a line holding n.
//   full matrix: n rows of n numbers
//   upper row:   n-1 rows, row i holding w(i,j) for j > i
//   coordinates: n rows "x y"; weight = floor(euclid + 0.5)
[[nodiscard]] CompleteInstance parse_full_matrix(std::istream& in);
[[nodiscard]] CompleteInstance parse_upper_row(std::istream& in);
[[nodiscard]] CompleteInstance parse_coordinates(std::istream& in);

void write_full_matrix(std::ostream& out, const CompleteInstance& inst);
void write_upper_row(std::ostream& out, const CompleteInstance& inst);

/// Integer weights uniform in [lo, hi]; deterministic for fixed arguments.
[[nodiscard]] CompleteInstance random_instance(std::size_t n, std::uint64_t seed, std::int64_t lo,
                                               std::int64_t hi);

/// "full-matrix:<path>", "random:n=8,seed=7,lo=1,hi=100", ...
[[nodiscard]] std::string describe(const InstanceSource& source);

/// Edge list for a general graph: first line "n m", then m lines "u v".
[[nodiscard]] GeneralGraph parse_edge_list(std::istream& in);
[[nodiscard]] GeneralGraph load_edge_list(const std::filesystem::path& path);

}  // namespace ringtsp

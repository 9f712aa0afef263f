#include "ringtsp/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>

namespace ringtsp {

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) {
    std::string tok;
    while (in >> tok) tokens_.push_back(std::move(tok));
  }

  double number(const char* what) {
    if (pos_ >= tokens_.size()) {
      throw InstanceError(InstanceError::Kind::parse, std::string("unexpected end of input reading ") + what);
    }
    const std::string& tok = tokens_[pos_++];
    double value = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw InstanceError(InstanceError::Kind::parse, "bad number '" + tok + "' reading " + what);
    }
    return value;
  }

  std::size_t order() {
    const double v = number("vertex count");
    if (v != std::floor(v) || v < 0 || v > 1e6) {
      throw InstanceError(InstanceError::Kind::parse, "vertex count must be a non-negative integer");
    }
    const auto n = static_cast<std::size_t>(v);
    if (n < 3) throw InstanceError(InstanceError::Kind::too_small, "instance needs at least 3 vertices");
    return n;
  }

  void expect_end() const {
    if (pos_ != tokens_.size()) {
      throw InstanceError(InstanceError::Kind::parse, "trailing data after instance: '" + tokens_[pos_] + "'");
    }
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(InstanceError::Kind::io, "cannot open " + path.string());
  return in;
}

// Integral weights print without a decimal point so files round-trip exactly.
void put_weight(std::ostream& out, double w) {
  if (w == std::floor(w) && std::fabs(w) < 1e15) {
    out << static_cast<long long>(w);
  } else {
    std::ostringstream s;
    s.precision(17);
    s << w;
    out << s.str();
  }
}

}  // namespace

CompleteInstance parse_full_matrix(std::istream& in) {
  TokenReader r(in);
  const std::size_t n = r.order();
  std::vector<double> w(n * n);
  for (double& x : w) x = r.number("matrix entry");
  r.expect_end();
  return CompleteInstance(n, std::move(w));
}

CompleteInstance parse_upper_row(std::istream& in) {
  TokenReader r(in);
  const std::size_t n = r.order();
  std::vector<double> by_edge(complete_edge_count(n));
  for (double& x : by_edge) x = r.number("upper-row entry");
  r.expect_end();
  return CompleteInstance::from_edge_weights(n, by_edge);
}

CompleteInstance parse_coordinates(std::istream& in) {
  TokenReader r(in);
  const std::size_t n = r.order();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = r.number("x coordinate");
    ys[i] = r.number("y coordinate");
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw InstanceError(InstanceError::Kind::non_finite, "non-finite coordinate");
    }
  }
  r.expect_end();
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::floor(std::hypot(xs[i] - xs[j], ys[i] - ys[j]) + 0.5);
      w[i * n + j] = d;
      w[j * n + i] = d;
    }
  }
  return CompleteInstance(n, std::move(w));
}

void write_full_matrix(std::ostream& out, const CompleteInstance& inst) {
  const std::size_t n = inst.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      put_weight(out, inst.at(i, j));
    }
    out << '\n';
  }
}

void write_upper_row(std::ostream& out, const CompleteInstance& inst) {
  const std::size_t n = inst.order();
  out << n << '\n';
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      put_weight(out, inst.at(i, j));
    }
    out << '\n';
  }
}

CompleteInstance random_instance(std::size_t n, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("random_instance: lo > hi");
  if (lo < 0) throw DomainError("random_instance: weights must be non-negative");
  if (n < 3) throw InstanceError(InstanceError::Kind::too_small, "instance needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto x = static_cast<double>(dist(rng));
      w[i * n + j] = x;
      w[j * n + i] = x;
    }
  }
  return CompleteInstance(n, std::move(w));
}

CompleteInstance load_instance(const InstanceSource& source) {
  return std::visit(
      [](const auto& s) -> CompleteInstance {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RandomSpec>) {
          return random_instance(s.n, s.seed, s.lo, s.hi);
        } else {
          auto in = open(s.path);
          if constexpr (std::is_same_v<T, MatrixFile>) return parse_full_matrix(in);
          if constexpr (std::is_same_v<T, UpperRowFile>) return parse_upper_row(in);
          if constexpr (std::is_same_v<T, CoordinateFile>) return parse_coordinates(in);
        }
      },
      source);
}

std::string describe(const InstanceSource& source) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RandomSpec>) {
          std::ostringstream o;
          o << "random:n=" << s.n << ",seed=" << s.seed << ",lo=" << s.lo << ",hi=" << s.hi;
          return o.str();
        } else if constexpr (std::is_same_v<T, MatrixFile>) {
          return "full-matrix:" + s.path.string();
        } else if constexpr (std::is_same_v<T, UpperRowFile>) {
          return "upper-row:" + s.path.string();
        } else {
          return "coordinates:" + s.path.string();
        }
      },
      source);
}

GeneralGraph parse_edge_list(std::istream& in) {
  TokenReader r(in);
  const double n = r.number("vertex count");
  const double m = r.number("edge count");
  if (n != std::floor(n) || m != std::floor(m) || n < 1 || m < 0) {
    throw InstanceError(InstanceError::Kind::parse, "edge list header must be two non-negative integers");
  }
  std::vector<VertexPair> edges;
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    const double u = r.number("edge endpoint");
    const double v = r.number("edge endpoint");
    if (u != std::floor(u) || v != std::floor(v) || u < 1 || v < 1) {
      throw InstanceError(InstanceError::Kind::parse, "edge endpoints must be positive integers");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  r.expect_end();
  return GeneralGraph(static_cast<std::size_t>(n), std::move(edges));
}

GeneralGraph load_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

}  // namespace ringtsp

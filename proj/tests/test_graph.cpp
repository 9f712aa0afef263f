#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <fstream>
#include <sstream>

#include "worked_instances.hpp"
#include "ringtsp/instance_io.hpp"

using namespace ringtsp;

TEST_CASE("edge ids are lexicographic and symmetric") {
  CHECK(edge_id(1, 2, 4) == 1);
  CHECK(edge_id(1, 4, 4) == 3);
  CHECK(edge_id(2, 3, 4) == 4);
  CHECK(edge_id(3, 4, 4) == 6);
  CHECK(edge_id(4, 3, 4) == 6);
  CHECK(edge_id(4, 5, 5) == 10);
  // Independent count: walk pairs in order.
  for (std::size_t n : {3u, 5u, 9u}) {
    EdgeId next = 1;
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        CHECK(edge_id(a, b, n) == next);
        CHECK(edge_endpoints(next, n) == VertexPair{a, b});
        ++next;
      }
    }
    CHECK(next - 1 == complete_edge_count(n));
  }
  CHECK_THROWS_AS((void)edge_id(2, 2, 5), DomainError);
  CHECK_THROWS_AS((void)edge_id(0, 2, 5), DomainError);
  CHECK_THROWS_AS((void)edge_id(1, 6, 5), DomainError);
  CHECK_THROWS_AS((void)edge_endpoints(11, 5), DomainError);
}

TEST_CASE("combination rank") {
  const std::vector<Vertex> first{1, 2, 3}, last{4, 5, 6};
  CHECK(combination_rank(first, 6) == 1);
  CHECK(combination_rank(last, 6) == 20);
  const std::vector<Vertex> q{1, 2, 4, 5};
  CHECK(combination_rank(q, 5) == 3);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("instance validation") {
  using K = InstanceError::Kind;
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const InstanceError& e) {
      return e.kind();
    }
    FAIL("no InstanceError");
    return K::io;
  };
  CHECK(kind_of([] { CompleteInstance(2, {0, 1, 1, 0}); }) == K::too_small);
  CHECK(kind_of([] { CompleteInstance(3, {0, 1, 2, 1, 0, 3, 2, 4, 0}); }) == K::asymmetric);
  CHECK(kind_of([] { CompleteInstance(3, {0, -1, 2, -1, 0, 3, 2, 3, 0}); }) == K::negative);
  CHECK(kind_of([] { CompleteInstance(3, {1, 1, 2, 1, 0, 3, 2, 3, 0}); }) == K::diagonal);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(kind_of([&] { CompleteInstance(3, {0, nan, 2, nan, 0, 3, 2, 3, 0}); }) == K::non_finite);
  CHECK_THROWS_AS(CompleteInstance(3, {0, 1, 2}), InstanceError);
}

TEST_CASE("instance accessors") {
  const auto k4 = fixtures::k4();
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.weight(1, 2) == 10);
  CHECK(k4.weight(2, 1) == 10);
  CHECK(k4.edge_weight(6) == 3);
  CHECK(k4.endpoints(5) == VertexPair{2, 4});
  CHECK(k4.scaled(3).weight(1, 3) == 15);
  const std::vector<Vertex> perm{2, 1, 3, 4};
  CHECK(k4.relabeled(perm).weight(2, 3) == k4.weight(1, 3));
  CHECK(fixtures::k5_e10().edge_weight(10) == 40);
  CHECK(fixtures::k5_e10_e5().edge_weight(5) == 50);
  const std::vector<Vertex> bad{1, 1, 3, 4};
  CHECK_THROWS_AS((void)k4.relabeled(bad), DomainError);
}

TEST_CASE("file formats round-trip") {
  const auto k6 = fixtures::k6();
  std::stringstream full, upper;
  write_full_matrix(full, k6);
  write_upper_row(upper, k6);
  CHECK(full.str().substr(0, 16) == "6\n0 6 4 8 7 14\n6");
  CHECK(upper.str() == "6\n6 4 8 7 14\n7 11 7 10\n4 3 10\n5 11\n7\n");
  CHECK(parse_full_matrix(full) == k6);
  CHECK(parse_upper_row(upper) == k6);

  std::stringstream frac;
  write_full_matrix(frac, k6.scaled(0.1));
  CHECK(parse_full_matrix(frac) == k6.scaled(0.1));

  std::istringstream coords("4\n0 0\n3 4\n0 4\n3 0\n");
  const auto c = parse_coordinates(coords);
  CHECK(c.weight(1, 2) == 5);
  CHECK(c.weight(1, 3) == 4);
  CHECK(c.weight(1, 4) == 3);
}

TEST_CASE("parse errors carry a kind") {
  std::istringstream short_matrix("3\n0 1 2\n1 0\n");
  CHECK_THROWS_AS((void)parse_full_matrix(short_matrix), InstanceError);
  std::istringstream junk("3\n0 1 x\n1 0 3\n2 3 0\n");
  try {
    (void)parse_full_matrix(junk);
    FAIL("expected parse error");
  } catch (const InstanceError& e) {
    CHECK(e.kind() == InstanceError::Kind::parse);
  }
  std::istringstream trailing("3\n1 2\n3\n9\n");
  CHECK_THROWS_AS((void)parse_upper_row(trailing), InstanceError);
  CHECK_THROWS_AS((void)load_instance(MatrixFile{"/nonexistent/file"}), InstanceError);
}

TEST_CASE("random instances are deterministic and in range") {
  const auto a = random_instance(12, 7, 1, 100);
  const auto b = random_instance(12, 7, 1, 100);
  const auto c = random_instance(12, 8, 1, 100);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (EdgeId e = 1; e <= a.edge_count(); ++e) {
    CHECK(a.edge_weight(e) >= 1);
    CHECK(a.edge_weight(e) <= 100);
    CHECK(a.edge_weight(e) == std::floor(a.edge_weight(e)));
  }
  CHECK(describe(RandomSpec{8, 7, 1, 100}) == "random:n=8,seed=7,lo=1,hi=100");
  CHECK(load_instance(RandomSpec{8, 7, 1, 100}) == random_instance(8, 7, 1, 100));
}

TEST_CASE("general graphs") {
  const auto g = fixtures::g1();
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 20);
  CHECK(g.find_edge(9, 10) == 20);
  CHECK(g.find_edge(10, 9) == 20);
  CHECK(g.find_edge(1, 10) == 0);
  CHECK(g.neighbours(1).size() == 4);
  CHECK_THROWS_AS(GeneralGraph(3, {{1, 2}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(GeneralGraph(3, {{1, 1}}), DomainError);
  std::istringstream el("3 3\n1 2\n2 3\n1 3\n");
  CHECK(parse_edge_list(el).edge_count() == 3);
}

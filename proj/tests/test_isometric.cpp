#include <doctest.h>

#include <algorithm>
#include <limits>

#include "worked_instances.hpp"
#include "ringtsp/isometric.hpp"

using namespace ringtsp;

namespace {

// Independent oracle: every edge subset that is a simple cycle whose cyclic
// arc distances match Floyd-Warshall distances.
std::vector<EdgeSet> isometric_by_subsets(const GeneralGraph& g) {
  const std::size_t n = g.order(), m = g.edge_count();
  constexpr std::size_t inf = 1'000'000;
  std::vector<std::size_t> d(n * n, inf);
  for (std::size_t v = 0; v < n; ++v) d[v * n + v] = 0;
  for (const auto& [u, v] : g.endpoints()) d[(u - 1) * n + v - 1] = d[(v - 1) * n + u - 1] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);

  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet s(m);
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) s.insert(EdgeId(e + 1));
    }
    // Quick degree filter before the full classification.
    std::vector<int> deg(n, 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        ++deg[g.endpoints()[e].first - 1];
        ++deg[g.endpoints()[e].second - 1];
      }
    }
    if (std::any_of(deg.begin(), deg.end(), [](int x) { return x != 0 && x != 2; })) continue;
    if (classify(s, g).kind != CycleKind::simple_cycle) continue;
    const auto seq = to_vertex_sequence(s, g.endpoints(), n);
    const std::size_t L = seq.size();
    bool iso = true;
    for (std::size_t i = 0; i < L && iso; ++i)
      for (std::size_t j = i + 1; j < L && iso; ++j)
        iso = d[(seq[i] - 1) * n + seq[j] - 1] == std::min(j - i, L - (j - i));
    if (iso) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.canonical_compare(b) < 0; });
  return out;
}

std::vector<EdgeSet> edge_sets(const IsometricCycleSet& s) {
  std::vector<EdgeSet> out;
  for (const auto& c : s.cycles) out.push_back(c.edges());
  return out;
}

}  // namespace

TEST_CASE("G1 isometric cycles match the reference listing") {
  const auto g = fixtures::g1();
  const auto s = isometric_cycles(g);
  REQUIRE(s.cycles.size() == 16);
  const std::vector<std::vector<EdgeId>> listed{
      {1, 2, 5},        {1, 3, 6, 10},      {1, 4, 7},         {2, 4, 8},      {2, 3, 9, 12, 20}, {3, 4, 12, 18, 20},
      {5, 7, 8},        {5, 6, 9, 13, 16},  {6, 7, 13, 16, 18}, {8, 9, 18},     {10, 11, 14},      {10, 12, 13, 17},
      {11, 12, 19},     {13, 14, 15},       {15, 17, 19},      {16, 17, 20}};
  const auto got = edge_sets(s);
  for (const auto& ids : listed) {
    CHECK(std::find(got.begin(), got.end(), EdgeSet(20, ids)) != got.end());
  }
  // Pass counts tallied straight from the listing above.
  std::vector<std::uint32_t> tally(20, 0);
  for (const auto& ids : listed) {
    for (EdgeId e : ids) ++tally[e - 1];
  }
  const auto pv = pass_vectors(s);
  CHECK(pv.p_e == tally);
  CHECK(format_vector(pv.p_e) == "<3,3,3,3,3,3,3,3,3,3,2,4,4,2,2,3,3,3,2,3>");
  CHECK(maclane_f1(pv) == 40);
  CHECK(maclane_f2(pv) == 132);
}

TEST_CASE("functionals on the printed G1 pass vector") {
  // The printed vector differs from the listing's tally at e1..e3 (5,5,6 vs
  // 3,3,3); the functionals themselves reproduce the printed 78 and 354.
  const PassVectors printed{{5, 5, 6, 3, 3, 3, 3, 3, 3, 3, 2, 4, 4, 2, 2, 3, 3, 3, 2, 3}, {}};
  CHECK(maclane_f1(printed) == 78);
  CHECK(maclane_f2(printed) == 354);
}

TEST_CASE("isometric search agrees with subset enumeration") {
  CHECK(edge_sets(isometric_cycles(fixtures::g1())) == isometric_by_subsets(fixtures::g1()));
  // Petersen graph: girth 5, twelve 5-cycles are isometric; 6-cycles are not
  // (diameter 2 caps isometric length at 5).
  const GeneralGraph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                   {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});
  const auto ps = isometric_cycles(petersen);
  CHECK(ps.cycles.size() == 12);
  CHECK(edge_sets(ps) == isometric_by_subsets(petersen));
  // Cube graph Q3: six square faces plus four hexagons through antipodal pairs.
  const GeneralGraph cube(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  CHECK(isometric_cycles(cube).cycles.size() == 10);
  CHECK(edge_sets(isometric_cycles(cube)) == isometric_by_subsets(cube));
  // A plain cycle is isometric in itself.
  const GeneralGraph c7(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}});
  CHECK(isometric_cycles(c7).cycles.size() == 1);
}

TEST_CASE("complete graphs: isometric cycles are exactly the triangles") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto iso = isometric_cycles(GeneralGraph::complete(n));
    const auto tri = triangles(n);
    CHECK(iso.cycles.size() == n * (n - 1) * (n - 2) / 6);
    CHECK(edge_sets(iso) == edge_sets(tri));
  }
  CHECK_THROWS_AS((void)isometric_cycles(GeneralGraph(4, {{1, 2}, {3, 4}})), DomainError);
}

TEST_CASE("triangle numbering") {
  const auto t = triangles(6);
  REQUIRE(t.cycles.size() == 20);
  CHECK(t.cycles[0].vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(t.cycles[19].vertices() == std::vector<Vertex>{4, 5, 6});
  // K5: c5 = {v1,v3,v5}, c10 = {v3,v4,v5}
  CHECK(triangle_vertices(5, 5) == std::array<Vertex, 3>{1, 3, 5});
  CHECK(triangle_vertices(10, 5) == std::array<Vertex, 3>{3, 4, 5});
  for (std::uint64_t k = 1; k <= 120; ++k) {
    const auto v = triangle_vertices(k, 10);
    CHECK(triangle_id(v[2], v[0], v[1], 10) == k);
  }
  CHECK_THROWS_AS((void)triangle_vertices(0, 5), DomainError);
  CHECK_THROWS_AS((void)triangle_vertices(11, 5), DomainError);
  CHECK(describe_cycle(triangles(5).cycles[2], 3) == "c3 = {e1,e4,e7} <-> {v1,v2,v5}");
}

TEST_CASE("K5 MacLane deletion trace") {
  const auto tri = triangles(5);
  const auto pv = pass_vectors(tri);
  CHECK(pv.p_e == std::vector<std::uint32_t>(10, 3));
  CHECK(pv.p_v == std::vector<std::uint32_t>(5, 6));
  CHECK(maclane_f2(pv) == 60);
  const std::vector<std::size_t> order{1, 6, 8, 2, 4};
  const auto trace = deletion_trace(tri, order);
  REQUIRE(trace.size() == 6);
  std::vector<std::int64_t> f2;
  for (const auto& st : trace) f2.push_back(st.f2);
  CHECK(f2 == std::vector<std::int64_t>{60, 42, 24, 12, 6, 0});
  CHECK_FALSE(trace[0].removed.has_value());
  CHECK(*trace[3].removed == 8);

  const std::vector<std::size_t> twice{1, 1};
  CHECK_THROWS_AS((void)deletion_trace(tri, twice), DomainError);
  const std::vector<std::size_t> out_of_range{11};
  CHECK_THROWS_AS((void)deletion_trace(tri, out_of_range), DomainError);
}

TEST_CASE("MacLane functionals by hand") {
  PassVectors pv{{0, 1, 2, 3}, {}};
  // F1 over non-zero entries: (1+4+9) - 3*6 + 2*3 = 2
  CHECK(maclane_f1(pv) == 2);
  // F2: (1+8+27) - 3*(1+4+9) + 2*6 = 6
  CHECK(maclane_f2(pv) == 6);
  // Entries 0, 1, 2 contribute nothing to F2.
  CHECK(maclane_f2(PassVectors{{0, 1, 2, 2, 1}, {}}) == 0);
}

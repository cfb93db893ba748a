#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "torusrips/facets.hpp"

using namespace torusrips;

namespace {

oracle::AdjacencyMatrix matrix_of(const FiniteMetricSpace& space, int k) {
  oracle::AdjacencyMatrix adj(space.size(), std::vector<char>(space.size(), 0));
  for (Vertex u = 0; u < space.size(); ++u)
    for (Vertex v = 0; v < space.size(); ++v) adj[u][v] = u != v && space.distance(u, v) <= k;
  return adj;
}

std::vector<oracle::Clique> as_cliques(const FacetSet& set) {
  std::vector<oracle::Clique> out;
  for (const auto& s : set.facets) out.emplace_back(s.vertices().begin(), s.vertices().end());
  std::sort(out.begin(), out.end());
  return out;
}

// Every listed simplex is a clique and no vertex extends it.
bool all_maximal(const FacetSet& set, const FiniteMetricSpace& space, int k) {
  for (const auto& s : set.facets) {
    if (simplex_diameter(space, s) > k) return false;
    for (Vertex v = 0; v < space.size(); ++v) {
      if (s.contains(v)) continue;
      bool extends = true;
      for (Vertex u : s.vertices()) extends = extends && space.distance(u, v) <= k;
      if (extends) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("facet_catalog") {
  TEST_CASE("Bron-Kerbosch agrees with naive maximal cliques") {
    for (const auto& [space, k] : std::vector<std::pair<FiniteMetricSpace, int>>{
             {FiniteMetricSpace::torus(4), 2}, {FiniteMetricSpace::torus(5), 2},
             {FiniteMetricSpace::cycle(9), 3}, {FiniteMetricSpace::cycle(11), 4},
             {FiniteMetricSpace::window({0, 4, 0, 3}), 2}, {FiniteMetricSpace::torus(3), 1}}) {
      CAPTURE(space.label());
      REQUIRE(as_cliques(brute_force_facets(vr_graph(space, k))) ==
              oracle::maximal_cliques(matrix_of(space, k)));
    }
  }

  TEST_CASE("cycle catalog equals the oracle wherever it is defined") {
    for (int n = 3; n <= 30; ++n)
      for (int k = 0; k <= n; ++k) {
        if (!cycle_closed_form_supported(n, k)) {
          CHECK_THROWS_AS(cycle_facets(n, k), Error);
          continue;
        }
        CAPTURE(n);
        CAPTURE(k);
        const auto space = FiniteMetricSpace::cycle(n);
        const auto closed = cycle_facets(n, k);
        REQUIRE(closed == brute_force_facets(vr_graph(space, k)));
        REQUIRE(all_maximal(closed, space, k));
      }
    CHECK(cycle_facets(9, 3).size() == 12);
    CHECK(cycle_facets(8, 3).size() == 16);
  }

  TEST_CASE("torus catalog equals the oracle in every supported regime up to n = 12") {
    int regimes = 0;
    for (int n = 3; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        if (!torus_closed_form_supported(n, k)) continue;
        ++regimes;
        CAPTURE(n);
        CAPTURE(k);
        const auto space = FiniteMetricSpace::torus(n);
        const auto closed = torus_facets(n, k);
        REQUIRE(difference(closed, brute_force_facets(vr_graph(space, k))).empty());
        REQUIRE(all_maximal(closed, space, k));
      }
    CHECK(regimes >= 10);
    CHECK(torus_facets(6, 2).size() == 96);
    CHECK(torus_facets(7, 2).size() == 98);
    CHECK(row_triangles(2).size() == 24);
    CHECK(torus_facets(8, 3).size() == 2 * 64 + 2 * 64);
  }

  TEST_CASE("named regimes are supported") {
    CHECK(torus_closed_form_supported(9, 2));
    CHECK(torus_closed_form_supported(6, 2));
    CHECK(torus_closed_form_supported(9, 3));
    CHECK(torus_closed_form_supported(12, 4));
    CHECK(torus_closed_form_supported(8, 3));
    CHECK_FALSE(torus_closed_form_supported(5, 2));
    CHECK_THROWS_AS(torus_facets(7, 3), Error);
  }

  TEST_CASE("row triangles meet pairwise in at most one vertex") {
    for (int k = 2; k <= 4; ++k) {
      const auto t = row_triangles(k);
      CHECK(t.size() == static_cast<std::size_t>(6 * k * k));
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          std::size_t shared = 0;
          for (Vertex v : t.facets[i].vertices()) shared += t.facets[j].contains(v);
          REQUIRE(shared <= 1);
        }
    }
  }

  TEST_CASE("planar diamonds") {
    // k = 2, integral center: the 5-point plus shape.
    CHECK(z2_facet({{0, 0}, 2}).size() == 5);
    // k = 2, both coordinates half-integral: a 2x2 square.
    CHECK(z2_facet({{1, 1}, 2}).size() == 4);
    // k = 1: an edge.
    CHECK(z2_facet({{1, 0}, 1}).size() == 2);
    CHECK_FALSE(DiamondCenter{{1, 0}, 2}.valid());
    CHECK_FALSE(DiamondCenter{{0, 0}, 1}.valid());
    for (int k = 1; k <= 6; ++k)
      for (long x2 = -3; x2 <= 3; ++x2)
        for (long y2 = -3; y2 <= 3; ++y2) {
          const DiamondCenter c{{x2, y2}, k};
          if (!c.valid()) continue;
          const auto pts = z2_facet(c);
          long diameter = 0;
          for (auto p : pts)
            for (auto q : pts) diameter = std::max(diameter, l1_distance(p, q));
          REQUIRE(diameter == k);
        }
  }

  TEST_CASE("window interiors equal the oracle for k up to 5") {
    for (int k = 1; k <= 5; ++k) {
      const long r = 2 * k + 2;
      const auto space = FiniteMetricSpace::window({-r, r, -r, r});
      CAPTURE(k);
      const auto closed = z2_facets_in_window(space, k);
      const auto brute = interior_only(brute_force_facets(vr_graph(space, k)), space, interior_margin(k));
      REQUIRE(difference(closed, brute).empty());
      REQUIRE(closed.size() > 0);
    }
  }

  TEST_CASE("projection rejects collisions") {
    const std::vector<LatticePoint> pts{{0, 0}, {5, 0}};
    CHECK_THROWS_AS(project_facet(pts, 5), Error);
  }
}

#include <doctest.h>

#include "oracles.hpp"
#include "torusrips/metric.hpp"

using namespace torusrips;

TEST_SUITE("metric") {
  TEST_CASE("distances from worked examples") {
    CHECK(cycle_distance(10, 1, 8) == 3);
    CHECK(cycle_distance(10, 2, 7) == 5);
    CHECK(torus_distance(5, {0, 0}, {4, 4}) == 2);
    CHECK(torus_distance(6, {0, 0}, {3, 3}) == 6);
    CHECK(torus_diameter(4) == 4);
    CHECK(torus_diameter(5) == 4);
    CHECK(l1_distance({-1, 2}, {3, -2}) == 8);
    CHECK(reduce_mod(5, {-1, 7}) == TorusPoint{4, 2});
  }

  TEST_CASE("torus and cycle distances equal shortest paths in the grid graphs") {
    for (int n = 3; n <= 9; ++n) {
      const auto space = FiniteMetricSpace::torus(n);
      const auto dist = oracle::bfs_distances(oracle::torus_grid_graph(n));
      int diameter = 0;
      for (Vertex u = 0; u < space.size(); ++u)
        for (Vertex v = 0; v < space.size(); ++v) {
          REQUIRE(space.distance(u, v) == dist[u][v]);
          diameter = std::max(diameter, dist[u][v]);
        }
      CHECK(space.diameter() == diameter);

      const auto cycle = FiniteMetricSpace::cycle(n);
      const auto cdist = oracle::bfs_distances(oracle::cycle_graph(n));
      for (Vertex u = 0; u < cycle.size(); ++u)
        for (Vertex v = 0; v < cycle.size(); ++v) REQUIRE(cycle.distance(u, v) == cdist[u][v]);
    }
  }

  TEST_CASE("metric axioms") {
    for (const auto& space : {FiniteMetricSpace::torus(6), FiniteMetricSpace::cycle(11),
                              FiniteMetricSpace::window({-2, 3, 0, 4})}) {
      const auto n = static_cast<Vertex>(space.size());
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          REQUIRE((space.distance(u, v) == 0) == (u == v));
          REQUIRE(space.distance(u, v) == space.distance(v, u));
          for (Vertex w = 0; w < n; ++w)
            REQUIRE(space.distance(u, w) <= space.distance(u, v) + space.distance(v, w));
        }
    }
  }

  TEST_CASE("torus translations are isometries") {
    const int n = 7;
    const auto space = FiniteMetricSpace::torus(n);
    for (int dr = 0; dr < n; ++dr)
      for (int dc = 0; dc < n; dc += 3)
        for (Vertex u = 0; u < space.size(); u += 5)
          for (Vertex v = 0; v < space.size(); ++v) {
            auto shift = [&](Vertex x) {
              const auto p = space.torus_point(x);
              return space.torus_index({(p.row + dr) % n, (p.col + dc) % n});
            };
            REQUIRE(space.distance(shift(u), shift(v)) == space.distance(u, v));
          }
  }

  TEST_CASE("the torus metric is the quotient of the l1 metric") {
    // d_T([p], [q]) = min over lifts of l1(p, q + n*z).
    const int n = 6;
    for (long x = -4; x <= 8; x += 3)
      for (long y = -5; y <= 7; y += 2)
        for (long a = -3; a <= 9; a += 4)
          for (long b = -6; b <= 6; b += 5) {
            long best = 1L << 40;
            for (long zx = -3; zx <= 3; ++zx)
              for (long zy = -3; zy <= 3; ++zy)
                best = std::min(best, l1_distance({x, y}, {a + n * zx, b + n * zy}));
            REQUIRE(torus_distance(n, reduce_mod(n, {x, y}), reduce_mod(n, {a, b})) == best);
          }
  }

  TEST_CASE("vertex indexing") {
    const auto torus = FiniteMetricSpace::torus(5);
    CHECK(torus.torus_index({2, 3}) == 13);
    CHECK(torus.torus_point(13) == TorusPoint{2, 3});
    const auto window = FiniteMetricSpace::window({-1, 2, 3, 5});
    CHECK(window.size() == 12);
    CHECK(window.lattice_index({-1, 3}) == 0);
    CHECK(window.lattice_index({0, 4}) == 4);
    CHECK(window.lattice_point(11) == LatticePoint{2, 5});
    CHECK(torus.label() == "torus 5");
  }

  TEST_CASE("closed balls") {
    const auto torus = FiniteMetricSpace::torus(7);
    // |B(x, r)| in the plane is 2r^2 + 2r + 1 while 2r < n.
    for (int r = 0; r <= 3; ++r) CHECK(closed_ball(torus, 10, r).size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
    CHECK(closed_ball(FiniteMetricSpace::cycle(9), 0, 2) == std::vector<Vertex>{0, 1, 2, 7, 8});
  }

  TEST_CASE("invalid spaces are rejected") {
    CHECK_THROWS(FiniteMetricSpace::torus(2));
    CHECK_THROWS(FiniteMetricSpace::cycle(0));
    CHECK_THROWS(FiniteMetricSpace::window({3, 1, 0, 0}));
  }
}

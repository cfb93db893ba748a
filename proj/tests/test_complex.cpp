#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "torusrips/complex.hpp"

using namespace torusrips;

namespace {

oracle::AdjacencyMatrix matrix_of(const FiniteMetricSpace& space, int k) {
  oracle::AdjacencyMatrix adj(space.size(), std::vector<char>(space.size(), 0));
  for (Vertex u = 0; u < space.size(); ++u)
    for (Vertex v = 0; v < space.size(); ++v) adj[u][v] = u != v && space.distance(u, v) <= k;
  return adj;
}

std::vector<oracle::Clique> listed(const FlagComplex& c, int d) {
  std::vector<oracle::Clique> out;
  for (std::size_t i = 0; i < c.count(d); ++i) {
    auto s = c.simplex(d, i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("clique_complex") {
  TEST_CASE("closed convention: distance exactly k is an edge") {
    const auto g = vr_graph(FiniteMetricSpace::cycle(8), 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 6));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.edge_count() == 16);
  }

  TEST_CASE("simplices are exactly the cliques of the threshold graph") {
    const std::vector<std::pair<FiniteMetricSpace, int>> cases{
        {FiniteMetricSpace::torus(4), 2}, {FiniteMetricSpace::torus(5), 2},
        {FiniteMetricSpace::torus(3), 1}, {FiniteMetricSpace::cycle(9), 3},
        {FiniteMetricSpace::cycle(8), 3}, {FiniteMetricSpace::window({0, 3, 0, 3}), 2}};
    for (const auto& [space, k] : cases) {
      const auto adj = matrix_of(space, k);
      const auto expected = oracle::cliques_by_size(adj, 7);
      const auto complex = enumerate_simplices(vr_graph(space, k), 5);
      for (int d = 0; d <= 5; ++d) REQUIRE(listed(complex, d) == expected[d + 1]);
      CHECK(complex.truncated() == !expected[7].empty());
    }
  }

  TEST_CASE("enumerate_all_simplices stops at the clique number") {
    const auto complex = enumerate_all_simplices(vr_graph(FiniteMetricSpace::torus(4), 3));
    CHECK(complex.max_dim() == 7);
    CHECK_FALSE(complex.truncated());
    // Cross-polytope boundary on 8 pairs: C(8, j) 2^j simplices with j vertices.
    std::vector<std::uint64_t> expected;
    std::uint64_t binom = 1;
    for (int j = 1; j <= 8; ++j) {
      binom = binom * (8 - j + 1) / j;
      expected.push_back(binom << j);
    }
    CHECK(complex.counts() == expected);
  }

  TEST_CASE("boundary of a boundary vanishes") {
    for (const auto& [space, k] : std::vector<std::pair<FiniteMetricSpace, int>>{
             {FiniteMetricSpace::torus(5), 2}, {FiniteMetricSpace::torus(4), 3},
             {FiniteMetricSpace::cycle(11), 4}, {FiniteMetricSpace::window({0, 4, 0, 4}), 2}}) {
      const auto complex = enumerate_all_simplices(vr_graph(space, k));
      for (int d = 2; d <= complex.max_dim(); ++d)
        REQUIRE(is_zero(multiply(boundary_matrix(complex, d - 1), boundary_matrix(complex, d))));
    }
  }

  TEST_CASE("enumeration is deterministic") {
    const auto g = vr_graph(FiniteMetricSpace::torus(6), 2);
    const auto a = enumerate_simplices(g, 4);
    const auto b = enumerate_simplices(g, 4);
    for (int d = 0; d <= 4; ++d) {
      auto fa = a.flat(d);
      auto fb = b.flat(d);
      REQUIRE(std::equal(fa.begin(), fa.end(), fb.begin(), fb.end()));
    }
  }

  TEST_CASE("simplex counts are invariant under vertex relabelling") {
    const auto g = vr_graph(FiniteMetricSpace::torus(5), 2);
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g.relabelled(perm);
    CHECK(h.edge_count() == g.edge_count());
    CHECK(enumerate_all_simplices(h).counts() == enumerate_all_simplices(g).counts());
  }

  TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(enumerate_all_simplices(vr_graph(FiniteMetricSpace::torus(4), 3))) == 0);
    CHECK(euler_characteristic(enumerate_all_simplices(vr_graph(FiniteMetricSpace::cycle(7), 1))) == 0);
    CHECK_THROWS(euler_characteristic(enumerate_simplices(vr_graph(FiniteMetricSpace::torus(4), 2), 1)));
  }

  TEST_CASE("simplex budget is enforced") {
    Limits limits;
    limits.simplex_budget = 100;
    try {
      enumerate_simplices(vr_graph(FiniteMetricSpace::torus(5), 2), 4, limits);
      FAIL("expected a budget error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::budget);
    }
  }

  TEST_CASE("simplex list round trip") {
    const auto complex = enumerate_simplices(vr_graph(FiniteMetricSpace::cycle(6), 2), 2);
    std::vector<Simplex> simplices;
    for (std::size_t i = 0; i < complex.count(2); ++i) simplices.push_back(complex.simplex_at(2, i));
    std::stringstream buffer;
    write_simplex_list(buffer, {"cycle", 6, 2, "2", {}}, simplices);
    SimplexListHeader header;
    CHECK(read_simplex_list(buffer, &header) == simplices);
    CHECK(header.n == 6);
    CHECK(header.k == 2);
  }

  TEST_CASE("index lookup") {
    const auto complex = enumerate_simplices(vr_graph(FiniteMetricSpace::cycle(6), 2), 2);
    const std::vector<Vertex> tri{0, 2, 4};
    const std::vector<Vertex> missing{0, 3};
    CHECK(complex.index_of(tri) >= 0);
    CHECK(complex.index_of(missing) == -1);
    CHECK_THROWS(Simplex({1, 1}));
  }
}

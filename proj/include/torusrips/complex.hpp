#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "torusrips/error.hpp"
#include "torusrips/metric.hpp"

namespace torusrips {

/// Simple undirected graph with strictly ascending neighbor lists.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count = 0);

  // Edges may be given in any order and with duplicates; self-loops are
  // rejected.
  static Graph from_edges(std::size_t vertex_count,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_complete() const;
  // Adjacency row of v as 64-bit words, bit u set iff u ~ v.
  std::span<const std::uint64_t> adjacency_bits(Vertex v) const { return bits_[v]; }

  // Applies a vertex relabelling: new index of v is perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

 private:
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  // Dense adjacency rows, one bit per vertex.
  std::vector<std::vector<std::uint64_t>> bits_;
};

/// 1-skeleton of VR(space, k) under the closed convention d(u,v) <= k.
Graph vr_graph(const FiniteMetricSpace& space, int k);

/// A simplex as a strictly ascending list of vertices.
class Simplex {
 public:
  Simplex() = default;
  // Sorts and validates; duplicates are rejected.
  explicit Simplex(std::vector<Vertex> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  bool contains(Vertex v) const;
  bool is_subset_of(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& out, const Simplex& s);

/// Clique complex of a graph, enumerated up to a dimension cap.
///
/// Each dimension is stored as a flat, lexicographically sorted array of
/// (d+1)-tuples.
class FlagComplex {
 public:
  FlagComplex(Graph graph, int max_dim, std::vector<std::vector<Vertex>> lists,
              bool truncated);

  const Graph& graph() const { return graph_; }
  int max_dim() const { return max_dim_; }
  // Highest dimension that has simplices (<= max_dim).
  int top_dim() const;
  // True iff the graph has cliques above max_dim.
  bool truncated() const { return truncated_; }

  std::size_t count(int d) const;
  std::vector<std::uint64_t> counts() const;
  std::span<const Vertex> simplex(int d, std::size_t i) const;
  Simplex simplex_at(int d, std::size_t i) const {
    auto s = simplex(d, i);
    return Simplex(std::vector<Vertex>(s.begin(), s.end()));
  }
  // Position of `vertices` in the dimension list, or -1.
  std::int64_t index_of(std::span<const Vertex> vertices) const;
  std::span<const Vertex> flat(int d) const { return lists_.at(d); }

 private:
  Graph graph_;
  int max_dim_;
  std::vector<std::vector<Vertex>> lists_;
  bool truncated_;
};

/// Enumerates all cliques with at most max_dim+1 vertices.
///
/// Dimension d+1 is grown from dimension d by intersecting neighbor lists
/// above the last vertex, so every list comes out in lexicographic order.
/// Throws `budget` when the total count passes limits.simplex_budget.
FlagComplex enumerate_simplices(const Graph& graph, int max_dim,
                                const Limits& limits = {});

/// Enumerates every clique; max_dim() of the result is the top dimension.
FlagComplex enumerate_all_simplices(const Graph& graph, const Limits& limits = {});

/// GF(2) matrix stored as sorted row supports per column.
struct SparseBitMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::vector<std::uint32_t>> columns;

  std::size_t nonzeros() const;
};

SparseBitMatrix multiply(const SparseBitMatrix& a, const SparseBitMatrix& b);
bool is_zero(const SparseBitMatrix& m);

/// Mod-2 boundary map from dimension d to d-1 (rows follow the d-1 list).
SparseBitMatrix boundary_matrix(const FlagComplex& complex, int d);

/// Alternating sum of simplex counts; refuses truncated complexes.
std::int64_t euler_characteristic(const FlagComplex& complex);

// Simplex list text format: `#` header lines, then one simplex per line.
struct SimplexListHeader {
  std::string space;
  int n = 0;
  int k = 0;
  std::string dim;
  std::vector<std::pair<std::string, std::string>> extra;
};

void write_simplex_list(std::ostream& out, const SimplexListHeader& header,
                        const std::vector<Simplex>& simplices);
std::vector<Simplex> read_simplex_list(std::istream& in,
                                       SimplexListHeader* header = nullptr);

}  // namespace torusrips

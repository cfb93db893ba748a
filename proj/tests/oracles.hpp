#pragma once

// Test-side reference implementations. None of these call into the library
// code they check; they trade speed for being obviously right.

#include <cstdint>
#include <vector>

namespace oracle {

using Clique = std::vector<std::uint32_t>;
using AdjacencyMatrix = std::vector<std::vector<char>>;

// Shortest-path distances by breadth-first search on an explicit graph.
std::vector<std::vector<int>> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj);

// Adjacency lists of the n-cycle and of the n x n torus grid (vertex r*n+c).
std::vector<std::vector<std::uint32_t>> cycle_graph(int n);
std::vector<std::vector<std::uint32_t>> torus_grid_graph(int n);

// adj[u][v] = 1 iff u != v and dist[u][v] <= k.
AdjacencyMatrix threshold(const std::vector<std::vector<int>>& dist, int k);

// Every clique with at most max_size vertices, by extending ascending
// vertex lists one vertex at a time and testing all pairs.
std::vector<std::vector<Clique>> cliques_by_size(const AdjacencyMatrix& adj, std::size_t max_size);

// Maximal cliques: cliques no vertex can be added to, found by the same naive
// extension without a size cap. Sorted.
std::vector<Clique> maximal_cliques(const AdjacencyMatrix& adj);

// Rank over GF(2) by dense Gaussian elimination.
std::size_t gf2_rank(std::vector<std::vector<char>> rows);

// Mod-2 Betti numbers 0..max_dim from a naive clique list.
std::vector<std::uint64_t> gf2_betti(const AdjacencyMatrix& adj, int max_dim);

// Exact determinant by Bareiss fraction-free elimination.
__int128 determinant(std::vector<std::vector<__int128>> m);

// Invariant factors d_1 | d_2 | ... from determinantal divisors
// D_i = gcd of all i x i minors, d_i = D_i / D_{i-1}. Small matrices only.
std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& m);

// Cycle formula: reduced homology of VR(C_n, k) is S^{2l+1} strictly between
// the critical ratios l/(2l+1) < k/n < (l+1)/(2l+3), a wedge of n-2k-1
// copies of S^{2l} at k/n = l/(2l+1), and trivial once 2k >= n. Unreduced
// Betti numbers, trailing zeros trimmed.
std::vector<std::uint64_t> cycle_betti(int n, int k);

// Number of connected components by depth-first search.
std::size_t components(const AdjacencyMatrix& adj);

}  // namespace oracle

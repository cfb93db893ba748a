#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "torusrips/complex.hpp"
#include "torusrips/snf.hpp"

namespace torusrips {

enum class Coefficients { gf2, integer };

const char* to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& text);

/// Homology ranks per dimension, plus invariant factors for integer runs.
struct BettiProfile {
  Coefficients coefficients = Coefficients::gf2;
  std::vector<std::uint64_t> betti;
  // torsion[d] lists invariant factors > 1 of H_d; empty for gf2.
  std::vector<std::vector<mpz_class>> torsion;
  // Alternating simplex count; only known for untruncated complexes.
  std::optional<std::int64_t> euler;
  // Set when homology above this dimension was not computed.
  std::optional<int> truncated_at;

  bool truncated() const { return truncated_at.has_value(); }
  bool torsion_free() const;
  std::int64_t betti_euler() const;
};

/// Signed boundary map over the integers, with
/// d[v0..vd] = sum_i (-1)^i [v0..^vi..vd] on ascending vertex order.
/// Columns flagged in skip are left out.
IntegerMatrix signed_boundary_matrix(const FlagComplex& complex, int d,
                                     const std::vector<char>& skip = {});

/// Ranks of the mod-2 boundary maps d_1..d_top (index 0 holds 0).
///
/// Columns are reduced left to right with a row->column pivot table; the
/// clearing pass skips columns of d_{k} already known to reduce to zero from
/// the pivots of d_{k+1}.
std::vector<std::uint64_t> gf2_boundary_ranks(const FlagComplex& complex,
                                              int top, const Limits& limits = {});

/// Mod-2 Betti numbers for dimensions 0..max_betti_dim.
///
/// The complex must be enumerated through max_betti_dim + 1 (or be
/// untruncated).
BettiProfile betti_gf2(const FlagComplex& complex, int max_betti_dim,
                       const Limits& limits = {});

/// Integral homology ranks and torsion for dimensions 0..max_dim.
///
/// Boundary maps are handled from the top down; rows of d_{k+1} matched to a
/// +-1 pivot drop the same simplices from the columns of d_k.
BettiProfile homology_integer(const FlagComplex& complex, int max_dim,
                              const Limits& limits = {});

/// Betti numbers predicted by the cycle formula for VR(C_n, k):
///   k = l*n/(2l+1)               -> wedge of n-2k-1 spheres S^{2l}
///   l*n/(2l+1) < k < (l+1)n/(2l+3) -> S^{2l+1}
/// and a point once k >= n/2. The vector runs through the nonzero dimension.
BettiProfile expected_cycle_profile(int n, int k);

/// Connected components by union-find over the graph edges.
std::size_t component_count(const Graph& graph);

}  // namespace torusrips

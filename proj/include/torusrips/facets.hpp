#pragma once

#include <span>
#include <vector>

#include "torusrips/complex.hpp"
#include "torusrips/metric.hpp"

namespace torusrips {

enum class FacetSource { cycle_closed_form, z2_closed_form, torus_closed_form, brute_force };

const char* to_string(FacetSource source);

/// Maximal simplices of one complex, kept sorted and duplicate-free.
struct FacetSet {
  std::vector<Simplex> facets;
  FacetSource source = FacetSource::brute_force;

  static FacetSet from(std::vector<Simplex> simplices, FacetSource source);

  std::size_t size() const { return facets.size(); }
  bool contains(const Simplex& s) const;
  // Highest facet dimension, or -1 when empty.
  int max_dimension() const;
  bool operator==(const FacetSet& other) const { return facets == other.facets; }
};

/// Simplices in exactly one of the two sets, each side sorted.
struct FacetDifference {
  std::vector<Simplex> only_left;
  std::vector<Simplex> only_right;

  bool empty() const { return only_left.empty() && only_right.empty(); }
};

FacetDifference difference(const FacetSet& left, const FacetSet& right);

/// Center of a lattice diamond B[c, k/2], doubled coordinates.
///
/// k even: both coordinates integral or both half-integral.
/// k odd: exactly one half-integral coordinate.
struct DiamondCenter {
  HalfIntegerPoint center;
  int k = 0;

  bool valid() const;
};

/// Lattice points p with l1(p, c) <= k/2, i.e. l1(2p, 2c) <= k. Sorted by (x, y).
std::vector<LatticePoint> z2_facet(const DiamondCenter& c);

/// z2_facet with points mapped to vertex indices of a window space; every
/// point must lie in the window.
Simplex z2_facet(const DiamondCenter& c, const FiniteMetricSpace& window);

// Regime checks; false means no closed form is implemented.
bool cycle_closed_form_supported(int n, int k);
bool torus_closed_form_supported(int n, int k);

/// Facets of VR(C_n, k): arcs of k+1 consecutive points, plus the triangles
/// {i, i+k, i+2k} when n = 3k and the tetrahedra {i, i+k, i+2k-1, i+2k}
/// when n = 3k-1. Throws unsupported_regime outside those cases.
FacetSet cycle_facets(int n, int k);

/// Interior facets of VR(window, k): every diamond whose points all keep a
/// distance of at least ceil(k/2) from the window border.
FacetSet z2_facets_in_window(const FiniteMetricSpace& window, int k);

/// Border margin used by z2_facets_in_window.
long interior_margin(int k);

/// Keeps the simplices whose points all satisfy the interior margin.
FacetSet interior_only(const FacetSet& facets, const FiniteMetricSpace& window,
                       long margin);

/// The projected planar facets M_{n,k}, one sweep of centers over a
/// fundamental domain.
FacetSet projected_planar_facets(int n, int k);

/// Row and column triangles {(a,b),(a+k,b),(a+2k,b)} of T_{3k,3k}.
FacetSet row_triangles(int k);

/// Row and column tetrahedra {(a,b),(a+k,b),(a+2k-1,b),(a+2k,b)} of
/// T_{3k-1,3k-1}.
FacetSet row_tetrahedra(int k);

/// Facets of VR(T_{n,n}, k) for n > 3k, n = 3k (k >= 2) and n = 3k-1
/// (k >= 3). Throws unsupported_regime otherwise.
FacetSet torus_facets(int n, int k);

/// Reduces each lattice point modulo n; throws if two points collide.
Simplex project_facet(std::span<const LatticePoint> points, int n);

/// All maximal cliques by Bron-Kerbosch with pivoting.
FacetSet brute_force_facets(const Graph& graph, const Limits& limits = {});

/// Pairwise diameter of a vertex set in the given space.
int simplex_diameter(const FiniteMetricSpace& space, const Simplex& s);

}  // namespace torusrips

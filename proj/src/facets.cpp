#include "torusrips/facets.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace torusrips {

const char* to_string(FacetSource source) {
  switch (source) {
    case FacetSource::cycle_closed_form: return "cycle-closed-form";
    case FacetSource::z2_closed_form: return "z2-closed-form";
    case FacetSource::torus_closed_form: return "torus-closed-form";
    case FacetSource::brute_force: return "brute-force";
  }
  return "?";
}

FacetSet FacetSet::from(std::vector<Simplex> simplices, FacetSource source) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  return {std::move(simplices), source};
}

bool FacetSet::contains(const Simplex& s) const {
  return std::binary_search(facets.begin(), facets.end(), s);
}

int FacetSet::max_dimension() const {
  int top = -1;
  for (const auto& f : facets) top = std::max(top, f.dimension());
  return top;
}

FacetDifference difference(const FacetSet& left, const FacetSet& right) {
  FacetDifference diff;
  std::set_difference(left.facets.begin(), left.facets.end(), right.facets.begin(),
                      right.facets.end(), std::back_inserter(diff.only_left));
  std::set_difference(right.facets.begin(), right.facets.end(), left.facets.begin(),
                      left.facets.end(), std::back_inserter(diff.only_right));
  return diff;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

bool is_odd(long v) { return (v % 2) != 0; }

void check_scale(int k) { require(k >= 1, "facet scale must be at least 1"); }

void sweep_centers(long x2_lo, long x2_hi, long y2_lo, long y2_hi, int k,
                   const auto& visit) {
  for (long x2 = x2_lo; x2 <= x2_hi; ++x2)
    for (long y2 = y2_lo; y2 <= y2_hi; ++y2) {
      DiamondCenter c{{x2, y2}, k};
      if (c.valid()) visit(c);
    }
}

}  // namespace

bool DiamondCenter::valid() const {
  if (k < 1) return false;
  const bool x_half = is_odd(center.x2);
  const bool y_half = is_odd(center.y2);
  return k % 2 == 0 ? x_half == y_half : x_half != y_half;
}

std::vector<LatticePoint> z2_facet(const DiamondCenter& c) {
  require(c.valid(), "diamond center (" + std::to_string(c.center.x2) + "/2, " +
                         std::to_string(c.center.y2) + "/2) violates the parity rule for k=" +
                         std::to_string(c.k));
  std::vector<LatticePoint> points;
  const long k = c.k;
  for (long x = ceil_div(c.center.x2 - k, 2); 2 * x <= c.center.x2 + k; ++x) {
    const long slack = k - std::labs(2 * x - c.center.x2);
    for (long y = ceil_div(c.center.y2 - slack, 2); 2 * y <= c.center.y2 + slack; ++y)
      points.push_back({x, y});
  }
  return points;
}

Simplex z2_facet(const DiamondCenter& c, const FiniteMetricSpace& window) {
  std::vector<Vertex> vertices;
  for (auto p : z2_facet(c)) vertices.push_back(window.lattice_index(p));
  return Simplex(std::move(vertices));
}

bool cycle_closed_form_supported(int n, int k) {
  if (n < 3 || k < 1) return false;
  return n > 3 * k || (n == 3 * k && k >= 2) || (n == 3 * k - 1 && k >= 3);
}

bool torus_closed_form_supported(int n, int k) {
  if (n < 3 || k < 2) return false;
  return n > 3 * k || n == 3 * k || (n == 3 * k - 1 && k >= 3);
}

FacetSet cycle_facets(int n, int k) {
  if (!cycle_closed_form_supported(n, k))
    fail(ErrorKind::unsupported_regime,
         "no closed-form facets for VR(C_" + std::to_string(n) + ", " +
             std::to_string(k) + ")");
  auto at = [n](int i) { return static_cast<Vertex>(((i % n) + n) % n); };
  std::vector<Simplex> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> arc;
    for (int j = 0; j <= k; ++j) arc.push_back(at(i + j));
    out.emplace_back(std::move(arc));
    if (n == 3 * k) out.emplace_back(std::vector<Vertex>{at(i), at(i + k), at(i + 2 * k)});
    if (n == 3 * k - 1)
      out.emplace_back(
          std::vector<Vertex>{at(i), at(i + k), at(i + 2 * k - 1), at(i + 2 * k)});
  }
  return FacetSet::from(std::move(out), FacetSource::cycle_closed_form);
}

long interior_margin(int k) { return (k + 1) / 2; }

FacetSet z2_facets_in_window(const FiniteMetricSpace& window, int k) {
  require(window.kind() == SpaceKind::window, "z2 facets need a window space");
  check_scale(k);
  const Window& w = window.window_bounds();
  const long side = std::min(w.width(), w.height());
  if (side < 2L * k + 3)
    fail(ErrorKind::validation, "window side " + std::to_string(side) +
                                    " is below 2k+3 = " + std::to_string(2 * k + 3));
  const long margin = interior_margin(k);
  std::vector<Simplex> out;
  sweep_centers(2 * w.x_min - k, 2 * w.x_max + k, 2 * w.y_min - k, 2 * w.y_max + k, k,
                [&](const DiamondCenter& c) {
                  const auto points = z2_facet(c);
                  for (auto p : points)
                    if (!w.contains_with_margin(p, margin)) return;
                  std::vector<Vertex> vertices;
                  for (auto p : points) vertices.push_back(window.lattice_index(p));
                  out.emplace_back(std::move(vertices));
                });
  return FacetSet::from(std::move(out), FacetSource::z2_closed_form);
}

FacetSet interior_only(const FacetSet& facets, const FiniteMetricSpace& window,
                       long margin) {
  require(window.kind() == SpaceKind::window, "interior filter needs a window space");
  FacetSet kept{{}, facets.source};
  for (const auto& f : facets.facets) {
    const bool inside = std::all_of(f.vertices().begin(), f.vertices().end(), [&](Vertex v) {
      return window.window_bounds().contains_with_margin(window.lattice_point(v), margin);
    });
    if (inside) kept.facets.push_back(f);
  }
  return kept;
}

Simplex project_facet(std::span<const LatticePoint> points, int n) {
  std::vector<Vertex> vertices;
  for (auto p : points) {
    const auto t = reduce_mod(n, p);
    vertices.push_back(static_cast<Vertex>(t.row * n + t.col));
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(ErrorKind::validation,
         "projection to T_" + std::to_string(n) + " identifies two facet points");
  return Simplex(std::move(vertices));
}

FacetSet projected_planar_facets(int n, int k) {
  check_scale(k);
  require(n > 2 * k + 1, "planar facets project injectively only for n > 2k+1");
  std::vector<Simplex> out;
  sweep_centers(0, 2L * n - 1, 0, 2L * n - 1, k, [&](const DiamondCenter& c) {
    out.push_back(project_facet(z2_facet(c), n));
  });
  return FacetSet::from(std::move(out), FacetSource::torus_closed_form);
}

namespace {

// Each offset pattern laid along rows and along columns of T_{n,n}.
FacetSet row_family(int n, std::initializer_list<int> offsets) {
  std::vector<Simplex> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Vertex> along_x;
      std::vector<Vertex> along_y;
      for (int d : offsets) {
        along_x.push_back(static_cast<Vertex>(((a + d) % n) * n + b));
        along_y.push_back(static_cast<Vertex>(a * n + (b + d) % n));
      }
      out.emplace_back(std::move(along_x));
      out.emplace_back(std::move(along_y));
    }
  return FacetSet::from(std::move(out), FacetSource::torus_closed_form);
}

FacetSet merged(const FacetSet& a, const FacetSet& b) {
  std::vector<Simplex> all = a.facets;
  all.insert(all.end(), b.facets.begin(), b.facets.end());
  return FacetSet::from(std::move(all), FacetSource::torus_closed_form);
}

}  // namespace

FacetSet row_triangles(int k) {
  require(k >= 1, "scale must be positive");
  return row_family(3 * k, {0, k, 2 * k});
}

FacetSet row_tetrahedra(int k) {
  require(k >= 2, "scale must be at least 2");
  return row_family(3 * k - 1, {0, k, 2 * k - 1, 2 * k});
}

FacetSet torus_facets(int n, int k) {
  if (!torus_closed_form_supported(n, k))
    fail(ErrorKind::unsupported_regime,
         "no closed-form facets for VR(T_" + std::to_string(n) + ", " +
             std::to_string(k) + ")");
  auto projected = projected_planar_facets(n, k);
  if (n == 3 * k) return merged(projected, row_triangles(k));
  if (n == 3 * k - 1) return merged(projected, row_tetrahedra(k));
  return projected;
}

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& graph, const Limits& limits)
      : graph_(graph), limits_(limits), words_((graph.vertex_count() + 63) / 64) {}

  std::vector<Simplex> run() {
    Bits p(words_, 0);
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(p, Bits(words_, 0));
    return std::move(out_);
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  void expand(Bits p, Bits x) {
    if ((++calls_ & 0xffff) == 0) limits_.check_deadline();
    bool p_empty = true;
    bool x_empty = true;
    for (std::size_t w = 0; w < words_; ++w) {
      p_empty = p_empty && p[w] == 0;
      x_empty = x_empty && x[w] == 0;
    }
    if (p_empty) {
      if (x_empty) out_.emplace_back(clique_);
      return;
    }
    // Pivot with the most neighbors inside P.
    Vertex pivot = 0;
    int best = -1;
    for (std::size_t w = 0; w < words_; ++w)
      for (auto bits = p[w] | x[w]; bits != 0; bits &= bits - 1) {
        const auto u = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        const auto row = graph_.adjacency_bits(u);
        int count = 0;
        for (std::size_t i = 0; i < words_; ++i) count += std::popcount(p[i] & row[i]);
        if (count > best) {
          best = count;
          pivot = u;
        }
      }
    const auto pivot_row = graph_.adjacency_bits(pivot);
    Bits candidates(words_);
    for (std::size_t w = 0; w < words_; ++w) candidates[w] = p[w] & ~pivot_row[w];
    Bits next_p(words_);
    Bits next_x(words_);
    for (std::size_t w = 0; w < words_; ++w)
      for (auto bits = candidates[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        const auto row = graph_.adjacency_bits(v);
        for (std::size_t i = 0; i < words_; ++i) {
          next_p[i] = p[i] & row[i];
          next_x[i] = x[i] & row[i];
        }
        clique_.push_back(v);
        expand(next_p, next_x);
        clique_.pop_back();
        const auto bit = std::uint64_t{1} << (v % 64);
        p[w] &= ~bit;
        x[w] |= bit;
      }
  }

  const Graph& graph_;
  const Limits& limits_;
  std::size_t words_;
  std::vector<Vertex> clique_;
  std::vector<Simplex> out_;
  std::uint64_t calls_ = 0;
};

}  // namespace

FacetSet brute_force_facets(const Graph& graph, const Limits& limits) {
  if (graph.vertex_count() > limits.brute_force_vertex_budget)
    fail(ErrorKind::budget, "maximal-clique search on " +
                                std::to_string(graph.vertex_count()) +
                                " vertices exceeds the budget of " +
                                std::to_string(limits.brute_force_vertex_budget));
  if (graph.vertex_count() == 0) return {{}, FacetSource::brute_force};
  return FacetSet::from(BronKerbosch(graph, limits).run(), FacetSource::brute_force);
}

int simplex_diameter(const FiniteMetricSpace& space, const Simplex& s) {
  int diameter = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      diameter = std::max(diameter, space.distance(s[i], s[j]));
  return diameter;
}

}  // namespace torusrips

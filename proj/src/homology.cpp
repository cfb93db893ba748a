#include "torusrips/homology.hpp"

#include <algorithm>
#include <numeric>

namespace torusrips {

const char* to_string(Coefficients c) {
  return c == Coefficients::gf2 ? "gf2" : "integer";
}

Coefficients parse_coefficients(const std::string& text) {
  if (text == "gf2" || text == "GF2" || text == "z2") return Coefficients::gf2;
  if (text == "integer" || text == "Z" || text == "z") return Coefficients::integer;
  fail(ErrorKind::validation, "unknown coefficients '" + text + "'");
}

bool BettiProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(),
                     [](const auto& t) { return t.empty(); });
}

std::int64_t BettiProfile::betti_euler() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[d]);
  return chi;
}

namespace {

// Face indices of the d-simplex j, in vertex-drop order.
void face_rows(const FlagComplex& complex, int d, std::size_t j,
               std::vector<Vertex>& face, std::vector<std::uint32_t>& rows) {
  auto s = complex.simplex(d, j);
  rows.clear();
  face.resize(s.size() - 1);
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) face[w++] = s[i];
    const auto row = complex.index_of(face);
    if (row < 0) fail(ErrorKind::internal, "face missing from complex");
    rows.push_back(static_cast<std::uint32_t>(row));
  }
}

// In-place symmetric difference of sorted supports: a ^= b.
void add_column(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(scratch));
  a.swap(scratch);
}

void check_depth(const FlagComplex& complex, int needed) {
  if (needed > complex.max_dim() && complex.truncated())
    fail(ErrorKind::validation,
         "complex enumerated to dimension " +
             std::to_string(complex.max_dim()) + " but dimension " +
             std::to_string(needed) + " is required");
}

std::optional<int> profile_truncation(const FlagComplex& complex, int max_dim) {
  if (complex.truncated() || max_dim < complex.top_dim())
    return max_dim;
  return std::nullopt;
}

}  // namespace

IntegerMatrix signed_boundary_matrix(const FlagComplex& complex, int d,
                                     const std::vector<char>& skip) {
  require(d >= 1 && d <= complex.max_dim(),
          "boundary dimension " + std::to_string(d) + " out of range");
  IntegerMatrix m{complex.count(d - 1), 0, {}};
  std::vector<Vertex> face;
  std::vector<std::uint32_t> rows;
  for (std::size_t j = 0; j < complex.count(d); ++j) {
    if (!skip.empty() && skip[j]) continue;
    face_rows(complex, d, j, face, rows);
    auto& column = m.columns.emplace_back();
    for (std::size_t i = 0; i < rows.size(); ++i)
      column.emplace_back(rows[i], i % 2 == 0 ? 1 : -1);
    std::sort(column.begin(), column.end());
  }
  m.n_cols = m.columns.size();
  return m;
}

std::vector<std::uint64_t> gf2_boundary_ranks(const FlagComplex& complex,
                                              int top, const Limits& limits) {
  require(top >= 0 && top <= complex.max_dim(), "rank dimension out of range");
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  // Columns of the next-lower boundary known to reduce to zero.
  std::vector<char> cleared;
  std::vector<Vertex> face;
  std::vector<std::uint32_t> scratch;
  for (int d = top; d >= 1; --d) {
    const std::size_t n_cols = complex.count(d);
    const std::size_t n_rows = complex.count(d - 1);
    std::vector<std::int64_t> pivot_of_row(n_rows, -1);
    std::vector<std::vector<std::uint32_t>> reduced(n_cols);
    std::vector<char> next_cleared(n_rows, 0);
    std::vector<std::uint32_t> column;
    std::uint64_t rank = 0;
    for (std::size_t j = 0; j < n_cols; ++j) {
      if ((j & 0xfff) == 0) limits.check_deadline();
      if (!cleared.empty() && cleared[j]) continue;
      face_rows(complex, d, j, face, column);
      std::sort(column.begin(), column.end());
      while (!column.empty()) {
        const auto other = pivot_of_row[column.back()];
        if (other < 0) break;
        add_column(column, reduced[static_cast<std::size_t>(other)], scratch);
      }
      if (column.empty()) continue;
      pivot_of_row[column.back()] = static_cast<std::int64_t>(j);
      next_cleared[column.back()] = 1;
      reduced[j] = column;
      ++rank;
    }
    ranks[static_cast<std::size_t>(d)] = rank;
    cleared.swap(next_cleared);
  }
  return ranks;
}

BettiProfile betti_gf2(const FlagComplex& complex, int max_betti_dim,
                       const Limits& limits) {
  require(max_betti_dim >= 0, "max_betti_dim must be nonnegative");
  check_depth(complex, max_betti_dim + 1);
  const int top = std::min(max_betti_dim + 1, complex.max_dim());
  const auto ranks = gf2_boundary_ranks(complex, top, limits);
  auto rank = [&](int d) -> std::uint64_t {
    return d >= 1 && d <= top ? ranks[static_cast<std::size_t>(d)] : 0;
  };

  BettiProfile profile;
  profile.coefficients = Coefficients::gf2;
  for (int d = 0; d <= max_betti_dim; ++d)
    profile.betti.push_back(complex.count(d) - rank(d) - rank(d + 1));
  profile.torsion.assign(profile.betti.size(), {});
  if (!complex.truncated()) profile.euler = euler_characteristic(complex);
  profile.truncated_at = profile_truncation(complex, max_betti_dim);
  return profile;
}

BettiProfile homology_integer(const FlagComplex& complex, int max_dim,
                              const Limits& limits) {
  require(max_dim >= 0, "max_dim must be nonnegative");
  check_depth(complex, max_dim + 1);
  const int top = std::min(max_dim + 1, complex.max_dim());
  std::vector<SmithResult> smith(static_cast<std::size_t>(top) + 2);
  std::vector<char> cleared;
  for (int d = top; d >= 1; --d) {
    limits.check_deadline();
    auto& result = smith[static_cast<std::size_t>(d)];
    if (complex.count(d) > 0)
      result = smith_normal_form(signed_boundary_matrix(complex, d, cleared), limits);
    cleared.assign(complex.count(d - 1), 0);
    for (auto r : result.clearable_rows) cleared[r] = 1;
  }
  auto rank = [&](int d) -> std::uint64_t {
    return d >= 1 && d <= top ? smith[static_cast<std::size_t>(d)].rank : 0;
  };

  BettiProfile profile;
  profile.coefficients = Coefficients::integer;
  for (int d = 0; d <= max_dim; ++d) {
    profile.betti.push_back(complex.count(d) - rank(d) - rank(d + 1));
    profile.torsion.push_back(d + 1 <= top
                                  ? smith[static_cast<std::size_t>(d + 1)].torsion()
                                  : std::vector<mpz_class>{});
  }
  if (!complex.truncated()) profile.euler = euler_characteristic(complex);
  profile.truncated_at = profile_truncation(complex, max_dim);
  return profile;
}

BettiProfile expected_cycle_profile(int n, int k) {
  require(n >= 3, "cycle size must be at least 3");
  require(k >= 0, "scale must be nonnegative");
  BettiProfile profile;
  profile.betti = {1};
  if (2 * k < n) {
    const long nn = n;
    const long kk = k;
    for (long l = 0;; ++l) {
      // k == l n / (2l+1)
      if (kk * (2 * l + 1) == l * nn) {
        const auto dim = static_cast<std::size_t>(2 * l);
        const auto spheres = static_cast<std::uint64_t>(nn - 2 * kk - 1);
        profile.betti.resize(dim + 1, 0);
        profile.betti[dim] += spheres;
        break;
      }
      // l n/(2l+1) < k < (l+1) n/(2l+3)
      if (l * nn < kk * (2 * l + 1) && kk * (2 * l + 3) < (l + 1) * nn) {
        const auto dim = static_cast<std::size_t>(2 * l + 1);
        profile.betti.resize(dim + 1, 0);
        profile.betti[dim] = 1;
        break;
      }
      if (l > kk + 1) fail(ErrorKind::internal, "cycle regime not found");
    }
  }
  profile.torsion.assign(profile.betti.size(), {});
  profile.euler = profile.betti_euler();
  return profile;
}

std::size_t component_count(const Graph& graph) {
  std::vector<Vertex> parent(graph.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = graph.vertex_count();
  for (Vertex u = 0; u < graph.vertex_count(); ++u)
    for (Vertex v : graph.neighbors(u)) {
      const Vertex a = find(u);
      const Vertex b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

}  // namespace torusrips

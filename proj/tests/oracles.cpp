#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<int>> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u])
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

std::vector<std::vector<std::uint32_t>> cycle_graph(int n) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[i].push_back((i + n - 1) % n);
  }
  return adj;
}

std::vector<std::vector<std::uint32_t>> torus_grid_graph(int n) {
  std::vector<std::vector<std::uint32_t>> adj(n * n);
  auto id = [n](int r, int c) { return static_cast<std::uint32_t>(((r + n) % n) * n + (c + n) % n); };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      adj[id(r, c)] = {id(r + 1, c), id(r - 1, c), id(r, c + 1), id(r, c - 1)};
  return adj;
}

AdjacencyMatrix threshold(const std::vector<std::vector<int>>& dist, int k) {
  const std::size_t n = dist.size();
  AdjacencyMatrix adj(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) adj[u][v] = u != v && dist[u][v] <= k;
  return adj;
}

namespace {

bool extends(const AdjacencyMatrix& adj, const Clique& c, std::uint32_t v) {
  for (auto u : c)
    if (!adj[u][v]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Clique>> cliques_by_size(const AdjacencyMatrix& adj, std::size_t max_size) {
  std::vector<std::vector<Clique>> out(max_size + 1);
  std::function<void(Clique&)> grow = [&](Clique& c) {
    out[c.size()].push_back(c);
    if (c.size() == max_size) return;
    const std::uint32_t start = c.empty() ? 0 : c.back() + 1;
    for (std::uint32_t v = start; v < adj.size(); ++v)
      if (extends(adj, c, v)) {
        c.push_back(v);
        grow(c);
        c.pop_back();
      }
  };
  Clique c;
  grow(c);
  return out;
}

std::vector<Clique> maximal_cliques(const AdjacencyMatrix& adj) {
  const auto all = cliques_by_size(adj, adj.size());
  std::vector<Clique> out;
  for (const auto& level : all)
    for (const auto& c : level) {
      if (c.empty()) continue;
      bool maximal = true;
      for (std::uint32_t v = 0; v < adj.size() && maximal; ++v)
        if (!std::binary_search(c.begin(), c.end(), v) && extends(adj, c, v)) maximal = false;
      if (maximal) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t gf2_rank(std::vector<std::vector<char>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = c; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> gf2_betti(const AdjacencyMatrix& adj, int max_dim) {
  const auto cliques = cliques_by_size(adj, static_cast<std::size_t>(max_dim) + 2);
  // rank[d] = rank of the boundary from d-simplices (d+1 vertices) to (d-1)-simplices.
  std::vector<std::size_t> rank(max_dim + 3, 0);
  for (int d = 1; d <= max_dim + 1; ++d) {
    const auto& faces = cliques[d];
    const auto& cells = cliques[d + 1];
    if (cells.empty() || faces.empty()) continue;
    std::vector<std::vector<char>> m(faces.size(), std::vector<char>(cells.size(), 0));
    for (std::size_t j = 0; j < cells.size(); ++j)
      for (std::size_t drop = 0; drop < cells[j].size(); ++drop) {
        Clique f = cells[j];
        f.erase(f.begin() + static_cast<long>(drop));
        const auto it = std::lower_bound(faces.begin(), faces.end(), f);
        m[static_cast<std::size_t>(it - faces.begin())][j] = 1;
      }
    rank[d] = gf2_rank(std::move(m));
  }
  std::vector<std::uint64_t> betti(max_dim + 1);
  for (int d = 0; d <= max_dim; ++d)
    betti[d] = cliques[d + 1].size() - rank[d] - rank[d + 1];
  return betti;
}

__int128 determinant(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  __int128 sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> factors;
  __int128 previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    __int128 g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<__int128>> minor(k, std::vector<__int128>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rs[i]][cs[j]];
        g = gcd128(g, determinant(std::move(minor)));
      });
    });
    if (g == 0) break;
    factors.push_back(static_cast<std::int64_t>(g / previous));
    previous = g;
  }
  return factors;
}

std::vector<std::uint64_t> cycle_betti(int n, int k) {
  if (k == 0) return {static_cast<std::uint64_t>(n)};
  if (2 * k >= n) return {1};
  for (int l = 0;; ++l) {
    // Compare k/n with l/(2l+1) and (l+1)/(2l+3) in integers.
    const long lhs = static_cast<long>(k) * (2 * l + 1);
    const long rhs = static_cast<long>(k) * (2 * l + 3);
    if (lhs == static_cast<long>(l) * n) {
      std::vector<std::uint64_t> b(2 * l + 1, 0);
      b[0] = 1;
      b[2 * l] += static_cast<std::uint64_t>(n - 2 * k - 1);
      while (b.size() > 1 && b.back() == 0) b.pop_back();
      return b;
    }
    if (lhs > static_cast<long>(l) * n && rhs < static_cast<long>(l + 1) * n) {
      std::vector<std::uint64_t> b(2 * l + 2, 0);
      b[0] = 1;
      b[2 * l + 1] = 1;
      return b;
    }
    if (l > n) throw std::logic_error("cycle ratio not bracketed");
  }
}

std::size_t components(const AdjacencyMatrix& adj) {
  std::vector<char> seen(adj.size(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < adj.size(); ++v)
        if (adj[u][v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return count;
}

}  // namespace oracle

#include "torusrips/complex.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace torusrips {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {
  finalize();
}

Graph Graph::from_edges(std::size_t vertex_count,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  for (auto [u, v] : edges) {
    require(u < vertex_count && v < vertex_count, "edge endpoint out of range");
    require(u != v, "self-loops are not allowed");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  g.finalize();
  return g;
}

void Graph::finalize() {
  const std::size_t n = adjacency_.size();
  bits_.assign(n, std::vector<std::uint64_t>(words_for(n), 0));
  for (std::size_t u = 0; u < n; ++u)
    for (Vertex v : adjacency_[u])
      bits_[u][v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return (bits_[u][v / kWordBits] >> (v % kWordBits)) & 1U;
}

bool Graph::is_complete() const {
  const std::size_t n = adjacency_.size();
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [n](const auto& list) { return list.size() + 1 == n; });
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  require(perm.size() == vertex_count(), "permutation size mismatch");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) edges.emplace_back(perm[u], perm[v]);
  return from_edges(vertex_count(), edges);
}

Graph vr_graph(const FiniteMetricSpace& space, int k) {
  require(k >= 0, "scale k must be nonnegative");
  const auto n = static_cast<Vertex>(space.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (space.distance(u, v) <= k) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  require(!vertices_.empty(), "a simplex needs at least one vertex");
  require(std::adjacent_find(vertices_.begin(), vertices_.end()) ==
              vertices_.end(),
          "simplex has a repeated vertex");
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

std::ostream& operator<<(std::ostream& out, const Simplex& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  return out;
}

FlagComplex::FlagComplex(Graph graph, int max_dim,
                         std::vector<std::vector<Vertex>> lists, bool truncated)
    : graph_(std::move(graph)),
      max_dim_(max_dim),
      lists_(std::move(lists)),
      truncated_(truncated) {}

int FlagComplex::top_dim() const {
  for (int d = max_dim_; d >= 0; --d)
    if (count(d) > 0) return d;
  return -1;
}

std::size_t FlagComplex::count(int d) const {
  if (d < 0 || d > max_dim_) return 0;
  return lists_[d].size() / static_cast<std::size_t>(d + 1);
}

std::vector<std::uint64_t> FlagComplex::counts() const {
  std::vector<std::uint64_t> result;
  for (int d = 0; d <= max_dim_; ++d) result.push_back(count(d));
  return result;
}

std::span<const Vertex> FlagComplex::simplex(int d, std::size_t i) const {
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  return std::span<const Vertex>(lists_.at(d)).subspan(i * width, width);
}

std::int64_t FlagComplex::index_of(std::span<const Vertex> vertices) const {
  const int d = static_cast<int>(vertices.size()) - 1;
  if (d < 0 || d > max_dim_) return -1;
  std::size_t lo = 0;
  std::size_t hi = count(d);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto s = simplex(d, mid);
    if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(),
                                     vertices.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(d)) {
    auto s = simplex(d, lo);
    if (std::equal(s.begin(), s.end(), vertices.begin(), vertices.end()))
      return static_cast<std::int64_t>(lo);
  }
  return -1;
}

namespace {

// Appends every one-vertex extension of simplices [begin, end) of `parents`.
// Returns false if the shared budget counter overflows.
bool extend_range(const Graph& graph, std::span<const Vertex> parents,
                  std::size_t width, std::size_t begin, std::size_t end,
                  std::vector<Vertex>& out, std::atomic<std::uint64_t>& total,
                  std::uint64_t budget, const Limits& limits) {
  std::vector<Vertex> candidates;
  std::uint64_t local = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if ((i & 0x3fff) == 0) limits.check_deadline();
    auto s = parents.subspan(i * width, width);
    const Vertex last = s.back();
    candidates.clear();
    for (Vertex c : graph.neighbors(last)) {
      if (c <= last) continue;
      bool ok = true;
      for (std::size_t j = 0; j + 1 < width && ok; ++j)
        ok = graph.adjacent(s[j], c);
      if (ok) candidates.push_back(c);
    }
    for (Vertex c : candidates) {
      out.insert(out.end(), s.begin(), s.end());
      out.push_back(c);
    }
    local += candidates.size();
    if (local >= 4096) {
      if (total.fetch_add(local) + local > budget) return false;
      local = 0;
    }
  }
  return total.fetch_add(local) + local <= budget;
}

bool has_extension(const Graph& graph, std::span<const Vertex> list,
                   std::size_t width) {
  const std::size_t count = list.size() / width;
  for (std::size_t i = 0; i < count; ++i) {
    auto s = list.subspan(i * width, width);
    for (Vertex c : graph.neighbors(s.front())) {
      bool ok = true;
      for (std::size_t j = 1; j < width && ok; ++j)
        ok = c != s[j] && graph.adjacent(s[j], c);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

namespace {

// With trim set, stops at the first empty dimension and caps the complex at
// the last nonempty one.
FlagComplex enumerate(const Graph& graph, int max_dim, bool trim,
                      const Limits& limits) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<Vertex>> lists;
  lists.emplace_back(n);
  for (Vertex v = 0; v < n; ++v) lists[0][v] = v;

  std::atomic<std::uint64_t> total{n};
  if (total > limits.simplex_budget)
    fail(ErrorKind::budget, "simplex budget exceeded at dimension 0");

  const unsigned threads = std::max(1U, limits.threads);
  for (int d = 0; d < max_dim; ++d) {
    const std::size_t width = static_cast<std::size_t>(d) + 1;
    std::span<const Vertex> parents = lists[d];
    const std::size_t count = parents.size() / width;
    if (count == 0) {
      if (trim) {
        max_dim = std::max(d - 1, 0);
        lists.resize(static_cast<std::size_t>(max_dim) + 1);
        break;
      }
      lists.emplace_back();
      continue;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::vector<Vertex>> pieces(workers);
    std::vector<char> within(workers, 1);
    auto run = [&](unsigned w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      within[w] = extend_range(graph, parents, width, begin, end, pieces[w],
                               total, limits.simplex_budget, limits);
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    if (std::find(within.begin(), within.end(), 0) != within.end())
      fail(ErrorKind::budget, "simplex budget of " +
                                  std::to_string(limits.simplex_budget) +
                                  " exceeded at dimension " +
                                  std::to_string(d + 1));
    std::vector<Vertex> next;
    std::size_t size = 0;
    for (const auto& p : pieces) size += p.size();
    next.reserve(size);
    for (auto& p : pieces) next.insert(next.end(), p.begin(), p.end());
    lists.push_back(std::move(next));
  }
  const std::size_t top_width = static_cast<std::size_t>(max_dim) + 1;
  const bool truncated = has_extension(graph, lists[max_dim], top_width);
  return FlagComplex(graph, max_dim, std::move(lists), truncated);
}

}  // namespace

FlagComplex enumerate_simplices(const Graph& graph, int max_dim,
                                const Limits& limits) {
  require(max_dim >= 0, "max_dim must be nonnegative");
  return enumerate(graph, max_dim, false, limits);
}

FlagComplex enumerate_all_simplices(const Graph& graph, const Limits& limits) {
  const int cap = std::max<int>(static_cast<int>(graph.vertex_count()) - 1, 0);
  return enumerate(graph, cap, true, limits);
}

std::size_t SparseBitMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

SparseBitMatrix multiply(const SparseBitMatrix& a, const SparseBitMatrix& b) {
  require(a.n_cols == b.n_rows, "matrix shapes do not compose");
  SparseBitMatrix result{a.n_rows, b.n_cols, {}};
  result.columns.resize(b.n_cols);
  std::vector<char> acc(a.n_rows, 0);
  for (std::size_t j = 0; j < b.n_cols; ++j) {
    std::vector<std::uint32_t> touched;
    for (auto mid : b.columns[j])
      for (auto row : a.columns[mid]) {
        if (!acc[row]) touched.push_back(row);
        acc[row] ^= 1;
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto row : touched) {
      if (acc[row]) result.columns[j].push_back(row);
      acc[row] = 0;
    }
  }
  return result;
}

bool is_zero(const SparseBitMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(),
                     [](const auto& c) { return c.empty(); });
}

SparseBitMatrix boundary_matrix(const FlagComplex& complex, int d) {
  require(d >= 1 && d <= complex.max_dim(),
          "boundary dimension " + std::to_string(d) + " out of range");
  SparseBitMatrix m{complex.count(d - 1), complex.count(d), {}};
  m.columns.resize(m.n_cols);
  std::vector<Vertex> face(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < m.n_cols; ++j) {
    auto s = complex.simplex(d, j);
    auto& column = m.columns[j];
    column.reserve(s.size());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      const auto row = complex.index_of(face);
      if (row < 0) fail(ErrorKind::internal, "face missing from complex");
      column.push_back(static_cast<std::uint32_t>(row));
    }
    std::sort(column.begin(), column.end());
  }
  return m;
}

std::int64_t euler_characteristic(const FlagComplex& complex) {
  if (complex.truncated())
    fail(ErrorKind::validation,
         "Euler characteristic needs an untruncated complex (cap " +
             std::to_string(complex.max_dim()) + " binds)");
  std::int64_t chi = 0;
  for (int d = 0; d <= complex.max_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.count(d));
  return chi;
}

void write_simplex_list(std::ostream& out, const SimplexListHeader& header,
                        const std::vector<Simplex>& simplices) {
  out << "# space " << header.space << '\n';
  out << "# n " << header.n << '\n';
  out << "# k " << header.k << '\n';
  out << "# dim " << header.dim << '\n';
  for (const auto& [key, value] : header.extra)
    out << "# " << key << ' ' << value << '\n';
  std::vector<Simplex> sorted = simplices;
  std::sort(sorted.begin(), sorted.end(), [](const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                        b.vertices().begin(), b.vertices().end());
  });
  for (const auto& s : sorted) out << s << '\n';
}

std::vector<Simplex> read_simplex_list(std::istream& in,
                                       SimplexListHeader* header) {
  std::vector<Simplex> result;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header) continue;
      std::istringstream fields(line.substr(1));
      std::string key;
      std::string value;
      fields >> key;
      std::getline(fields >> std::ws, value);
      if (key == "space") header->space = value;
      else if (key == "n") header->n = std::stoi(value);
      else if (key == "k") header->k = std::stoi(value);
      else if (key == "dim") header->dim = value;
      else header->extra.emplace_back(key, value);
      continue;
    }
    std::istringstream fields(line);
    std::vector<Vertex> vertices;
    long long v = 0;
    while (fields >> v) {
      if (v < 0) fail(ErrorKind::io, "negative vertex in simplex list");
      vertices.push_back(static_cast<Vertex>(v));
    }
    if (!fields.eof()) fail(ErrorKind::io, "malformed simplex line: " + line);
    result.emplace_back(std::move(vertices));
  }
  return result;
}

}  // namespace torusrips

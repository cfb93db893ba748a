#include "torusrips/snf.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace torusrips {

std::vector<mpz_class> SmithResult::torsion() const {
  std::vector<mpz_class> result;
  for (const auto& d : diagonal)
    if (d > 1) result.push_back(d);
  return result;
}

namespace {

struct Overflow {};
struct NonUnitPivot {};

// Word arithmetic that reports overflow instead of wrapping.
struct CheckedWord {
  using Int = std::int64_t;
  static Int mul_sub(Int a, Int f, Int b) {
    Int prod = 0;
    Int out = 0;
    if (__builtin_mul_overflow(f, b, &prod)) throw Overflow{};
    if (__builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  static bool is_unit(Int v) { return v == 1 || v == -1; }
  static mpz_class to_mpz(Int v) { return mpz_class(static_cast<long>(v)); }
  static Int from_word(std::int64_t v) { return v; }
};

struct BigInt {
  using Int = mpz_class;
  static Int mul_sub(const Int& a, const Int& f, const Int& b) {
    return a - f * b;
  }
  static bool is_unit(const Int& v) { return v == 1 || v == -1; }
  static mpz_class to_mpz(const Int& v) { return v; }
  static Int from_word(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
};

template <class Arith>
class SparseEliminator {
  using Int = typename Arith::Int;

  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Int> vals;
  };

 public:
  SparseEliminator(const IntegerMatrix& m, const Limits& limits)
      : limits_(limits),
        rows_(m.n_rows),
        row_alive_(m.n_rows, 1),
        col_rows_(m.n_cols),
        n_cols_(m.n_cols) {
    for (std::uint32_t j = 0; j < m.n_cols; ++j)
      for (auto [r, v] : m.columns[j]) {
        rows_[r].cols.push_back(j);
        rows_[r].vals.push_back(Arith::from_word(v));
        col_rows_[j].push_back(r);
      }
  }

  SmithResult run() {
    std::vector<std::uint32_t> deferred;
    for (std::uint32_t j = 0; j < n_cols_; ++j) {
      if ((j & 0xfff) == 0) limits_.check_deadline();
      if (eliminate_column(j) == Outcome::deferred) deferred.push_back(j);
    }
    // Row operations can turn a deferred column's entries into units.
    bool progress = true;
    while (progress && !deferred.empty()) {
      progress = false;
      std::vector<std::uint32_t> still;
      for (auto j : deferred) {
        if (eliminate_column(j) == Outcome::deferred)
          still.push_back(j);
        else
          progress = true;
      }
      deferred.swap(still);
    }
    return finish(deferred);
  }

 private:
  enum class Outcome { pivoted, zero, deferred };

  const Int* entry(std::uint32_t r, std::uint32_t j) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), j);
    if (it == row.cols.end() || *it != j) return nullptr;
    return &row.vals[static_cast<std::size_t>(it - row.cols.begin())];
  }

  Outcome eliminate_column(std::uint32_t j) {
    auto& list = col_rows_[j];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<std::uint32_t> live;
    for (auto r : list)
      if (row_alive_[r] && entry(r, j)) live.push_back(r);
    list = live;
    if (live.empty()) return Outcome::zero;

    std::int64_t pivot = -1;
    for (auto r : live)
      if (Arith::is_unit(*entry(r, j)) &&
          (pivot < 0 || rows_[r].cols.size() <
                            rows_[static_cast<std::size_t>(pivot)].cols.size()))
        pivot = r;
    if (pivot < 0) return Outcome::deferred;

    const auto p = static_cast<std::uint32_t>(pivot);
    const Int unit = *entry(p, j);
    for (auto r : live) {
      if (r == p) continue;
      // unit^{-1} == unit for unit = +-1.
      const Int factor = Arith::mul_sub(Arith::from_word(0), *entry(r, j), -unit);
      subtract_multiple(r, factor, p);
    }
    row_alive_[p] = 0;
    list.clear();
    pivot_rows_.push_back(p);
    ++pivots_;
    return Outcome::pivoted;
  }

  // rows_[target] -= factor * rows_[source]
  void subtract_multiple(std::uint32_t target, const Int& factor,
                         std::uint32_t source) {
    const Row& src = rows_[source];
    Row& dst = rows_[target];
    Row out;
    out.cols.reserve(dst.cols.size() + src.cols.size());
    out.vals.reserve(dst.cols.size() + src.cols.size());
    std::size_t a = 0;
    std::size_t b = 0;
    const Int zero = Arith::from_word(0);
    while (a < dst.cols.size() || b < src.cols.size()) {
      if (b == src.cols.size() ||
          (a < dst.cols.size() && dst.cols[a] < src.cols[b])) {
        out.cols.push_back(dst.cols[a]);
        out.vals.push_back(std::move(dst.vals[a]));
        ++a;
      } else if (a == dst.cols.size() || src.cols[b] < dst.cols[a]) {
        Int v = Arith::mul_sub(zero, factor, src.vals[b]);
        out.cols.push_back(src.cols[b]);
        out.vals.push_back(std::move(v));
        col_rows_[src.cols[b]].push_back(target);
        ++b;
      } else {
        Int v = Arith::mul_sub(dst.vals[a], factor, src.vals[b]);
        if (v != 0) {
          out.cols.push_back(dst.cols[a]);
          out.vals.push_back(std::move(v));
        }
        ++a;
        ++b;
      }
    }
    dst = std::move(out);
  }

  SmithResult finish(const std::vector<std::uint32_t>& deferred) {
    SmithResult result;
    result.rank = pivots_;
    result.diagonal.assign(pivots_, mpz_class(1));
    result.clearable_rows = pivot_rows_;
    std::sort(result.clearable_rows.begin(), result.clearable_rows.end());
    if (deferred.empty()) return result;

    std::vector<std::int64_t> col_slot(n_cols_, -1);
    for (std::size_t i = 0; i < deferred.size(); ++i)
      col_slot[deferred[i]] = static_cast<std::int64_t>(i);
    DenseIntegerMatrix block;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r] || rows_[r].cols.empty()) continue;
      std::vector<mpz_class> dense(deferred.size());
      bool any = false;
      for (std::size_t e = 0; e < rows_[r].cols.size(); ++e) {
        const auto slot = col_slot[rows_[r].cols[e]];
        if (slot < 0) continue;
        dense[static_cast<std::size_t>(slot)] = Arith::to_mpz(rows_[r].vals[e]);
        any = true;
      }
      if (any) block.push_back(std::move(dense));
    }
    if (block.size() > limits_.snf_dense_budget ||
        deferred.size() > limits_.snf_dense_budget)
      fail(ErrorKind::budget, "dense Smith block of " +
                                  std::to_string(block.size()) + "x" +
                                  std::to_string(deferred.size()) +
                                  " exceeds budget");
    SmithResult tail = dense_smith_normal_form(std::move(block));
    result.rank += tail.rank;
    for (auto& d : tail.diagonal) result.diagonal.push_back(std::move(d));
    return result;
  }

  const Limits& limits_;
  std::vector<Row> rows_;
  std::vector<char> row_alive_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::size_t n_cols_;
  std::size_t pivots_ = 0;
  std::vector<std::uint32_t> pivot_rows_;
};

// Column reduction keyed on the lowest row; gives up on the first pivot that
// is not +-1.
template <class Arith>
SmithResult reduce_unit_columns(const IntegerMatrix& m, const Limits& limits) {
  using Int = typename Arith::Int;
  using Column = std::vector<std::pair<std::uint32_t, Int>>;
  std::vector<std::int64_t> pivot_of_row(m.n_rows, -1);
  std::vector<Column> reduced(m.n_cols);
  Column column;
  Column scratch;
  SmithResult result;
  const Int zero = Arith::from_word(0);
  for (std::size_t j = 0; j < m.n_cols; ++j) {
    if ((j & 0xfff) == 0) limits.check_deadline();
    column.clear();
    for (auto [r, v] : m.columns[j]) column.emplace_back(r, Arith::from_word(v));
    while (!column.empty()) {
      const auto other = pivot_of_row[column.back().first];
      if (other < 0) break;
      const Column& piv = reduced[static_cast<std::size_t>(other)];
      // Stored pivots are units, so unit^{-1} == unit.
      const Int factor = Arith::mul_sub(zero, column.back().second, -piv.back().second);
      scratch.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < column.size() || b < piv.size()) {
        if (b == piv.size() || (a < column.size() && column[a].first < piv[b].first)) {
          scratch.push_back(std::move(column[a++]));
        } else if (a == column.size() || piv[b].first < column[a].first) {
          scratch.emplace_back(piv[b].first, Arith::mul_sub(zero, factor, piv[b].second));
          ++b;
        } else {
          Int v = Arith::mul_sub(column[a].second, factor, piv[b].second);
          if (v != 0) scratch.emplace_back(column[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      column.swap(scratch);
    }
    if (column.empty()) continue;
    if (!Arith::is_unit(column.back().second)) throw NonUnitPivot{};
    pivot_of_row[column.back().first] = static_cast<std::int64_t>(j);
    result.clearable_rows.push_back(column.back().first);
    reduced[j] = column;
  }
  result.rank = result.clearable_rows.size();
  result.diagonal.assign(result.rank, mpz_class(1));
  std::sort(result.clearable_rows.begin(), result.clearable_rows.end());
  return result;
}

void swap_columns(DenseIntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

SmithResult dense_smith_normal_form(DenseIntegerMatrix a) {
  SmithResult result;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    require(row.size() == cols, "ragged dense matrix");

  const mpz_class zero(0);
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Entry of least absolute value in the trailing block.
    auto place_min = [&](bool whole_block) {
      std::size_t bi = rows;
      std::size_t bj = cols;
      mpz_class best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          if (bi == rows || abs(a[i][j]) < best) {
            best = abs(a[i][j]);
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return false;
      std::swap(a[t], a[bi]);
      swap_columns(a, t, bj);
      return true;
    };
    if (!place_min(true)) break;

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        place_min(false);
        continue;
      }
      // Pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(),
                                                a[t][t].get_mpz_t())) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    result.diagonal.push_back(abs(a[t][t]));
    ++result.rank;
  }
  return result;
}

namespace {

void check_budget(const IntegerMatrix& matrix, const Limits& limits) {
  require(matrix.columns.size() == matrix.n_cols, "column count mismatch");
  if (matrix.n_cols > limits.snf_column_budget)
    fail(ErrorKind::budget, "matrix with " + std::to_string(matrix.n_cols) +
                                " columns exceeds the Smith budget of " +
                                std::to_string(limits.snf_column_budget));
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& matrix, const Limits& limits) {
  check_budget(matrix, limits);
  try {
    try {
      return reduce_unit_columns<CheckedWord>(matrix, limits);
    } catch (const Overflow&) {
      return reduce_unit_columns<BigInt>(matrix, limits);
    }
  } catch (const NonUnitPivot&) {
    return smith_normal_form_by_elimination(matrix, limits);
  }
}

SmithResult smith_normal_form_by_elimination(const IntegerMatrix& matrix,
                                             const Limits& limits) {
  check_budget(matrix, limits);
  try {
    return SparseEliminator<CheckedWord>(matrix, limits).run();
  } catch (const Overflow&) {
    return SparseEliminator<BigInt>(matrix, limits).run();
  }
}

}  // namespace torusrips

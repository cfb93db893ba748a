#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "torusrips/error.hpp"

namespace torusrips {

/// Sparse integer matrix, column-major, entries kept in machine words.
///
/// Boundary matrices only carry entries in {-1, 0, 1}; the reduction itself
/// promotes to arbitrary precision when a word would overflow.
struct IntegerMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  // Per column: (row, value) with strictly ascending rows and nonzero values.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

using DenseIntegerMatrix = std::vector<std::vector<mpz_class>>;

struct SmithResult {
  std::size_t rank = 0;
  // Nonzero diagonal entries d_1 | d_2 | ... | d_rank, each positive.
  std::vector<mpz_class> diagonal;
  // Rows r for which the column space holds a vector with coefficient +-1 at
  // r and zeros at every other listed row. Such rows index chains that can be
  // swapped for cycles by a unimodular change of basis, so the matching
  // columns of the next boundary map may be dropped.
  std::vector<std::uint32_t> clearable_rows;

  std::vector<mpz_class> torsion() const;
};

/// Smith normal form diagonal of a sparse integer matrix.
///
/// First tries a left-to-right column reduction keyed on the lowest nonzero
/// row; if every pivot it meets is +-1 the matrix is unimodularly equivalent
/// to an identity block and no further work is needed. Otherwise unit pivots
/// are eliminated on the sparse row structure and the leftover block is
/// diagonalized densely with exact integers.
SmithResult smith_normal_form(const IntegerMatrix& matrix,
                              const Limits& limits = {});

/// The general path of smith_normal_form, without the column fast path.
SmithResult smith_normal_form_by_elimination(const IntegerMatrix& matrix,
                                             const Limits& limits = {});

/// Dense diagonalization by unimodular row and column operations, always
/// pivoting on the entry of least absolute value.
SmithResult dense_smith_normal_form(DenseIntegerMatrix a);

}  // namespace torusrips

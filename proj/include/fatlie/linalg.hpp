#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fatlie/rational.hpp"

namespace fatlie {

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t n);
/// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& a);
/// Entry at `index` (zero if absent).
Rational entry(const SparseVec& v, std::size_t index);

/// Accumulates sparse linear combinations into a dense scratch row and
/// extracts the nonzero entries in index order.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), touched_(n, 0) {}
  void add(std::size_t i, const Rational& a);
  void add_scaled(const SparseVec& x, const Rational& a);
  SparseVec take();

 private:
  std::vector<Rational> values_;
  std::vector<char> touched_;
  std::vector<std::size_t> support_;
};

/// Per-thread accumulator of width n, reused across calls. Callers must not
/// hold two at once for the same width.
Accumulator& scratch_accumulator(std::size_t n);

/// Row space kept in reduced row-echelon form. The pivot of a row is its
/// first nonzero column; pivots are 1 and every other row is zero there.
/// Two equal spans have identical rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols = 0) : ncols_(ncols), pivot_row_(ncols, npos) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  /// Rows sorted by pivot column.
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;
  bool is_pivot(std::size_t col) const { return pivot_row_.at(col) != npos; }

  /// Adds `v` to the span. Returns false when it was already contained.
  bool insert(const SparseVec& v);
  /// Canonical remainder of `v`, supported on non-pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Coefficients c with v = sum c_k rows[k], assuming v lies in the span.
  SparseVec coordinates(const SparseVec& v) const;

  /// Basis of { u : r . u = 0 for every row r }, one vector per free column.
  std::vector<SparseVec> nullspace() const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t ncols_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace fatlie

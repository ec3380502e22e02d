#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wknots/rational.hpp"

namespace wk {

/// Sparse vector: strictly increasing column indices, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Sorts, merges duplicate columns and drops zeros.
SparseVec make_sparse(std::vector<std::pair<std::size_t, Rational>> entries);

/// Reduced row-echelon form of a row space. Pivots ascend; each row has a leading 1
/// and zeros in every other pivot column.
struct EchelonForm {
  std::size_t dimension = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseVec> rows;

  std::size_t rank() const { return pivots.size(); }
};

/// Incremental semi-echelon reducer. Each stored row is monic with a distinct
/// leading column; normal forms modulo the row space are unique because the set
/// of leading columns depends only on the subspace.
class RowReducer {
 public:
  explicit RowReducer(std::size_t dimension) : dimension_(dimension) {}

  /// Adds a row; returns true when it enlarged the span.
  bool add(SparseVec row);
  /// The unique representative of v modulo the span supported on non-leading columns.
  SparseVec normal_form(const SparseVec& v) const;
  bool in_span(const SparseVec& v) const { return normal_form(v).empty(); }

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  /// Columns that carry no leading entry, ascending.
  std::vector<std::size_t> free_columns() const;
  EchelonForm to_rref() const;

 private:
  std::size_t dimension_;
  std::unordered_map<std::size_t, SparseVec> rows_;
};

/// Deterministic RREF; independent of the order of `rows`.
EchelonForm echelon_reduce(std::span<const SparseVec> rows, std::size_t dimension);

}  // namespace wk

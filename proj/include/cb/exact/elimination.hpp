#pragma once

#include <optional>
#include <vector>

#include "cb/exact/sparse.hpp"
#include "cb/parallel.hpp"

namespace cb {

using IRow = std::vector<std::pair<int, Z>>;

// Row echelon form with primitive integer rows, pivots in increasing column order.
struct Echelon {
  int cols = 0;
  std::vector<int> pivot_cols;
  std::vector<IRow> rows;
  int rank() const { return static_cast<int>(rows.size()); }
};

// Fraction-free elimination. Pivot: leftmost column, then smallest bit length, then lowest row.
// The parallel variant updates the rows of one pivot step concurrently and yields identical output.
Echelon echelon(const SparseMatrix& m, Exec exec = Exec::Parallel);

struct RankKernel {
  int rank = 0;
  std::vector<Vec> kernel;
};

RankKernel rank_kernel(const SparseMatrix& m, Exec exec = Exec::Parallel);
int rank(const SparseMatrix& m, Exec exec = Exec::Parallel);

class QuotientBasis {
 public:
  QuotientBasis() = default;
  explicit QuotientBasis(Echelon e);

  int ambient_dim() const { return ech_.cols; }
  int relation_rank() const { return ech_.rank(); }
  int dim() const { return static_cast<int>(free_cols_.size()); }
  const std::vector<int>& pivot_columns() const { return ech_.pivot_cols; }
  const std::vector<int>& free_columns() const { return free_cols_; }
  const Echelon& echelon_form() const { return ech_; }

  // Coordinates of the class of v on the free columns.
  Vec reduce(const SVec& v) const;
  Vec reduce(const Vec& v) const;
  // Ambient vector with zeros on pivot columns representing the same class.
  Vec reduce_ambient(Vec v) const;
  bool in_span(const SVec& v) const { return is_zero(reduce(v)); }

 private:
  Echelon ech_;
  std::vector<int> free_cols_;
  std::vector<int> free_index_;
};

QuotientBasis quotient_basis(const SparseMatrix& relations, Exec exec = Exec::Parallel);

// Solves a x = b exactly; nullopt when inconsistent.
std::optional<Vec> solve(const SparseMatrix& a, const Vec& b);

}  // namespace cb

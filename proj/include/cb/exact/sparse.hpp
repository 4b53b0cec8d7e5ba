#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cb/exact/dense.hpp"
#include "cb/exact/scalar.hpp"

namespace cb {

// Sorted by column index, no zeros, no duplicates.
using SVec = std::vector<std::pair<int, Q>>;

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, int size);
// Sorts, merges duplicates and drops zeros.
void normalize(SVec& v);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(int cols) : cols_(cols) {}
  SparseMatrix(int rows, int cols) : cols_(cols), data_(static_cast<std::size_t>(rows)) {}

  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return cols_; }
  std::size_t nonzeros() const;

  void add_row(SVec row);
  void set(int r, int c, const Q& value);
  const SVec& row(int r) const { return data_[r]; }
  const std::vector<SVec>& row_data() const { return data_; }

  SparseMatrix transpose() const;
  Mat to_dense() const;
  static SparseMatrix from_dense(const Mat& m);

  // Line format: header "rows cols", then "row col value" triples.
  std::string to_text() const;
  static SparseMatrix from_text(const std::string& text);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int cols_ = 0;
  std::vector<SVec> data_;
};

}  // namespace cb

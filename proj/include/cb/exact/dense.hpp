#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cb/exact/scalar.hpp"

namespace cb {

using Vec = std::vector<Q>;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Q& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Mat transpose() const;
  Vec column(int c) const;
  Vec apply(const Vec& v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Q& s);
  // this += s * a * b, skipping zero entries
  void add_product(const Q& s, const Mat& a, const Mat& b);
  void add_scaled(const Q& s, const Mat& a);

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Q> data_;
};

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Q& s);
void axpy(Vec& y, const Q& s, const Vec& x);
Q dot(const Vec& a, const Vec& b);

// Dense rational Gaussian elimination helpers for small systems.
int dense_rank(Mat m);
std::optional<Vec> dense_solve(const Mat& a, const Vec& b);
std::optional<Mat> dense_inverse(const Mat& a);

}  // namespace cb

#include "cb/exact/dense.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat::apply size mismatch");
  Vec out(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat += shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat -= shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Q& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

void Mat::add_scaled(const Q& s, const Mat& a) {
  if (rows_ != a.rows_ || cols_ != a.cols_) throw std::invalid_argument("add_scaled shape mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (a.data_[i] != 0) data_[i] += s * a.data_[i];
}

void Mat::add_product(const Q& s, const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_ || rows_ != a.rows_ || cols_ != b.cols_)
    throw std::invalid_argument("add_product shape mismatch");
  if (s == 0) return;
  Q t;
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Q& aik = a(i, k);
      if (aik == 0) continue;
      t = s * aik;
      for (int j = 0; j < b.cols_; ++j) {
        const Q& bkj = b(k, j);
        if (bkj != 0) (*this)(i, j) += t * bkj;
      }
    }
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat out(a.rows_, b.cols_);
  out.add_product(Q(1), a, b);
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << to_string((*this)(r, c));
  }
  os << "]";
  return os.str();
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec scaled(const Vec& a, const Q& s) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vec& y, const Q& s, const Vec& x) {
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += s * x[i];
}

Q dot(const Vec& a, const Vec& b) {
  Q out(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
  return out;
}

int dense_rank(Mat m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(piv, k));
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Q f = m(r, c) / m(rank, c);
      for (int k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

std::optional<Vec> dense_solve(const Mat& a, const Vec& b) {
  const int n = a.rows(), m = a.cols();
  Mat aug(n, m + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) aug(r, c) = a(r, c);
    aug(r, m) = b[r];
  }
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < m && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (aug(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = 0; k <= m; ++k) std::swap(aug(row, k), aug(piv, k));
    Q inv = Q(1) / aug(row, c);
    for (int k = c; k <= m; ++k) aug(row, k) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || aug(r, c) == 0) continue;
      Q f = aug(r, c);
      for (int k = c; k <= m; ++k) aug(r, k) -= f * aug(row, k);
    }
    pivcol.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (aug(r, m) != 0) return std::nullopt;
  Vec x(m);
  for (int i = 0; i < row; ++i) x[pivcol[i]] = aug(i, m);
  return x;
}

std::optional<Mat> dense_inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  if (dense_rank(a) != n) return std::nullopt;
  Mat inv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = 1;
    auto x = dense_solve(a, e);
    if (!x) return std::nullopt;
    for (int i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

}  // namespace cb

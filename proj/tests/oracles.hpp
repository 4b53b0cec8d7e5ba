#pragma once
// Independent reference computations used only by the tests.

#include <map>
#include <vector>

#include "cb/exact/dense.hpp"

namespace oracle {

using cb::Mat;
using cb::Q;

// Number of partitions of n (Euler recurrence over pentagonal numbers).
inline long partitions(int n) {
  if (n < 0) return 0;
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long s = (k % 2) ? 1 : -1;
      p[m] += s * p[m - g1];
      if (g2 <= m) p[m] += s * p[m - g2];
    }
  return p[n];
}

// Graded dimension of the minimal-model module (r,s) from the alternating character sum.
inline long character(int p, int q, int r, int s, int n) {
  long out = 0;
  for (int k = -n - 2; k <= n + 2; ++k) {
    long a = static_cast<long>(p) * q * k * k + static_cast<long>(k) * (q * r - p * s);
    long b = static_cast<long>(p * k + r) * (q * k + s);
    if (a <= n) out += partitions(n - static_cast<int>(a));
    if (b <= n) out -= partitions(n - static_cast<int>(b));
  }
  return out;
}

inline Q kac_weight(int p, int q, int r, int s) {
  Q a(r * q - s * p), b(p - q);
  Q out = (a * a - b * b) / Q(4 * p * q);
  out.canonicalize();
  return out;
}

inline Q minimal_c(int p, int q) {
  Q out = Q(1) - Q(6 * (p - q) * (p - q)) / Q(p * q);
  out.canonicalize();
  return out;
}

// Plain Gauss-Jordan rank over Q.
inline int rank(Mat m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c) / m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline Q det(Mat m) {
  const int n = m.rows();
  Q d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Q(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      Q f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

}  // namespace oracle

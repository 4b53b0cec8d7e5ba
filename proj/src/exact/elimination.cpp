#include "cb/exact/elimination.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cb/parallel.hpp"

namespace cb {

namespace {

IRow primitive_row(const SVec& row) {
  IRow out;
  if (row.empty()) return out;
  Z den = 1;
  for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.get_den_mpz_t());
  out.reserve(row.size());
  for (const auto& e : row) {
    Z v = e.second.get_num() * (den / e.second.get_den());
    out.emplace_back(e.first, std::move(v));
  }
  return out;
}

void make_primitive(IRow& row) {
  if (row.empty()) return;
  Z g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// r <- (a_p/g) r - (a_r/g) p, both leading at the same column.
void eliminate(IRow& r, const IRow& p) {
  Z g;
  mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
  Z fr = p.front().second / g;
  Z fp = r.front().second / g;
  IRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1, j = 1;
  Z t;
  while (i < r.size() || j < p.size()) {
    if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, fr * r[i].second);
      ++i;
    } else if (i >= r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(fp * p[j].second));
      ++j;
    } else {
      t = fr * r[i].second - fp * p[j].second;
      if (t != 0) out.emplace_back(r[i].first, t);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  r = std::move(out);
}

}  // namespace

Echelon echelon(const SparseMatrix& m, Exec exec) {
  Echelon ech;
  ech.cols = m.cols();
  std::vector<IRow> rows(m.rows());
  std::map<int, std::vector<int>> buckets;
  for (int r = 0; r < m.rows(); ++r) {
    rows[r] = primitive_row(m.row(r));
    make_primitive(rows[r]);
    if (!rows[r].empty()) buckets[rows[r].front().first].push_back(r);
  }
  const int threads = exec == Exec::Parallel ? worker_threads() : 1;
  while (!buckets.empty()) {
    auto it = buckets.begin();
    std::vector<int> ids = std::move(it->second);
    buckets.erase(it);
    std::sort(ids.begin(), ids.end());
    int best = 0;
    std::size_t best_bits = bit_length(rows[ids[0]].front().second);
    for (int k = 1; k < static_cast<int>(ids.size()); ++k) {
      std::size_t b = bit_length(rows[ids[k]].front().second);
      if (b < best_bits) {
        best_bits = b;
        best = k;
      }
    }
    const int piv = ids[best];
    ids.erase(ids.begin() + best);
    const IRow& prow = rows[piv];
    const int n = static_cast<int>(ids.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1 && n > 8)
    for (int k = 0; k < n; ++k) eliminate(rows[ids[k]], prow);
    for (int id : ids)
      if (!rows[id].empty()) buckets[rows[id].front().first].push_back(id);
    ech.pivot_cols.push_back(prow.front().first);
    ech.rows.push_back(std::move(rows[piv]));
  }
  return ech;
}

namespace {

// Reduced row echelon form over Q with unit pivots.
std::vector<SVec> rref_rows(const Echelon& e) {
  std::vector<SVec> out(e.rows.size());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    Q lead(e.rows[i].front().second);
    for (const auto& [c, x] : e.rows[i]) out[i].emplace_back(c, Q(x) / lead);
  }
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    for (int j = i + 1; j < static_cast<int>(out.size()); ++j) {
      const int pc = e.pivot_cols[j];
      auto it = std::lower_bound(out[i].begin(), out[i].end(), pc,
                                 [](const auto& a, int c) { return a.first < c; });
      if (it == out[i].end() || it->first != pc) continue;
      Q f = it->second;
      SVec merged = out[i];
      for (const auto& [c, x] : out[j]) merged.emplace_back(c, -f * x);
      normalize(merged);
      out[i] = std::move(merged);
    }
  }
  return out;
}

}  // namespace

RankKernel rank_kernel(const SparseMatrix& m, Exec exec) {
  Echelon e = echelon(m, exec);
  RankKernel out;
  out.rank = e.rank();
  auto rr = rref_rows(e);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec k(m.cols());
    k[f] = 1;
    for (std::size_t i = 0; i < rr.size(); ++i) {
      auto it = std::lower_bound(rr[i].begin(), rr[i].end(), f,
                                 [](const auto& a, int c) { return a.first < c; });
      if (it != rr[i].end() && it->first == f) k[e.pivot_cols[i]] = -it->second;
    }
    out.kernel.push_back(std::move(k));
  }
  return out;
}

int rank(const SparseMatrix& m, Exec exec) { return echelon(m, exec).rank(); }

QuotientBasis::QuotientBasis(Echelon e) : ech_(std::move(e)) {
  std::vector<char> is_pivot(ech_.cols, 0);
  for (int c : ech_.pivot_cols) is_pivot[c] = 1;
  free_index_.assign(ech_.cols, -1);
  for (int c = 0; c < ech_.cols; ++c)
    if (!is_pivot[c]) {
      free_index_[c] = static_cast<int>(free_cols_.size());
      free_cols_.push_back(c);
    }
}

Vec QuotientBasis::reduce_ambient(Vec v) const {
  if (static_cast<int>(v.size()) != ech_.cols) throw std::invalid_argument("reduce: size mismatch");
  Q f;
  for (std::size_t i = 0; i < ech_.rows.size(); ++i) {
    const int pc = ech_.pivot_cols[i];
    if (v[pc] == 0) continue;
    const IRow& row = ech_.rows[i];
    f = v[pc] / Q(row.front().second);
    for (const auto& [c, x] : row) v[c] -= f * x;
  }
  return v;
}

Vec QuotientBasis::reduce(const Vec& v) const {
  Vec amb = reduce_ambient(v);
  Vec out(free_cols_.size());
  for (std::size_t i = 0; i < free_cols_.size(); ++i) out[i] = amb[free_cols_[i]];
  return out;
}

Vec QuotientBasis::reduce(const SVec& v) const { return reduce(to_dense(v, ech_.cols)); }

QuotientBasis quotient_basis(const SparseMatrix& relations, Exec exec) {
  return QuotientBasis(echelon(relations, exec));
}

std::optional<Vec> solve(const SparseMatrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  SparseMatrix aug(a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    SVec row = a.row(r);
    if (b[r] != 0) row.emplace_back(a.cols(), b[r]);
    aug.add_row(std::move(row));
  }
  Echelon e = echelon(aug, Exec::Serial);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  auto rr = rref_rows(e);
  Vec x(a.cols());
  for (std::size_t i = 0; i < rr.size(); ++i) {
    const auto& row = rr[i];
    if (!row.empty() && row.back().first == a.cols()) x[e.pivot_cols[i]] = row.back().second;
  }
  return x;
}

}  // namespace cb

#include "cb/virasoro/verma.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

void gen_partitions(int n, int max_part, int min_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= min_part; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, min_part, cur, out);
    cur.pop_back();
  }
}

void add_terms(Terms& acc, const Terms& t, const Q& s) {
  if (s == 0) return;
  for (const auto& [p, x] : t) {
    Q& y = acc[p];
    y += s * x;
    if (y == 0) acc.erase(p);
  }
}

}  // namespace

std::vector<Partition> partitions(int n, int min_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  gen_partitions(n, n, min_part, cur, out);
  return out;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

int weight(const Partition& p) {
  int w = 0;
  for (int k : p) w += k;
  return w;
}

Verma::Verma(Q c, Q h, int min_part) : c_(std::move(c)), h_(std::move(h)), min_part_(min_part) {
  if (min_part != 1 && min_part != 2) throw std::invalid_argument("Verma: min_part must be 1 or 2");
  if (min_part == 2 && h_ != 0) throw std::invalid_argument("Verma: min_part 2 requires h = 0");
}

const std::vector<Partition>& Verma::basis(int depth) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = basis_.find(depth);
  if (it != basis_.end()) return it->second;
  auto& b = basis_[depth];
  b = partitions(depth, min_part_);
  auto& idx = index_[depth];
  for (int i = 0; i < static_cast<int>(b.size()); ++i) idx[b[i]] = i;
  return b;
}

int Verma::index(const Partition& p) {
  const int d = weight(p);
  basis(d);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = index_[d].find(p);
  if (it == index_[d].end()) throw std::out_of_range("partition not in Verma basis: " + partition_str(p));
  return it->second;
}

const Terms& Verma::act(int n, const Partition& p) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(n, p);
  auto it = act_cache_.find(key);
  if (it != act_cache_.end()) return it->second;
  Terms t = compute_act(n, p);
  return act_cache_.emplace(std::move(key), std::move(t)).first->second;
}

Terms Verma::compute_act(int n, const Partition& p) {
  Terms out;
  if (p.empty()) {
    if (n == 0) {
      if (h_ != 0) out[p] = h_;
    } else if (n < 0 && -n >= min_part_) {
      out[Partition{-n}] = 1;
    }
    return out;
  }
  if (n < 0 && -n >= p[0]) {
    Partition q;
    q.reserve(p.size() + 1);
    q.push_back(-n);
    q.insert(q.end(), p.begin(), p.end());
    out[q] = 1;
    return out;
  }
  const int k1 = p[0];
  Partition rest(p.begin() + 1, p.end());
  // T(n) T(-k1) rest = T(-k1) T(n) rest + (n + k1) T(n - k1) rest + central term
  Terms inner = act(n, rest);
  for (const auto& [q, x] : inner) add_terms(out, act(-k1, q), x);
  if (n + k1 != 0) add_terms(out, act(n - k1, rest), Q(n + k1));
  if (n == k1) {
    Q central = Q(static_cast<long>(n) * n * n - n, 12) * c_;
    central.canonicalize();
    if (central != 0) {
      Q& y = out[rest];
      y += central;
      if (y == 0) out.erase(rest);
    }
  }
  return out;
}

Terms Verma::act(int n, const Terms& t) {
  Terms out;
  for (const auto& [p, x] : t) add_terms(out, act(n, p), x);
  return out;
}

Vec Verma::to_vec(const Terms& t, int depth) {
  Vec v(dim(depth));
  for (const auto& [p, x] : t) {
    if (weight(p) != depth) throw std::invalid_argument("Verma::to_vec: mixed depths");
    v[index(p)] += x;
  }
  return v;
}

Terms Verma::from_vec(const Vec& v, int depth) {
  Terms t;
  const auto& b = basis(depth);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t[b[i]] = v[i];
  return t;
}

Mat Verma::matrix(int n, int depth) {
  const int target = depth - n;
  Mat m(dim(target), dim(depth));
  if (target < 0 || depth < 0) return m;
  const auto& b = basis(depth);
  for (int j = 0; j < static_cast<int>(b.size()); ++j)
    for (const auto& [p, x] : act(n, b[j])) m(index(p), j) = x;
  return m;
}

Mat Verma::gram(int depth) {
  const auto& b = basis(depth);
  const int n = static_cast<int>(b.size());
  Mat g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // <T(-k1)...T(-kr) v, w> = <v, T(kr)...T(k1) w>
      Terms w;
      w[b[j]] = 1;
      for (int k : b[i]) {
        w = act(k, w);
        if (w.empty()) break;
      }
      auto it = w.find(Partition{});
      if (it != w.end()) g(i, j) = it->second;
    }
  }
  return g;
}

}  // namespace cb

#include "cb/voa/engine.hpp"

#include <stdexcept>

namespace cb {

State operator+(const State& a, const State& b) {
  if (a.weight != b.weight) throw std::invalid_argument("State: weight mismatch");
  return State{a.weight, add(a.coords, b.coords)};
}

State operator-(const State& a, const State& b) {
  if (a.weight != b.weight) throw std::invalid_argument("State: weight mismatch");
  return State{a.weight, add(a.coords, scaled(b.coords, Q(-1)))};
}

State operator*(const Q& s, const State& a) { return State{a.weight, scaled(a.coords, s)}; }

void add_mode(ModeSum& s, const Q& coeff, const State& v, int n) {
  if (coeff == 0 || v.is_zero()) return;
  auto key = std::make_pair(v.weight, n);
  auto it = s.find(key);
  if (it == s.end()) {
    s.emplace(key, scaled(v.coords, coeff));
    return;
  }
  axpy(it->second, coeff, v.coords);
  if (is_zero(it->second)) s.erase(it);
}

bool is_zero(const ModeSum& s) {
  for (const auto& [k, v] : s)
    if (!is_zero(v)) return false;
  return true;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

ModeEngine::ModeEngine(Q c) : c_(std::move(c)), vac_(vacuum_module(c_)) {}

State ModeEngine::vacuum_state() { return State{0, Vec{Q(1)}}; }

State ModeEngine::virasoro_state() {
  Terms t;
  t[Partition{2}] = 1;
  return from_terms(t);
}

State ModeEngine::zero_state(int weight) { return State{weight, Vec(dim(weight))}; }

State ModeEngine::basis_state(int weight, int i) {
  State s = zero_state(weight);
  s.coords.at(i) = 1;
  return s;
}

State ModeEngine::from_terms(const Terms& t) {
  if (t.empty()) throw std::invalid_argument("from_terms: empty state has no weight");
  const int w = weight(t.begin()->first);
  return State{w, vac_->reduce(t, w)};
}

Terms ModeEngine::to_terms(const State& s) { return vac_->lift_terms(s.weight, s.coords); }

const Mat& ModeEngine::monomial_mode(GradedModule& m, const Partition& w, int n, int e) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(m.id(), w, n, e);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Mat out(m.dim(e - n), m.dim(e));
  if (out.rows() == 0 || out.cols() == 0) {
    // nothing to compute
  } else if (w.empty()) {
    if (n == 0) out = Mat::identity(out.cols());
  } else {
    const int k = w[0];
    const Partition rest(w.begin() + 1, w.end());
    for (int j = 0; j <= e - n - k; ++j) {
      Q coef = binom(Q(1 - k), j) * sign_pow(j);
      if (coef == 0) continue;
      const Mat& inner = monomial_mode(m, rest, n + k + j, e);
      if (inner.is_zero()) continue;
      out.add_product(coef, m.vir(-k - j, e - n - k - j), inner);
    }
    for (int j = 0; j <= e + 1; ++j) {
      Q coef = binom(Q(1 - k), j) * sign_pow(j) * sign_pow(k);
      if (coef == 0) continue;
      const Mat& t = m.vir(j - 1, e);
      if (t.rows() == 0 || t.is_zero()) continue;
      const Mat& inner = monomial_mode(m, rest, n + 1 - j, e - j + 1);
      out.add_product(coef, inner, t);
    }
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

Mat ModeEngine::mode(GradedModule& m, const Terms& v, int n, int e) {
  Mat out(m.dim(e - n), m.dim(e));
  for (const auto& [p, x] : v) out.add_scaled(x, monomial_mode(m, p, n, e));
  return out;
}

Mat ModeEngine::mode(GradedModule& m, const State& v, int n, int e) {
  Mat out(m.dim(e - n), m.dim(e));
  if (v.is_zero()) return out;
  const auto b = vac_->basis(v.weight);
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    if (v.coords[i] != 0) out.add_scaled(v.coords[i], monomial_mode(m, b[i], n, e));
  return out;
}

Mat ModeEngine::mode(GradedModule& m, const ModeSum& s, int shift, int e) {
  Mat out(m.dim(e - shift), m.dim(e));
  for (const auto& [key, coords] : s) {
    if (key.second != shift) throw std::invalid_argument("ModeSum: mixed mode indices");
    out += mode(m, State{key.first, coords}, shift, e);
  }
  return out;
}

State ModeEngine::apply(const State& v1, int n, const State& v2) {
  const int w = v2.weight - n;
  if (w < 0) return State{std::max(w, 0), Vec(dim(std::max(w, 0)))};
  return State{w, mode(*vac_, v1, n, v2.weight).apply(v2.coords)};
}

State ModeEngine::apply_vir(int n, const State& v) {
  const int w = v.weight - n;
  if (w < 0) return State{0, Vec(dim(0))};
  return State{w, vac_->vir(n, v.weight).apply(v.coords)};
}

ModuleVector ModeEngine::mode_action(GradedModule& m, const State& v, int n, const ModuleVector& x,
                                     int cutoff) {
  ModuleVector out;
  out.depth = x.depth - n;
  if (out.depth < 0) {
    out.depth = 0;
    out.coords = Vec(m.dim(0));
    return out;
  }
  if (out.depth > cutoff) {
    out.coords = Vec();
    out.overflow = !is_zero(x.coords) && !v.is_zero();
    return out;
  }
  out.coords = mode(m, v, n, x.depth).apply(x.coords);
  return out;
}

ModeSum ModeEngine::theta(const State& v, int n) {
  ModeSum out;
  State u = v;
  Q fact(1);
  const int sign = sign_pow(v.weight);
  for (int j = 0; j <= v.weight; ++j) {
    if (j > 0) {
      u = apply_vir(1, u);
      fact *= j;
    }
    if (u.is_zero()) break;
    add_mode(out, Q(sign) / fact, u, -n);
  }
  return out;
}

ModeSum ModeEngine::theta(const ModeSum& s) {
  ModeSum out;
  for (const auto& [key, coords] : s)
    for (const auto& [k2, c2] : theta(State{key.first, coords}, key.second))
      add_mode(out, Q(1), State{k2.first, c2}, k2.second);
  return out;
}

Mat ModeEngine::contragredient_mode(GradedModule& m, const State& v, int n, int e) {
  // theta(J_n(v)) maps depth e - n to depth e of m.
  return mode(m, theta(v, n), -n, e - n).transpose();
}

State ModeEngine::random_state(std::mt19937_64& rng, int weight, int range) {
  State s = zero_state(weight);
  for (auto& x : s.coords) x = uniform_int(rng, -range, range);
  if (s.is_zero() && !s.coords.empty()) s.coords[0] = 1;
  return s;
}

}  // namespace cb

namespace cb {

ModeEngine& shared_engine(const Q& c) {
  static std::mutex mu;
  static std::map<Q, std::unique_ptr<ModeEngine>> engines;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = engines[c];
  if (!slot) slot = std::make_unique<ModeEngine>(c);
  return *slot;
}

}  // namespace cb

#include "cb/voa/current.hpp"

#include <stdexcept>

namespace cb {

ModeSum to_modes(const CurrentElement& x) {
  ModeSum out;
  for (const auto& [k, a] : x.laurent) add_mode(out, a, x.state, k - x.state.weight + 1);
  return out;
}

const QuotientBasis& CurrentAlgebra::complement(int weight) {
  auto it = comp_.find(weight);
  if (it != comp_.end()) return it->second;
  SparseMatrix rel(e_.dim(weight));
  if (weight >= 1) {
    const Mat& t = e_.vacuum().vir(-1, weight - 1);
    for (int j = 0; j < t.cols(); ++j) rel.add_row(to_sparse(t.column(j)));
  }
  return comp_.emplace(weight, quotient_basis(rel)).first->second;
}

ModeSum CurrentAlgebra::canonical(const ModeSum& s) {
  ModeSum out;
  // Process from the top weight down; T(-1)-parts feed lower weights.
  ModeSum work = s;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const auto [weight, n] = it->first;
    Vec v = it->second;
    work.erase(it);
    if (is_zero(v)) continue;
    if (weight == 0) {
      if (n == 0) add_mode(out, Q(1), State{0, v}, 0);
      continue;
    }
    const QuotientBasis& qb = complement(weight);
    Vec u = qb.reduce_ambient(v);
    add_mode(out, Q(1), State{weight, u}, n);
    Vec rest = add(v, scaled(u, Q(-1)));
    if (is_zero(rest)) continue;
    const Mat& t = e_.vacuum().vir(-1, weight - 1);
    auto w = solve(SparseMatrix::from_dense(t), rest);
    if (!w) throw std::logic_error("canonical: T(-1) preimage missing");
    // J_n(T(-1)w) = -(n + weight - 1) J_n(w)
    add_mode(work, Q(-(n + weight - 1)), State{weight - 1, *w}, n);
  }
  return out;
}

ModeSum CurrentAlgebra::commutator_terms(const State& v1, int m, const State& v2, int n) {
  ModeSum out;
  for (int j = 0; j <= v1.weight + v2.weight - 1; ++j) {
    const int k = j - v1.weight + 1;
    if (v2.weight - k < 0) break;
    State u = e_.apply(v1, k, v2);
    add_mode(out, binom(Q(m + v1.weight - 1), j), u, m + n);
  }
  return out;
}

ModeSum CurrentAlgebra::bracket(const CurrentElement& a, const CurrentElement& b) {
  // sum_m (1/m!) J(J_{m - D1 + 1}(v1) v2, f1^(m) f2)
  ModeSum out;
  const State& v1 = a.state;
  const State& v2 = b.state;
  for (int m = 0; m <= v1.weight + v2.weight - 1; ++m) {
    const int k = m - v1.weight + 1;
    if (v2.weight - k < 0) break;
    State u = e_.apply(v1, k, v2);
    if (u.is_zero()) continue;
    for (const auto& [k1, a1] : a.laurent)
      for (const auto& [k2, a2] : b.laurent) {
        // f1^(m)/m! = C(k1, m) xi^(k1 - m)
        Q coef = a1 * a2 * binom(Q(k1), m);
        if (coef == 0) continue;
        add_mode(out, coef, u, k1 - m + k2 - u.weight + 1);
      }
  }
  return canonical(out);
}

ModeSum CurrentAlgebra::bracket(const ModeSum& a, const ModeSum& b) {
  ModeSum out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      CurrentElement x{State{ka.first, va}, {{ka.second + ka.first - 1, Q(1)}}};
      CurrentElement y{State{kb.first, vb}, {{kb.second + kb.first - 1, Q(1)}}};
      for (const auto& [k, v] : bracket(x, y)) add_mode(out, Q(1), State{k.first, v}, k.second);
    }
  return canonical(out);
}

}  // namespace cb

#include "cb/zhu/zhu.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

FState to_fstate(const State& s) {
  FState f;
  if (!s.is_zero()) f[s.weight] = s.coords;
  return f;
}

void add_to(FState& acc, const Q& c, const State& s) {
  if (c == 0 || s.is_zero()) return;
  auto it = acc.find(s.weight);
  if (it == acc.end()) {
    acc[s.weight] = scaled(s.coords, c);
    return;
  }
  axpy(it->second, c, s.coords);
  if (is_zero(it->second)) acc.erase(it);
}

void add_to(FState& acc, const Q& c, const FState& s) {
  for (const auto& [w, v] : s) add_to(acc, c, State{w, v});
}

FState zhu_circ(ModeEngine& e, const State& v1, const State& v2) {
  FState out;
  for (int i = 0; i <= v1.weight; ++i) add_to(out, binom(v1.weight, i), e.apply(v1, i - 1 - v1.weight, v2));
  return out;
}

FState zhu_star(ModeEngine& e, const State& v1, const State& v2) {
  FState out;
  for (int i = 0; i <= v1.weight; ++i) {
    const int n = i - v1.weight;
    if (v2.weight - n < 0) continue;
    add_to(out, binom(v1.weight, i), e.apply(v1, n, v2));
  }
  return out;
}

FState zhu_star(ModeEngine& e, const FState& v1, const FState& v2) {
  FState out;
  for (const auto& [w1, c1] : v1)
    for (const auto& [w2, c2] : v2) add_to(out, Q(1), zhu_star(e, State{w1, c1}, State{w2, c2}));
  return out;
}

ZhuQuotient::ZhuQuotient(ModeEngine& e, int depth, Exec exec) : e_(e), depth_(depth) {
  int col = 0;
  for (int w = depth; w >= 0; --w) {
    offset_[w] = col;
    for (int i = 0; i < e.dim(w); ++i) col_info_.emplace_back(w, i);
    col += e.dim(w);
  }
  SparseMatrix rel(col);
  auto push = [&](const FState& f) {
    SVec row = embed(f);
    if (!row.empty()) rel.add_row(std::move(row));
    ++relations_;
  };
  for (int w1 = 1; w1 + 1 <= depth; ++w1)
    for (int w2 = 0; w1 + w2 + 1 <= depth; ++w2)
      for (int i = 0; i < e.dim(w1); ++i)
        for (int j = 0; j < e.dim(w2); ++j) push(zhu_circ(e, e.basis_state(w1, i), e.basis_state(w2, j)));
  for (int w = 0; w + 1 <= depth; ++w)
    for (int i = 0; i < e.dim(w); ++i) {
      State v = e.basis_state(w, i);
      FState f = to_fstate(e.apply_vir(-1, v));
      add_to(f, Q(w), v);
      push(f);
    }
  qb_ = quotient_basis(rel, exec);
}

int ZhuQuotient::max_free_weight() const {
  int m = -1;
  for (int c : qb_.free_columns()) m = std::max(m, col_info_[c].first);
  return m;
}

SVec ZhuQuotient::embed(const FState& v) const {
  SVec out;
  for (const auto& [w, coords] : v) {
    if (w > depth_) throw std::out_of_range("ZhuQuotient: weight above the truncation");
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) out.emplace_back(column(w, static_cast<int>(i)), coords[i]);
  }
  normalize(out);
  return out;
}

Vec ZhuQuotient::reduce(const FState& v) const { return qb_.reduce(embed(v)); }

FState ZhuQuotient::representative(const Vec& coords) const {
  FState out;
  const auto& fc = qb_.free_columns();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (coords[i] == 0) continue;
    const auto [w, k] = col_info_[fc[i]];
    auto& v = out[w];
    if (v.empty()) v.assign(e_.dim(w), Q(0));
    v[k] = coords[i];
  }
  return out;
}

FState ZhuQuotient::normal_form(const FState& v) const { return representative(reduce(v)); }

std::string ZhuPresentation::str() const {
  std::ostringstream os;
  os << "dimension " << dimension << ", minimal polynomial " << minpoly.str("x") << ", roots {";
  bool first = true;
  for (const auto& [r, m] : roots.roots) {
    os << (first ? "" : ", ") << to_string(r);
    if (m > 1) os << "^" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

ZhuPresentation zhu_presentation(ModeEngine& e, const ZhuQuotient& z, int previous_dimension) {
  ZhuPresentation p;
  p.depth = z.depth();
  p.dimension = z.dim();
  p.previous_dimension = previous_dimension;
  const FState x = to_fstate(e.virasoro_state());
  std::vector<Vec> powers;
  FState cur = to_fstate(e.vacuum_state());
  for (int k = 0; k <= p.dimension; ++k) {
    Vec c = z.reduce(cur);
    Mat m(p.dimension, static_cast<int>(powers.size()));
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (int i = 0; i < p.dimension; ++i) m(i, static_cast<int>(j)) = powers[j][i];
    auto sol = powers.empty() ? (is_zero(c) ? std::optional<Vec>(Vec{}) : std::nullopt) : dense_solve(m, c);
    if (sol) {
      std::vector<Q> coeffs(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i < k; ++i) coeffs[i] = -(*sol)[i];
      coeffs[k] = 1;
      p.minpoly = Poly(coeffs);
      break;
    }
    powers.push_back(c);
    p.basis_powers.push_back(k);
    FState nf = z.representative(c);
    int top = nf.empty() ? 0 : nf.rbegin()->first;
    if (top + 2 > z.depth()) break;
    cur = zhu_star(e, x, nf);
  }
  p.powers_span = !p.minpoly.is_zero() && p.minpoly.degree() == p.dimension;
  p.stabilized = p.powers_span && previous_dimension == p.dimension;
  if (!p.minpoly.is_zero()) {
    p.roots = rational_roots(p.minpoly);
    if (p.roots.remainder.degree() > 0)
      throw std::domain_error("zhu: minimal polynomial has irrational roots: " + p.roots.remainder.str("x"));
  }
  return p;
}

ZhuPresentation zhu_algebra(ModeEngine& e, int depth) {
  ZhuQuotient prev(e, depth - 1);
  ZhuQuotient z(e, depth);
  return zhu_presentation(e, z, prev.dim());
}

ZhuPresentation zhu_algebra(int p, int q, int depth) {
  validate_model(p, q);
  ModeEngine e(central_charge(p, q));
  return zhu_algebra(e, depth);
}

FState zero_mode_product(ModeEngine& e, const State& v1, const State& v2) {
  const int d1 = v1.weight, d2 = v2.weight;
  FState out = to_fstate(e.apply(v1, -d1, v2));
  for (int j = 1 - d1; j < 0; ++j)
    for (int k = 0; k <= d1 + d2 - 1; ++k) {
      const int n = k - d2 + 1;
      if (d1 - n < 0) break;
      Q c = binom(Q(d2 - j - 1), k);
      if (c != 0) add_to(out, -c, e.apply(v2, n, v1));
    }
  return out;
}

FState theta_zero_mode(ModeEngine& e, const State& v) {
  FState out;
  State u = v;
  Q fact(1);
  for (int j = 0; j <= v.weight; ++j) {
    if (j > 0) {
      u = e.apply_vir(1, u);
      fact *= j;
    }
    add_to(out, Q(sign_pow(v.weight)) / fact, u);
  }
  return out;
}

FState theta_zero_mode(ModeEngine& e, const FState& v) {
  FState out;
  for (const auto& [w, c] : v) add_to(out, Q(1), theta_zero_mode(e, State{w, c}));
  return out;
}

Q zero_mode_eigenvalue(ModeEngine& e, GradedModule& m, const FState& v) {
  if (m.dim(0) != 1) throw std::invalid_argument("zero_mode_eigenvalue: top level is not one-dimensional");
  Q out(0);
  for (const auto& [w, c] : v) out += e.mode(m, State{w, c}, 0, 0)(0, 0);
  return out;
}

OMapReport verify_o_map(ModeEngine& e, const ZhuQuotient& z, const std::vector<ModulePtr>& simples,
                        int samples, int max_weight, std::uint64_t seed) {
  OMapReport rep;
  std::mt19937_64 rng(seed);
  auto pick = [&](int limit) {
    for (;;) {
      int w = uniform_int(rng, 0, limit);
      if (e.dim(w) > 0) return e.random_state(rng, w);
    }
  };
  for (int s = 0; s < samples; ++s) {
    State v1 = pick(max_weight);
    State v2 = pick(std::max(0, std::min(max_weight, z.depth() - v1.weight - 1)));
    FState st = zhu_star(e, v1, v2);
    FState zp = zero_mode_product(e, v1, v2);
    std::string tag = "weights " + std::to_string(v1.weight) + "," + std::to_string(v2.weight);
    if (v1.weight + v2.weight <= z.depth())
      rep.star.record(z.reduce(st) == z.reduce(zp), "class of v1*v2, " + tag);
    FState ci = zhu_circ(e, v1, v2);
    for (const auto& m : simples) {
      Q a = zero_mode_eigenvalue(e, *m, to_fstate(v1)), b = zero_mode_eigenvalue(e, *m, to_fstate(v2));
      rep.star.record(zero_mode_eigenvalue(e, *m, st) == a * b, "o(v1*v2) on " + m->label() + ", " + tag);
      rep.circ.record(zero_mode_eigenvalue(e, *m, ci) == 0, "o(v1∘v2) on " + m->label() + ", " + tag);
    }
  }
  Mat eval(z.dim(), static_cast<int>(simples.size()));
  for (int i = 0; i < z.dim(); ++i) {
    Vec unit(z.dim());
    unit[i] = 1;
    FState r = z.representative(unit);
    for (std::size_t j = 0; j < simples.size(); ++j)
      eval(i, static_cast<int>(j)) = zero_mode_eigenvalue(e, *simples[j], r);
  }
  rep.dimension.record(dense_rank(eval) == z.dim() && z.dim() == static_cast<int>(simples.size()),
                       "dim A_z = " + std::to_string(z.dim()) + ", top-level rank " + std::to_string(dense_rank(eval)));
  return rep;
}

namespace {

std::vector<Vec> row_basis(const SparseMatrix& m) {
  std::vector<Vec> out;
  for (const auto& r : echelon(m).rows) {
    Vec v(m.cols());
    for (const auto& [c, x] : r) v[c] = Q(x);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

InducedCheck induced_simplicity(const MinimalLabel& label, int depth) {
  validate_label(label);
  InducedCheck out;
  out.label = label;
  out.checked_depth = depth;
  const Q c = central_charge(label.p, label.q);
  const Q h = conformal_weight(label);
  const int nd = vacuum_null_depth(label.p, label.q);
  Verma vac(c, Q(0), 2);
  RankKernel rk = rank_kernel(SparseMatrix::from_dense(vac.gram(nd)));
  if (rk.kernel.size() != 1) throw std::logic_error("vacuum singular vector is not unique");
  Terms null_vec = vac.from_vec(rk.kernel[0], nd);

  ModeEngine e(c);
  auto verma = std::make_shared<VermaModule>(c, h);
  std::vector<std::vector<Vec>> ideal;
  out.simple = true;
  for (int d = 0; d <= depth; ++d) {
    SparseMatrix gens(verma->dim(d));
    Mat top = e.mode(*verma, null_vec, -d, 0);
    gens.add_row(to_sparse(top.column(0)));
    for (int k = 1; k <= d; ++k) {
      const Mat& t = verma->vir(-k, d - k);
      for (const auto& v : ideal[d - k]) gens.add_row(to_sparse(t.apply(v)));
    }
    ideal.push_back(row_basis(gens));
    const int rad = verma->dim(d) - rank(SparseMatrix::from_dense(verma->verma().gram(d)));
    out.induced_dims.push_back(static_cast<int>(ideal.back().size()));
    out.radical_dims.push_back(rad);
    if (out.induced_dims.back() != rad) out.simple = false;
  }
  return out;
}

bool ConditionReport::condition3() const {
  if (induced.empty()) return false;
  for (const auto& i : induced)
    if (!i.simple) return false;
  return true;
}

ConditionReport condition_report(int p, int q, int zhu_depth, int c2_depth, int induced_depth) {
  validate_model(p, q);
  ConditionReport r;
  r.p = p;
  r.q = q;
  ModeEngine e(central_charge(p, q));
  r.c2 = cn_quotient_dim(e, e.vacuum(), 2, c2_depth);
  r.zhu = zhu_algebra(e, zhu_depth);
  r.semisimple = !r.zhu.minpoly.is_zero() && zero_mode_semisimple(r.zhu.minpoly);
  for (const auto& l : distinct_labels(p, q)) r.induced.push_back(induced_simplicity(l, induced_depth));
  return r;
}

}  // namespace cb

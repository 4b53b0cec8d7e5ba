#include "cb/voa/structure.hpp"

#include <sstream>

namespace cb {

SparseMatrix cn_generators(ModeEngine& e, GradedModule& m, int n, int depth) {
  SparseMatrix rows(m.dim(depth));
  for (int w = 1; w <= depth; ++w)
    for (int p = n - 1; w + p <= depth; ++p) {
      const int src = depth - w - p;
      if (m.dim(src) == 0) continue;
      for (int i = 0; i < e.dim(w); ++i) {
        Mat a = e.mode(m, e.basis_state(w, i), -w - p, src);
        for (int j = 0; j < a.cols(); ++j) rows.add_row(to_sparse(a.column(j)));
      }
    }
  return rows;
}

CnReport cn_quotient_dim(ModeEngine& e, GradedModule& m, int n, int depth) {
  CnReport r;
  r.n = n;
  r.max_depth = depth;
  for (int t = 0; t <= depth; ++t) {
    SparseMatrix g = cn_generators(e, m, n, t);
    r.slices.push_back(m.dim(t) - rank(g));
    r.total += r.slices.back();
  }
  r.stabilized = depth >= 1 && r.slices[depth] == 0 && r.slices[depth - 1] == 0;
  return r;
}

std::string FermionicMonomial::str(const std::vector<State>& u) const {
  std::ostringstream os;
  for (const auto& [n, i] : factors) os << "J_{-" << n << "}(u" << i << ":" << u[i].weight << ")";
  os << "w" << top;
  return os.str();
}

std::vector<State> c2_complement(ModeEngine& e, int max_weight) {
  std::vector<State> out;
  GradedModule& v = e.vacuum();
  for (int w = 1; w <= max_weight; ++w) {
    SparseMatrix rows = cn_generators(e, v, 2, w);
    int r = rank(rows);
    for (int i = 0; i < e.dim(w); ++i) {
      SVec cand{{i, Q(1)}};
      rows.add_row(cand);
      int r2 = rank(rows);
      if (r2 > r) {
        out.push_back(e.basis_state(w, i));
        r = r2;
      } else {
        // drop the candidate row again
        SparseMatrix keep(e.dim(w));
        for (int k = 0; k + 1 < rows.rows(); ++k) keep.add_row(rows.row(k));
        rows = keep;
      }
    }
  }
  return out;
}

namespace {

void strict_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    strict_partitions(n - k, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FermionicReport fermionic_spanning_set(ModeEngine& e, GradedModule& m, int depth) {
  FermionicReport rep;
  rep.complement = c2_complement(e, std::max(depth, 2));
  const auto& u = rep.complement;
  const int top = m.dim(0);
  for (int t = 0; t <= depth; ++t) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    strict_partitions(t, t, cur, parts);
    std::vector<FermionicMonomial> monos;
    SparseMatrix images(m.dim(t));
    for (const auto& part : parts) {
      // every assignment of complement states to the parts
      std::vector<int> choice(part.size(), 0);
      for (;;) {
        for (int w = 0; w < top; ++w) {
          FermionicMonomial fm;
          fm.top = w;
          Vec x(top);
          x[w] = 1;
          int d = 0;
          for (std::size_t i = part.size(); i-- > 0;) {
            x = e.mode(m, u[choice[i]], -part[i], d).apply(x);
            d += part[i];
          }
          for (std::size_t i = 0; i < part.size(); ++i) fm.factors.emplace_back(part[i], choice[i]);
          images.add_row(to_sparse(x));
          monos.push_back(fm);
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == static_cast<int>(u.size())) choice[k++] = 0;
        if (k == choice.size() || u.empty()) break;
      }
    }
    const int r = rank(images);
    rep.depth_dims.push_back(m.dim(t));
    rep.ranks.push_back(r);
    rep.monomials.push_back(std::move(monos));
    if (r != m.dim(t)) rep.spans = false;
  }
  return rep;
}

namespace {

// c * z1^a z2^b (z1 - z2)^(-k)
void add_monomial(RationalForm& f, const Q& c, int a, int b, int k) {
  f.add_term(c, {std::max(a, 0), std::max(b, 0)}, {std::max(-a, 0), std::max(-b, 0), k});
}

Q pair(const Vec& phi, const Vec& y) { return dot(phi, y); }

}  // namespace

RationalForm matrix_element_2pt(ModeEngine& e, GradedModule& m, int dphi, const Vec& phi, const State& v1,
                                const State& v2, int dx, const Vec& x) {
  RationalForm f({"z1", "z2"}, {MPoly::variable(2, 0), MPoly::variable(2, 1),
                                MPoly::linear(Q(0), {Q(1), Q(-1)})});
  const int d1 = v1.weight, d2 = v2.weight;
  const int shift = dx - dphi;
  // singular part along z1 = z2
  for (int j = 0; j <= d1 + d2 - 1; ++j) {
    const int k = j - d1 + 1;
    if (d2 - k < 0) break;
    State u = e.apply(v1, k, v2);
    if (u.is_zero()) continue;
    Q c = pair(phi, e.mode(m, u, shift, dx).apply(x));
    add_monomial(f, c, 0, -shift - u.weight, j + 1);
  }
  // annihilating modes of v1 moved to the right
  for (int n1 = 1 - d1; n1 <= dx; ++n1) {
    const int n2 = shift - n1;
    Vec y = e.mode(m, v1, n1, dx).apply(x);
    Q c = pair(phi, e.mode(m, v2, n2, dx - n1).apply(y));
    add_monomial(f, c, -n1 - d1, -n2 - d2, 0);
  }
  // creating modes of v1 stay on the left
  for (int n1 = -dphi; n1 <= -d1; ++n1) {
    const int n2 = shift - n1;
    if (dx - n2 < 0) continue;
    Vec y = e.mode(m, v2, n2, dx).apply(x);
    Q c = pair(phi, e.mode(m, v1, n1, dx - n2).apply(y));
    add_monomial(f, c, -n1 - d1, -n2 - d2, 0);
  }
  return f;
}

CheckResult check_two_point(ModeEngine& e, GradedModule& m, int dphi, const Vec& phi, const State& v1,
                            const State& v2, int dx, const Vec& x, const Q& z2_sample, int orders) {
  CheckResult r;
  RationalForm f = matrix_element_2pt(e, m, dphi, phi, v1, v2, dx, x);
  RationalForm g = matrix_element_2pt(e, m, dphi, phi, v2, v1, dx, x).swapped(0, 1);
  r.record(equal(f, g), "two-point S2 symmetry");

  // OPE at z1 = z2 = s: coefficient of (z1 - s)^(-k - D1) is <phi|J_shift(J_k(v1)v2)|x> s^(-shift - D_u)
  const int shift = dx - dphi;
  RatFunc uni = f.substitute(1, z2_sample).to_univariate(0);
  const int max_exp = orders;
  auto lau = uni.laurent_at(z2_sample, max_exp);
  bool ok = true;
  for (int k = -v1.weight - max_exp; k <= v2.weight + 1; ++k) {
    const int ex = -k - v1.weight;
    Q expect(0);
    if (v2.weight - k >= 0) {
      State u = e.apply(v1, k, v2);
      if (!u.is_zero())
        expect = pair(phi, e.mode(m, u, shift, dx).apply(x)) * power(z2_sample, -shift - u.weight);
    }
    Q got = lau.count(ex) ? lau[ex] : Q(0);
    if (got != expect) ok = false;
  }
  r.record(ok, "two-point OPE expansion");
  return r;
}

}  // namespace cb

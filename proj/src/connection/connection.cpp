#include "cb/connection/connection.hpp"

#include <json.hpp>
#include <stdexcept>

namespace cb {

namespace {

struct Quotients {
  BlockSpace lo, hi;
};

Quotients quotients(const CovacuaProblem& p, int depth, Exec exec) {
  ModeEngine& e = shared_engine(p.central_charge());
  return {covacua_quotient(e, p, depth, p.weight_bound, exec), covacua_quotient(e, p, depth + 1, p.weight_bound, exec)};
}

ConnectionMatrix matrix_from(const CovacuaProblem& p, int a, const Quotients& q) {
  if (p.points[a].at_infinity()) throw std::invalid_argument("connection_matrix: the point must be finite");
  auto m = quotient_operator(q.lo, q.hi, [&](int col) { return vir_at(p, *q.lo.layout, *q.hi.layout, a, -1, col); });
  if (!m) throw std::runtime_error("connection_matrix: depth transport is not an isomorphism");
  ConnectionMatrix c;
  c.point = a;
  c.depth = q.lo.depth;
  c.basis_columns = q.lo.quotient.free_columns();
  for (int col : c.basis_columns) c.basis_labels.push_back(q.lo.layout->column_label(col));
  c.matrix = *m;
  return c;
}

// Classes of the depth-d basis in the depth-(d+1) quotient.
Mat transport(const BlockSpace& lo, const BlockSpace& hi) {
  const int n = lo.dimension;
  Mat p(hi.dimension, n);
  for (int j = 0; j < n; ++j) {
    Vec e = hi.quotient.reduce(SVec{{embed_column(*lo.layout, *hi.layout, lo.quotient.free_columns()[j]), Q(1)}});
    for (int i = 0; i < hi.dimension; ++i) p(i, j) = e[i];
  }
  return p;
}

CovacuaProblem moved(const CovacuaProblem& p, int b, const Q& x) {
  CovacuaProblem q = p;
  q.points[b].coord = x;
  return q;
}

bool coordinate_free(const CovacuaProblem& p, int b, const Q& x) {
  for (std::size_t i = 0; i < p.points.size(); ++i)
    if (static_cast<int>(i) != b && p.points[i].coord && *p.points[i].coord == x) return false;
  return true;
}

}  // namespace

ConnectionMatrix connection_matrix(const CovacuaProblem& p, int a, int depth, Exec exec) {
  return matrix_from(p, a, quotients(p, depth, exec));
}

CheckResult connection_depth_stability(const CovacuaProblem& p, int a, int depth, Exec exec) {
  CheckResult r;
  ModeEngine& e = shared_engine(p.central_charge());
  BlockSpace q0 = covacua_quotient(e, p, depth, p.weight_bound, exec);
  BlockSpace q1 = covacua_quotient(e, p, depth + 1, p.weight_bound, exec);
  BlockSpace q2 = covacua_quotient(e, p, depth + 2, p.weight_bound, exec);
  ConnectionMatrix a0 = matrix_from(p, a, Quotients{q0, q1});
  ConnectionMatrix a1 = matrix_from(p, a, Quotients{q1, q2});
  Mat t = transport(q0, q1);
  r.record(t.rows() == t.cols() && dense_rank(t) == t.cols(), "basis transport d -> d+1");
  if (r.pass) r.record(a1.matrix * t == t * a0.matrix, "connection matrix at depths " + std::to_string(depth) + " and " +
                                                          std::to_string(depth + 1));
  return r;
}

CheckResult euler_check(const CovacuaProblem& p, int depth, Exec exec) {
  CheckResult r;
  Quotients q = quotients(p, depth, exec);
  const int n = q.lo.dimension;
  Mat sum(n, n);
  for (std::size_t a = 0; a < p.points.size(); ++a) {
    if (p.points[a].at_infinity()) continue;
    sum.add_scaled(*p.points[a].coord, matrix_from(p, static_cast<int>(a), q).matrix);
  }
  Mat want(n, n);
  const auto& lay = *q.lo.layout;
  for (int j = 0; j < n; ++j) {
    const int col = q.lo.quotient.free_columns()[j];
    const auto& depths = lay.tuples()[lay.locate(col).first];
    Q lambda(0);
    for (std::size_t a = 0; a < p.points.size(); ++a) {
      Q l0 = p.points[a].module->h() + depths[a];
      lambda += p.points[a].at_infinity() ? l0 : Q(-l0);
    }
    want(j, j) = lambda;
  }
  r.record(sum == want, "sum_a w_a A_a against the L_0 eigenvalues of the basis columns");
  return r;
}

std::optional<RatFunc> rational_interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys, int degree) {
  const int m = degree + 1;
  SparseMatrix sys(2 * m);
  for (std::size_t s = 0; s < xs.size(); ++s) {
    SVec row;
    Q pw(1);
    for (int i = 0; i < m; ++i) {
      if (pw != 0) row.emplace_back(i, pw);
      pw *= xs[s];
    }
    pw = 1;
    for (int i = 0; i < m; ++i) {
      Q v = -ys[s] * pw;
      if (v != 0) row.emplace_back(m + i, v);
      pw *= xs[s];
    }
    normalize(row);
    sys.add_row(row);
  }
  for (const Vec& k : rank_kernel(sys, Exec::Serial).kernel) {
    Poly num(Vec(k.begin(), k.begin() + m));
    Poly den(Vec(k.begin() + m, k.end()));
    if (den.is_zero()) continue;
    return RatFunc(num, den);
  }
  return std::nullopt;
}

Mat MatrixFunction::eval(const Q& x) const {
  const int n = static_cast<int>(entries.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[i][j].eval(x);
  return m;
}

Mat MatrixFunction::derivative(const Q& x) const {
  const int n = static_cast<int>(entries.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[i][j].derivative().eval(x);
  return m;
}

MatrixFunction interpolate_connection(const CovacuaProblem& p, int a, int b, int depth,
                                      const InterpolationConfig& cfg, Exec exec) {
  if (p.points[b].at_infinity()) throw std::invalid_argument("interpolate_connection: variable point must be finite");
  MatrixFunction f;
  f.point = a;
  f.variable = b;
  ConnectionMatrix base = connection_matrix(p, a, depth, exec);
  f.basis_labels = base.basis_labels;
  const int n = base.dimension();
  if (n == 0) return f;
  const Q w = *p.points[b].coord;
  std::vector<Q> xs;
  std::vector<Mat> ys;
  int next = 1;
  auto grow = [&](std::size_t want) {
    while (xs.size() < want) {
      const int s = next++;
      Q x = w + ratio(s % 2 ? s : -s, 3 + s % 5);
      if (!coordinate_free(p, b, x)) continue;
      CovacuaProblem q = moved(p, b, x);
      ConnectionMatrix c;
      try {
        c = connection_matrix(q, a, depth, exec);
      } catch (const std::runtime_error&) {
        continue;
      }
      if (c.basis_columns != base.basis_columns) continue;
      xs.push_back(x);
      ys.push_back(c.matrix);
    }
  };
  int deg = cfg.degree_start > 0 ? cfg.degree_start : static_cast<int>(p.points.size()) + 2;
  for (; deg <= cfg.degree_cap; deg *= 2) {
    const std::size_t fit = 2 * static_cast<std::size_t>(deg) + 2;
    grow(fit + cfg.holdout);
    std::vector<Q> fx(xs.begin(), xs.begin() + fit);
    bool ok = true;
    f.entries.assign(n, std::vector<RatFunc>(n));
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        std::vector<Q> fy;
        for (std::size_t s = 0; s < fit; ++s) fy.push_back(ys[s](i, j));
        auto g = rational_interpolate(fx, fy, deg);
        if (!g) {
          ok = false;
          break;
        }
        for (std::size_t s = fit; s < xs.size() && ok; ++s) {
          if (g->den().eval(xs[s]) == 0 || g->eval(xs[s]) != ys[s](i, j)) ok = false;
        }
        f.entries[i][j] = *g;
      }
    if (ok) {
      f.degree = deg;
      return f;
    }
  }
  throw std::runtime_error("interpolation-degree-exceeded");
}

FlatnessReport flatness_check(const CovacuaProblem& p, int a, int b, int depth, const InterpolationConfig& cfg,
                              int extra, Exec exec) {
  FlatnessReport r;
  r.a = a;
  r.b = b;
  r.depth = depth;
  std::vector<CovacuaProblem> configs{p};
  for (int s = 1, made = 0; made < extra; ++s) {
    Q x = *p.points[a].coord + ratio(s, 5);
    if (!coordinate_free(p, a, x)) continue;
    configs.push_back(moved(p, a, x));
    ++made;
  }
  for (const auto& q : configs) {
    ConnectionMatrix ma = connection_matrix(q, a, depth, exec);
    ConnectionMatrix mb = connection_matrix(q, b, depth, exec);
    r.dimension = ma.dimension();
    if (ma.basis_columns != mb.basis_columns) {
      r.result.record(false, "basis columns differ between the two directions");
      continue;
    }
    MatrixFunction fb = interpolate_connection(q, b, a, depth, cfg, exec);  // A_b(w_a)
    MatrixFunction fa = interpolate_connection(q, a, b, depth, cfg, exec);  // A_a(w_b)
    r.degree = std::max({r.degree, fa.degree, fb.degree});
    const int n = ma.dimension();
    Mat curv(n, n);
    if (n > 0) {
      curv = fb.derivative(*q.points[a].coord) - fa.derivative(*q.points[b].coord) + ma.matrix * mb.matrix -
             mb.matrix * ma.matrix;
      r.result.record(fb.eval(*q.points[a].coord) == mb.matrix && fa.eval(*q.points[b].coord) == ma.matrix,
                      "interpolants reproduce the matrices at the evaluation point");
    }
    r.result.record(curv.is_zero(), "curvature at " + q.str());
    r.curvatures.push_back(curv);
  }
  return r;
}

OdeExport export_ode(const CovacuaProblem& p, int movable, int depth, const InterpolationConfig& cfg, Exec exec) {
  MatrixFunction f = interpolate_connection(p, movable, movable, depth, cfg, exec);
  OdeExport out;
  nlohmann::ordered_json doc;
  doc["system"] = "dF/dw = A(w)^T F, F_j = Phi(e_j)";
  doc["variable"] = "w";
  doc["movable_point"] = movable;
  doc["depth"] = depth;
  doc["interpolation_degree"] = f.degree;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& pt : p.points)
    pts.push_back({{"coordinate", pt.coord ? to_string(*pt.coord) : std::string("inf")}, {"module", pt.module->label()}});
  doc["points"] = pts;
  const int n = static_cast<int>(f.entries.size());
  doc["dimension"] = n;
  doc["basis"] = f.basis_labels;
  nlohmann::ordered_json mat = nlohmann::ordered_json::array();
  std::vector<Q> poles;
  bool irrational = false;
  for (int i = 0; i < n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < n; ++j) {
      row.push_back(f.entries[i][j].str("w"));
      Poly rest;
      for (const Q& x : f.entries[i][j].rational_poles(&rest))
        if (std::find(poles.begin(), poles.end(), x) == poles.end()) poles.push_back(x);
      irrational = irrational || rest.degree() > 0;
    }
    mat.push_back(row);
  }
  std::sort(poles.begin(), poles.end());
  doc["matrix"] = mat;
  nlohmann::ordered_json locus = nlohmann::ordered_json::array();
  for (const Q& x : poles) {
    locus.push_back(to_string(x));
    if (coordinate_free(p, movable, x)) out.singularities_at_marked_points = false;
  }
  if (irrational) out.singularities_at_marked_points = false;
  doc["singular_locus"] = locus;
  doc["singularities_at_marked_points"] = out.singularities_at_marked_points;
  out.document = doc.dump(2);
  return out;
}

}  // namespace cb

#include "cb/voa/axioms.hpp"

#include <sstream>

namespace cb {

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (!ok && pass) {
    pass = false;
    witness = what;
  }
}

void CheckResult::merge(const CheckResult& o) {
  cases += o.cases;
  if (!o.pass && pass) {
    pass = false;
    witness = o.witness;
  }
}

namespace {

std::string tag(const char* name, const GradedModule* m, std::initializer_list<int> xs) {
  std::ostringstream os;
  os << name;
  if (m) os << " on " << m->label();
  os << " [";
  bool first = true;
  for (int x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace

CheckResult verify_commutator(ModeEngine& e, GradedModule& m, const State& v1, int p, const State& v2,
                              int n, int depth) {
  CheckResult r;
  if (depth - n < 0 || depth - n - p < 0) return r;
  Mat lhs = e.mode(m, v1, p, depth - n) * e.mode(m, v2, n, depth);
  lhs -= e.mode(m, v2, n, depth - p) * e.mode(m, v1, p, depth);
  Mat rhs(lhs.rows(), lhs.cols());
  for (int j = 0; j <= v1.weight + v2.weight - 1; ++j) {
    const int k = j - v1.weight + 1;
    if (v2.weight - k < 0) break;
    Q coef = binom(Q(p + v1.weight - 1), j);
    if (coef == 0) continue;
    rhs.add_scaled(coef, e.mode(m, e.apply(v1, k, v2), p + n, depth));
  }
  r.record(lhs == rhs, tag("commutator", &m, {v1.weight, p, v2.weight, n, depth}));
  return r;
}

CheckResult verify_associativity(ModeEngine& e, GradedModule& m, const State& v1, int n, const State& v2,
                                 int p, int depth) {
  CheckResult r;
  const int d1 = v1.weight;
  State u = e.apply(v1, n, v2);
  if (v2.weight - n < 0) return r;
  if (depth - p < 0) return r;
  Mat lhs = e.mode(m, u, p, depth);
  Mat rhs(lhs.rows(), lhs.cols());
  const Q top(n + d1 - 1);
  // a_(n+D1-1-j) b_(q+j) - (-1)^(n+D1-1) b_(...) a_(j)
  for (int j = 0; j <= depth - p + n; ++j) {
    Q coef = binom(top, j) * sign_pow(j);
    if (coef == 0) continue;
    const int k2 = p - n + j;
    if (depth - k2 < 0) continue;
    rhs.add_product(coef, e.mode(m, v1, n - j, depth - k2), e.mode(m, v2, k2, depth));
  }
  for (int j = 0; j <= depth + d1 - 1; ++j) {
    Q coef = binom(top, j) * sign_pow(j) * (-sign_pow(n + d1 - 1));
    if (coef == 0) continue;
    const int k1 = j - d1 + 1;
    if (depth - k1 < 0) continue;
    rhs.add_product(coef, e.mode(m, v2, p + d1 - 1 - j, depth - k1), e.mode(m, v1, k1, depth));
  }
  r.record(lhs == rhs, tag("associativity", &m, {d1, n, v2.weight, p, depth}));
  return r;
}

CheckResult verify_skew_symmetry(ModeEngine& e, const State& v1, const State& v2, int n) {
  CheckResult r;
  if (v2.weight - n < 0) return r;
  State lhs = e.apply(v1, n, v2);
  State rhs = e.zero_state(lhs.weight);
  Q fact(1);
  for (int j = 0; j <= v2.weight - n; ++j) {
    if (j > 0) fact *= j;
    State t = e.apply(v2, n + v1.weight - v2.weight + j, v1);
    for (int i = 0; i < j; ++i) t = e.apply_vir(-1, t);
    if (t.weight != lhs.weight) continue;
    rhs = rhs + (Q(sign_pow(n + v1.weight + j)) / fact) * t;
  }
  r.record(lhs == rhs, tag("skew", nullptr, {v1.weight, v2.weight, n}));
  return r;
}

CheckResult verify_derivation(ModeEngine& e, GradedModule& m, const State& v, int n, int depth) {
  CheckResult r;
  if (depth - n < 0) return r;
  Mat lhs = m.vir(-1, depth - n) * e.mode(m, v, n, depth);
  lhs -= e.mode(m, v, n, depth + 1) * m.vir(-1, depth);
  Mat rhs = e.mode(m, v, n - 1, depth);
  rhs *= Q(-(n + v.weight - 1));
  r.record(lhs == rhs, tag("derivation", &m, {v.weight, n, depth}));
  return r;
}

CheckResult verify_translation(ModeEngine& e, GradedModule& m, const State& v, int n, int depth) {
  CheckResult r;
  if (depth - n < 0) return r;
  State tv = e.apply_vir(-1, v);
  Mat lhs = e.mode(m, tv, n, depth);
  Mat rhs = e.mode(m, v, n, depth);
  rhs *= Q(-(n + v.weight));
  r.record(lhs == rhs, tag("translation", &m, {v.weight, n, depth}));
  return r;
}

CheckResult verify_creation(ModeEngine& e, const State& v) {
  CheckResult r;
  State vac = e.vacuum_state();
  r.record(e.apply(v, -v.weight, vac) == v, tag("creation", nullptr, {v.weight}));
  for (int n = -v.weight + 1; n <= 2; ++n)
    r.record(e.apply(v, n, vac).is_zero(), tag("creation", nullptr, {v.weight, n}));
  return r;
}

CheckResult verify_square(ModeEngine& e, GradedModule& m, const State& v1, const State& v2, int p,
                          int depth) {
  // J_{-2p}(J_{-D1}(v1)v2) = sum_j J_{-D1-j}(v1) J_{-2p+D1+j}(v2) + J_{-2p+D1-j-1}(v2) J_{j-D1+1}(v1)
  CheckResult r;
  const int d1 = v1.weight;
  State u = e.apply(v1, -d1, v2);
  Mat lhs = e.mode(m, u, -2 * p, depth);
  Mat rhs(lhs.rows(), lhs.cols());
  for (int j = 0; j <= depth + 2 * p; ++j) {
    const int k = -2 * p + d1 + j;
    if (depth - k >= 0) rhs.add_product(Q(1), e.mode(m, v1, -d1 - j, depth - k), e.mode(m, v2, k, depth));
  }
  for (int j = 0; j <= depth + d1 - 1; ++j) {
    const int k = j - d1 + 1;
    if (depth - k >= 0)
      rhs.add_product(Q(1), e.mode(m, v2, -2 * p + d1 - j - 1, depth - k), e.mode(m, v1, k, depth));
  }
  r.record(lhs == rhs, tag("square", &m, {d1, v2.weight, p, depth}));
  return r;
}

CheckResult verify_theta_involution(ModeEngine& e, const State& v, int n) {
  CheckResult r;
  ModeSum s;
  add_mode(s, Q(1), v, n);
  r.record(e.theta(e.theta(s)) == s, tag("theta-involution", nullptr, {v.weight, n}));
  return r;
}

CheckResult verify_theta_antihomomorphism(ModeEngine& e, GradedModule& m, const State& v1, int p,
                                          const State& v2, int n, int depth) {
  CheckResult r;
  CurrentAlgebra g(e);
  ModeSum comm = g.commutator_terms(v1, p, v2, n);
  const int top = depth + p + n;
  if (top < 0) return r;
  Mat lhs = e.mode(m, e.theta(comm), -(p + n), depth);
  ModeSum ta = e.theta(v1, p), tb = e.theta(v2, n);
  Mat rhs(lhs.rows(), lhs.cols());
  if (depth + p >= 0) rhs.add_product(Q(1), e.mode(m, tb, -n, depth + p), e.mode(m, ta, -p, depth));
  if (depth + n >= 0) rhs.add_product(Q(-1), e.mode(m, ta, -p, depth + n), e.mode(m, tb, -n, depth));
  r.record(lhs == rhs, tag("theta-antihom", &m, {v1.weight, p, v2.weight, n, depth}));
  return r;
}

CheckResult verify_contragredient(ModeEngine& e, const ModulePtr& m, const State& v, int n, int depth) {
  CheckResult r;
  if (depth - n < 0) return r;
  auto d = dual_module(m);
  r.record(e.mode(*d, v, n, depth) == e.contragredient_mode(*m, v, n, depth),
           tag("contragredient", m.get(), {v.weight, n, depth}));
  return r;
}

CheckResult verify_bracket_commutator(CurrentAlgebra& g, ModeEngine& e, GradedModule& m, const State& v1,
                                      int p, const State& v2, int n, int depth) {
  CheckResult r;
  if (depth - n < 0 || depth - n - p < 0) return r;
  Mat lhs = e.mode(m, v1, p, depth - n) * e.mode(m, v2, n, depth);
  lhs -= e.mode(m, v2, n, depth - p) * e.mode(m, v1, p, depth);
  CurrentElement a{v1, {{p + v1.weight - 1, Q(1)}}};
  CurrentElement b{v2, {{n + v2.weight - 1, Q(1)}}};
  Mat rhs = g.op(m, g.bracket(a, b), p + n, depth);
  r.record(lhs == rhs, tag("bracket", &m, {v1.weight, p, v2.weight, n, depth}));
  return r;
}

CheckResult verify_jacobi(CurrentAlgebra& g, const CurrentElement& a, const CurrentElement& b,
                          const CurrentElement& c) {
  CheckResult r;
  ModeSum ma = to_modes(a), mb = to_modes(b), mc = to_modes(c);
  ModeSum total;
  for (const auto& part : {g.bracket(ma, g.bracket(mb, mc)), g.bracket(mb, g.bracket(mc, ma)),
                           g.bracket(mc, g.bracket(ma, mb))})
    for (const auto& [k, v] : part) add_mode(total, Q(1), State{k.first, v}, k.second);
  r.record(is_zero(total), tag("jacobi", nullptr, {a.state.weight, b.state.weight, c.state.weight}));
  ModeSum aa = g.bracket(ma, ma);
  r.record(is_zero(aa), tag("antisymmetry", nullptr, {a.state.weight}));
  return r;
}

namespace {

std::vector<State> low_states(ModeEngine& e, int max_weight) {
  std::vector<State> out;
  for (int w = 0; w <= max_weight; ++w)
    for (int i = 0; i < e.dim(w); ++i) out.push_back(e.basis_state(w, i));
  return out;
}

State sample_state(ModeEngine& e, std::mt19937_64& rng, int max_weight) {
  for (;;) {
    int w = uniform_int(rng, 0, max_weight);
    if (e.dim(w) > 0) return e.random_state(rng, w);
  }
}

CurrentElement sample_current(ModeEngine& e, std::mt19937_64& rng, int max_weight, int range) {
  CurrentElement x{sample_state(e, rng, max_weight), {}};
  const int terms = uniform_int(rng, 1, 2);
  for (int t = 0; t < terms; ++t) x.laurent[uniform_int(rng, -range, range + 2)] += uniform_int(rng, 1, 3);
  return x;
}

}  // namespace

std::vector<AxiomTally> run_axiom_suite(ModeEngine& e, const std::vector<ModulePtr>& probes,
                                        const AxiomSuiteConfig& cfg) {
  CheckResult comm, assoc, skew, deriv, trans, create, square, theta2, anti, contra, brack, jacobi;
  CurrentAlgebra g(e);
  const int R = cfg.mode_range;

  // exhaustive part
  auto low = low_states(e, cfg.exhaustive_weight);
  for (const auto& v : low) {
    create.merge(verify_creation(e, v));
    for (int n = -R; n <= R; ++n) theta2.merge(verify_theta_involution(e, v, n));
    for (const auto& w : low)
      for (int n = -R; n <= R; ++n) skew.merge(verify_skew_symmetry(e, v, w, n));
  }
  for (const auto& mp : probes) {
    GradedModule& m = *mp;
    for (int d = 0; d <= cfg.depth; ++d)
      for (const auto& v : low)
        for (int n = -R; n <= R; ++n) {
          deriv.merge(verify_derivation(e, m, v, n, d));
          trans.merge(verify_translation(e, m, v, n, d));
          contra.merge(verify_contragredient(e, mp, v, n, d));
        }
    for (const auto& v : low)
      for (const auto& w : low)
        for (int p = -R; p <= R; ++p)
          for (int n = -R; n <= R; ++n) {
            const int d = std::min(cfg.depth, 2);
            comm.merge(verify_commutator(e, m, v, p, w, n, d));
            brack.merge(verify_bracket_commutator(g, e, m, v, p, w, n, d));
            assoc.merge(verify_associativity(e, m, v, p, w, n, d));
          }
  }
  for (std::size_t i = 0; i < low.size(); ++i)
    for (std::size_t j = 0; j < low.size(); ++j)
      for (std::size_t k = 0; k < low.size(); ++k)
        jacobi.merge(verify_jacobi(g, {low[i], {{1, Q(1)}}}, {low[j], {{0, Q(1)}, {2, Q(1)}}},
                                   {low[k], {{-1, Q(1)}, {3, Q(1)}}}));

  // seeded samples
  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const auto& mp = probes[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(probes.size()) - 1))];
    GradedModule& m = *mp;
    State v1 = sample_state(e, rng, cfg.sample_weight);
    State v2 = sample_state(e, rng, cfg.sample_weight);
    const int p = uniform_int(rng, -R, R), n = uniform_int(rng, -R, R);
    const int d = uniform_int(rng, 0, cfg.depth);
    comm.merge(verify_commutator(e, m, v1, p, v2, n, d));
    assoc.merge(verify_associativity(e, m, v1, n, v2, p, d));
    skew.merge(verify_skew_symmetry(e, v1, v2, n));
    deriv.merge(verify_derivation(e, m, v1, n, d));
    trans.merge(verify_translation(e, m, v1, n, d));
    create.merge(verify_creation(e, v1));
    square.merge(verify_square(e, m, v1, v2, uniform_int(rng, 1, 3), d));
    theta2.merge(verify_theta_involution(e, v1, n));
    anti.merge(verify_theta_antihomomorphism(e, m, v1, p, v2, n, d));
    contra.merge(verify_contragredient(e, mp, v1, n, d));
    brack.merge(verify_bracket_commutator(g, e, m, v1, p, v2, n, d));
    const int jw = cfg.sample_weight;
    jacobi.merge(verify_jacobi(g, sample_current(e, rng, jw, R), sample_current(e, rng, jw, R),
                               sample_current(e, rng, jw, R)));
  }

  return {{"commutator", comm},       {"associativity", assoc},   {"skew-symmetry", skew},
          {"derivation", deriv},      {"translation", trans},     {"creation", create},
          {"square", square},         {"theta-involution", theta2}, {"theta-antihomomorphism", anti},
          {"contragredient", contra}, {"bracket", brack},         {"jacobi", jacobi}};
}

}  // namespace cb

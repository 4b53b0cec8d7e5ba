#include "cb/blocks/correlation.hpp"

#include <stdexcept>

namespace cb {

BlockFunctional::BlockFunctional(std::shared_ptr<const BlockSpace> space, Vec weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != space_->dimension)
    throw std::invalid_argument("BlockFunctional: weight vector does not match the block dimension");
}

Q BlockFunctional::column(int col) const {
  auto it = memo_.find(col);
  if (it != memo_.end()) return it->second;
  Q v = dot(space_->quotient.reduce(SVec{{col, Q(1)}}), weights_);
  memo_.emplace(col, v);
  return v;
}

Q BlockFunctional::operator()(const TensorVec& u) const {
  Q out(0);
  for (const auto& [col, x] : u) out += x * column(col);
  return out;
}

std::vector<BlockFunctional> dual_functionals(const std::shared_ptr<const BlockSpace>& space) {
  std::vector<BlockFunctional> out;
  for (int i = 0; i < space->dimension; ++i) {
    Vec w(space->dimension);
    w[i] = 1;
    out.emplace_back(space, w);
  }
  return out;
}

Correlator::Correlator(ModeEngine& e, CovacuaProblem p, BlockFunctional phi)
    : e_(e), p_(std::move(p)), phi_(std::move(phi)) {
  for (std::size_t a = 0; a < p_.points.size(); ++a)
    if (!p_.points[a].at_infinity()) finite_.push_back(static_cast<int>(a));
}

TensorVec Correlator::act(int a, const State& v, int n, const TensorVec& u) {
  const auto& lay = layout();
  const bool inf = p_.points[a].at_infinity();
  GradedModule& m = *p_.points[a].module;
  ModeSum th;
  if (inf) th = e_.theta(v, n);
  TensorVec acc;
  for (const auto& [col, x] : u) {
    const int d = lay.tuples()[lay.locate(col).first][a];
    const int td = inf ? d + n : d - n;
    if (td < 0) continue;
    Mat op = inf ? e_.mode(m, th, -n, d) : e_.mode(m, v, n, d);
    if (!apply_at_point(lay, col, a, op, td, x, acc))
      throw std::out_of_range("Correlator: action leaves the truncation window");
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return acc;
}

int Correlator::room(const TensorVec& u) const {
  int deepest = 0;
  for (const auto& [col, x] : u) {
    (void)x;
    deepest = std::max(deepest, layout().total_depth(col));
  }
  return layout().depth() - deepest;
}

Q Correlator::predicted_coefficient(const State& v, const TensorVec& u, int a, int k) {
  return phi_(act(a, v, -k - v.weight, u));
}

namespace {

int max_depth_at(const TensorLayout& lay, const TensorVec& u, int a) {
  int d = 0;
  for (const auto& [col, x] : u) {
    (void)x;
    d = std::max(d, lay.tuples()[lay.locate(col).first][a]);
  }
  return d;
}

}  // namespace

void Correlator::add_one_point(RationalForm& out, int var, int offset, const Q& coef, const State& v,
                               const TensorVec& u, std::vector<int> extra, std::vector<int> mono) {
  if (coef == 0 || v.is_zero() || u.empty()) return;
  const int w = v.weight;
  extra.resize(out.factors().size(), 0);
  mono.resize(out.nvars(), 0);
  for (std::size_t i = 0; i < finite_.size(); ++i) {
    const int a = finite_[i];
    const int top = max_depth_at(layout(), u, a);
    for (int n = 1 - w; n <= top; ++n) {
      Q val = phi_(act(a, v, n, u));
      if (val == 0) continue;
      auto pows = extra;
      pows[offset + i] += n + w;
      out.add_term(coef * val, mono, pows);
    }
  }
  const int ia = p_.infinity_index();
  if (ia >= 0) {
    const int top = max_depth_at(layout(), u, ia);
    for (int m = 0; m <= top - w; ++m) {
      Q val = phi_(act(ia, v, -m - w, u));
      if (val == 0) continue;
      auto mm = mono;
      mm[var] += m;
      out.add_term(coef * val, mm, extra);
    }
  } else if (w == 0) {
    out.add_term(coef * v.coords[0] * phi_(u), mono, extra);
  }
}

RationalForm Correlator::one_point(const State& v, const TensorVec& u) {
  std::vector<MPoly> factors;
  for (int a : finite_) factors.push_back(MPoly::linear(-*p_.points[a].coord, {Q(1)}));
  RationalForm out({"z"}, factors);
  add_one_point(out, 0, 0, Q(1), v, u, {}, {});
  return out;
}

RationalForm Correlator::two_point(const State& v1, const State& v2, const TensorVec& u) {
  const int nf = static_cast<int>(finite_.size());
  std::vector<MPoly> factors;
  for (int var = 0; var < 2; ++var)
    for (int a : finite_) {
      std::vector<Q> lin(2);
      lin[var] = 1;
      factors.push_back(MPoly::linear(-*p_.points[a].coord, lin));
    }
  factors.push_back(MPoly::linear(Q(0), {Q(1), Q(-1)}));
  RationalForm out({"z1", "z2"}, factors);
  const int w1 = v1.weight;
  for (int i = 0; i < nf; ++i) {
    const int a = finite_[i];
    const int top = max_depth_at(layout(), u, a);
    for (int n = 1 - w1; n <= top; ++n) {
      TensorVec u1 = act(a, v1, n, u);
      std::vector<int> extra(factors.size(), 0);
      extra[i] = n + w1;
      add_one_point(out, 1, nf, Q(1), v2, u1, extra, {});
    }
  }
  for (int n = 1 - w1; n <= v2.weight; ++n) {
    State s = e_.apply(v1, n, v2);
    std::vector<int> extra(factors.size(), 0);
    extra[2 * nf] = n + w1;
    add_one_point(out, 1, nf, Q(1), s, u, extra, {});
  }
  const int ia = p_.infinity_index();
  if (ia >= 0) {
    const int top = max_depth_at(layout(), u, ia);
    for (int m = 0; m <= top - w1; ++m) {
      TensorVec u1 = act(ia, v1, -m - w1, u);
      add_one_point(out, 1, nf, Q(1), v2, u1, {}, {m, 0});
    }
  } else if (w1 == 0) {
    add_one_point(out, 1, nf, v1.coords[0], v2, u, {}, {});
  }
  return out;
}

namespace {

RatFunc form_function(const CovacuaProblem& p, const Form& f) {
  if (f.pole >= 0) return RatFunc::pole(Q(1), *p.points[f.pole].coord, f.order);
  return RatFunc::poly(Poly::monomial(Q(1), f.order));
}

std::string form_str(const CovacuaProblem& p, const Form& f) {
  if (f.pole >= 0) return "(z-" + to_string(*p.points[f.pole].coord) + ")^-" + std::to_string(f.order);
  return "z^" + std::to_string(f.order);
}

}  // namespace

Q residue_sum(const Correlator& c, const RationalForm& phi1, const Form& f) {
  RatFunc g = phi1.to_univariate(0) * form_function(c.problem(), f);
  Q s(0);
  for (const auto& pt : c.problem().points) s += pt.at_infinity() ? g.residue_at_infinity() : g.residue_at(*pt.coord);
  return s;
}

CheckResult check_one_point(Correlator& c, const State& v, const TensorVec& u) {
  CheckResult r;
  const int w = v.weight;
  const int room = c.room(u);
  if (room < w - 1) throw std::invalid_argument("check_one_point: not enough room above u");
  RationalForm phi = c.one_point(v, u);
  RatFunc f = phi.to_univariate(0);
  const auto& p = c.problem();
  for (std::size_t a = 0; a < p.points.size(); ++a) {
    const int ai = static_cast<int>(a);
    const int top = max_depth_at(c.layout(), u, ai);
    if (p.points[a].at_infinity()) {
      auto lau = f.laurent_at_infinity(-room - w);
      for (int k = top - w; k >= -room - w; --k) {
        Q got = lau.count(k) ? lau[k] : Q(0);
        r.record(got == c.predicted_coefficient(v, u, ai, k),
                 "Laurent coefficient z^" + std::to_string(k) + " at infinity");
      }
      for (const auto& [k, x] : lau)
        if (k > top - w) r.record(x == 0, "growth at infinity beyond z^" + std::to_string(top - w));
    } else {
      auto lau = f.laurent_at(*p.points[a].coord, room - w);
      for (int k = -(top + w); k <= room - w; ++k) {
        Q got = lau.count(k) ? lau[k] : Q(0);
        r.record(got == c.predicted_coefficient(v, u, ai, k),
                 "Laurent coefficient xi^" + std::to_string(k) + " at point " + std::to_string(a));
      }
    }
  }
  CovacuaAssembler as(c.engine(), p, 0);
  if (w > 0)
    for (const auto& form : as.forms(w, room))
    r.record(residue_sum(c, phi, form) == 0, "residue sum against " + form_str(p, form));
  if (room >= w) {
    RatFunc lhs = c.one_point(c.engine().apply_vir(-1, v), u).to_univariate(0);
    r.record(lhs == f.derivative(), "derivative identity");
  }
  if (w == 0) {
    Q phu = c.functional()(u);
    r.record(f == RatFunc::poly(Poly::constant(phu)) * (v.coords.empty() ? Q(0) : v.coords[0]),
             "vacuum one-point function is constant");
  }
  return r;
}

CheckResult check_two_point(Correlator& c, const State& v1, const State& v2, const TensorVec& u, const Q& z2) {
  CheckResult r;
  const int w1 = v1.weight, w2 = v2.weight;
  const int room = c.room(u);
  if (room < w1 + w2 - 2) throw std::invalid_argument("check_two_point: not enough room above u");
  for (const auto& pt : c.problem().points)
    if (pt.coord && *pt.coord == z2) throw std::invalid_argument("check_two_point: sample on a marked point");
  RationalForm f12 = c.two_point(v1, v2, u);
  RationalForm f21 = c.two_point(v2, v1, u).swapped(0, 1);
  r.record(equal(f12, f21), "S2 symmetry");

  RationalForm g = c.two_point(c.engine().vacuum_state(), v2, u);
  RationalForm h = c.one_point(v2, u);
  for (int s = 0; s < 3; ++s) {
    Q z1 = z2 + ratio(2 * s + 3, 7);
    bool clash = false;
    for (const auto& pt : c.problem().points) clash = clash || (pt.coord && *pt.coord == z1);
    if (clash) continue;
    r.record(g.eval({z1, z2}) == h.eval({z2}), "vacuum insertion reduces to the one-point function");
  }

  RatFunc line = f12.substitute(1, z2).to_univariate(0);
  const int top = room - w1 - w2 + 1;
  auto lau = line.laurent_at(z2, top);
  for (int k = -(w1 + w2); k <= top; ++k) {
    State s = c.engine().apply(v1, -k - w1, v2);
    Q want = s.is_zero() ? Q(0) : c.one_point(s, u).eval({z2});
    Q got = lau.count(k) ? lau[k] : Q(0);
    r.record(got == want, "expansion at z1 = z2, order " + std::to_string(k));
  }
  return r;
}

}  // namespace cb

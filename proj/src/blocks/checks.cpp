#include "cb/blocks/checks.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cb {

int embed_column(const TensorLayout& lo, const TensorLayout& hi, int col) {
  auto [t, local] = lo.locate(col);
  int ht = hi.find_tuple(lo.tuples()[t]);
  if (ht < 0) throw std::out_of_range("embed_column: tuple missing from the larger window");
  return hi.column(ht, lo.local_index(t, local));
}

TensorVec vir_at(const CovacuaProblem& p, const TensorLayout& from, const TensorLayout& to, int a, int n, int col) {
  if (p.points[a].at_infinity()) throw std::invalid_argument("vir_at: finite points only");
  auto [t, local] = from.locate(col);
  auto idx = from.local_index(t, local);
  std::vector<int> depths = from.tuples()[t];
  const int d = depths[a];
  TensorVec out;
  if (d - n < 0) return out;
  const Mat& op = p.points[a].module->vir(n, d);
  depths[a] = d - n;
  const int nt = to.find_tuple(depths);
  const int src = idx[a];
  for (int r = 0; r < op.rows(); ++r) {
    if (op(r, src) == 0) continue;
    if (nt < 0) throw std::out_of_range("vir_at: image leaves the window");
    idx[a] = r;
    out[to.column(nt, idx)] += op(r, src);
  }
  return out;
}

std::optional<Mat> quotient_operator(const BlockSpace& lo, const BlockSpace& hi,
                                     const std::function<TensorVec(int)>& op) {
  const int n = lo.dimension;
  if (hi.dimension != n) return std::nullopt;
  const auto& free = lo.quotient.free_columns();
  Mat p(n, n), raw(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e = hi.quotient.reduce(SVec{{embed_column(*lo.layout, *hi.layout, free[j]), Q(1)}});
    TensorVec img = op(free[j]);
    Vec r = hi.quotient.reduce(SVec(img.begin(), img.end()));
    for (int i = 0; i < n; ++i) {
      p(i, j) = e[i];
      raw(i, j) = r[i];
    }
  }
  auto inv = dense_inverse(p);
  if (!inv) return std::nullopt;
  return *inv * raw;
}

std::vector<ModulePtr> model_simples(const CovacuaProblem& p) {
  std::optional<std::pair<int, int>> model;
  for (const auto& pt : p.points) {
    GradedModule* m = pt.module.get();
    if (auto* d = dynamic_cast<ContragredientModule*>(m)) m = d->base().get();
    if (auto* s = dynamic_cast<SimpleModule*>(m); s && s->minimal_label()) {
      model = std::make_pair(s->minimal_label()->p, s->minimal_label()->q);
      break;
    }
  }
  if (!model) {
    const Q c = p.central_charge();
    for (int q = 3; q <= 40 && !model; ++q)
      for (int pp = 2; pp < q && !model; ++pp)
        if (std::gcd(pp, q) == 1 && central_charge(pp, q) == c) model = std::make_pair(pp, q);
  }
  std::vector<ModulePtr> out;
  if (!model) return out;
  for (const auto& l : distinct_labels(model->first, model->second)) out.push_back(simple_module(l));
  return out;
}

PropagationReport check_propagation_of_vacua(const CovacuaProblem& p, const std::vector<Q>& extra,
                                             const StabilizationConfig& cfg, Exec exec) {
  PropagationReport r;
  r.inserted = extra;
  BlockSpace base = block_dimension(p, cfg, exec);
  CovacuaProblem q = p;
  auto vac = vacuum_module(p.central_charge());
  for (const Q& w : extra) {
    for (const auto& pt : q.points)
      if (pt.coord && *pt.coord == w) throw std::invalid_argument("check_propagation_of_vacua: coordinate in use");
    q.points.push_back(MarkedPoint{w, vac});
  }
  BlockSpace ext = block_dimension(q, cfg, exec);
  r.base = base.dimension;
  r.extended = ext.dimension;
  r.stabilized = base.stabilized && ext.stabilized;
  r.history = base.history;
  r.history.insert(r.history.end(), ext.history.begin(), ext.history.end());
  return r;
}

namespace {

int generalized_multiplicity(const Mat& h, const Q& lambda) {
  const int n = h.rows();
  if (n == 0) return 0;
  Mat a = h;
  for (int i = 0; i < n; ++i) a(i, i) -= lambda;
  Mat pw = Mat::identity(n);
  for (int i = 0; i < n; ++i) pw = pw * a;
  return n - dense_rank(pw);
}

}  // namespace

bool DecompositionReport::pass() const {
  if (!stabilized || !transport) return false;
  int total = 0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (multiplicities[i] != direct[i]) return false;
    total += multiplicities[i];
  }
  return total == fusion_dimension;
}

std::string DecompositionReport::str() const {
  std::ostringstream os;
  os << "fusion quotient dim " << fusion_dimension << " at depth " << depth << (stabilized ? "" : " (unstable)")
     << "\n";
  for (std::size_t i = 0; i < channels.size(); ++i)
    os << "  " << channels[i]->label() << " h=" << to_string(channels[i]->h()) << ": eigen " << multiplicities[i]
       << ", direct " << direct[i] << "\n";
  return os.str();
}

DecompositionReport check_decomposition(const CovacuaProblem& finite_part, std::vector<ModulePtr> channels,
                                        const StabilizationConfig& cfg, Exec exec) {
  if (finite_part.infinity_index() >= 0)
    throw std::invalid_argument("check_decomposition: the point at infinity carries M(0) implicitly");
  if (channels.empty()) channels = model_simples(finite_part);
  DecompositionReport r;
  r.channels = channels;
  CovacuaProblem fp = finite_part;
  fp.rule = FormRule::FusionAtInfinity;
  BlockSpace lo = block_dimension(fp, cfg, exec);
  r.fusion_dimension = lo.dimension;
  r.depth = lo.depth;
  r.stabilized = lo.stabilized;
  ModeEngine& e = shared_engine(fp.central_charge());
  BlockSpace hi = covacua_quotient(e, fp, lo.depth + 1, fp.weight_bound, exec);
  auto h = quotient_operator(lo, hi, [&](int col) {
    TensorVec out;
    for (std::size_t a = 0; a < fp.points.size(); ++a) {
      const Q& w = *fp.points[a].coord;
      for (const auto& [c, x] : vir_at(fp, *lo.layout, *hi.layout, static_cast<int>(a), -1, col)) out[c] += w * x;
      for (const auto& [c, x] : vir_at(fp, *lo.layout, *hi.layout, static_cast<int>(a), 0, col)) out[c] += x;
    }
    return out;
  });
  r.transport = h.has_value();
  if (h) r.h = *h;
  for (const auto& ch : channels) {
    r.multiplicities.push_back(h ? generalized_multiplicity(*h, ch->h()) : -1);
    CovacuaProblem d = finite_part;
    d.rule = FormRule::Auto;
    d.points.push_back(MarkedPoint{std::nullopt, ch});
    BlockSpace b = block_dimension(d, cfg, exec);
    r.direct.push_back(b.dimension);
    r.stabilized = r.stabilized && b.stabilized;
  }
  return r;
}

int FactorizationReport::channel_sum() const {
  int s = 0;
  for (const auto& t : terms) s += t.left * t.right;
  return s;
}

bool FactorizationReport::pass() const {
  bool ok = direct_stabilized && direct == channel_sum();
  for (const auto& t : terms) ok = ok && t.stabilized;
  return ok;
}

std::string FactorizationReport::str() const {
  std::ostringstream os;
  os << "channel            left  right  product\n";
  for (const auto& t : terms) {
    std::string name = t.channel->label();
    name.resize(std::max<std::size_t>(name.size(), 18), ' ');
    os << name << " " << t.left << "     " << t.right << "      " << t.left * t.right
       << (t.stabilized ? "" : "  (unstable)") << "\n";
  }
  os << "channel sum " << channel_sum() << ", direct " << direct << (direct_stabilized ? "" : " (unstable)") << "\n";
  return os.str();
}

FactorizationReport check_factorization(const CovacuaProblem& whole, int split, std::vector<ModulePtr> channels,
                                        const StabilizationConfig& cfg, Exec exec) {
  const int n = static_cast<int>(whole.points.size());
  if (split < 2 || n - split < 2) throw std::invalid_argument("check_factorization: each side needs two points");
  for (int a = 0; a < split; ++a)
    if (whole.points[a].at_infinity()) throw std::invalid_argument("check_factorization: infinity must be on the right");
  if (channels.empty()) channels = model_simples(whole);
  FactorizationReport r;
  BlockSpace direct = block_dimension(whole, cfg, exec);
  r.direct = direct.dimension;
  r.direct_stabilized = direct.stabilized;
  for (const auto& ch : channels) {
    CovacuaProblem left = whole, right = whole;
    left.points.assign(whole.points.begin(), whole.points.begin() + split);
    left.points.push_back(MarkedPoint{std::nullopt, ch});
    right.points.assign(whole.points.begin() + split, whole.points.end());
    Q free(0);
    for (bool used = true; used; free += 1) {
      used = false;
      for (const auto& pt : right.points) used = used || (pt.coord && *pt.coord == free);
      if (!used) break;
    }
    right.points.insert(right.points.begin(), MarkedPoint{free, ch});
    ChannelTerm t;
    t.channel = ch;
    BlockSpace bl = block_dimension(left, cfg, exec);
    BlockSpace br = block_dimension(right, cfg, exec);
    t.left = bl.dimension;
    t.right = br.dimension;
    t.stabilized = bl.stabilized && br.stabilized;
    r.terms.push_back(t);
  }
  return r;
}

std::vector<ModeSample> sample_modes(ModeEngine& e, int count, int max_weight, int max_shift, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ModeSample> out;
  while (static_cast<int>(out.size()) < count) {
    const int w = uniform_int(rng, 2, max_weight);
    if (e.dim(w) == 0) continue;
    State v = e.random_state(rng, w);
    if (v.is_zero()) continue;
    out.push_back(ModeSample{v, uniform_int(rng, -max_shift, max_shift)});
  }
  return out;
}

CheckResult sewing_element_check(ModeEngine& e, const ModulePtr& l, int q_order, const std::vector<ModeSample>& samples) {
  CheckResult r;
  auto dl = dual_module(l);
  for (const auto& s : samples) {
    for (int d = 0; d <= q_order; ++d) {
      const int lower = d - s.n;
      const std::string tag = "q^" + std::to_string(d) + " with n=" + std::to_string(s.n);
      if (lower > q_order) continue;
      if (lower < 0) {
        r.record(true, tag + " (both sides vanish by grading)");
        continue;
      }
      // Omega_d = sum_j u_{d,j} ⊗ u_d^j is the identity pairing, so both sides are matrices on L(lower) ⊗ L*(d).
      Mat left = e.mode(*l, s.v, s.n, d);
      Mat right = e.mode(*dl, e.theta(s.v, s.n), -s.n, lower);
      r.record(left == right.transpose(), tag);
    }
  }
  return r;
}

}  // namespace cb

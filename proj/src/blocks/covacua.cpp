#include "cb/blocks/covacua.hpp"

#include <omp.h>

#include <stdexcept>

namespace cb {

std::vector<std::pair<int, Q>> expand_form(const Form& f, const CovacuaProblem& p, int point, int kmin, int kmax) {
  std::vector<std::pair<int, Q>> out;
  const auto& pt = p.points[point];
  if (f.pole >= 0) {
    const Q& wa = *p.points[f.pole].coord;
    const int j = f.order;
    if (pt.at_infinity()) {
      // z^(-j) (1 - wa/z)^(-j)
      for (int i = 0; -j - i >= kmin; ++i) {
        Q c = binom(Q(-j), i) * power(-wa, i);
        if (c != 0) out.emplace_back(-j - i, c);
      }
    } else if (point == f.pole) {
      if (-j <= kmax) out.emplace_back(-j, Q(1));
    } else {
      const Q delta = *pt.coord - wa;
      for (int i = 0; i <= kmax; ++i) {
        Q c = binom(Q(-j), i) * power(delta, -j - i);
        if (c != 0) out.emplace_back(i, c);
      }
    }
    return out;
  }
  const int k = f.order;
  if (pt.at_infinity()) {
    if (k >= kmin) out.emplace_back(k, Q(1));
    return out;
  }
  const Q& wb = *pt.coord;
  for (int i = 0; i <= std::min(k, kmax); ++i) {
    Q c = binom(Q(k), i) * power(wb, k - i);
    if (c != 0) out.emplace_back(i, c);
  }
  return out;
}

bool apply_at_point(const TensorLayout& layout, int col, int a, const Mat& op, int target_depth, const Q& coef,
                    std::map<int, Q>& acc) {
  if (coef == 0) return true;
  auto [t, local] = layout.locate(col);
  auto idx = layout.local_index(t, local);
  const int src = idx[a];
  int nt = -2;
  for (int r = 0; r < op.rows(); ++r) {
    const Q& x = op(r, src);
    if (x == 0) continue;
    if (nt == -2) {
      std::vector<int> depths = layout.tuples()[t];
      depths[a] = target_depth;
      nt = layout.find_tuple(depths);
    }
    if (nt < 0) return false;
    idx[a] = r;
    Q& y = acc[layout.column(nt, idx)];
    y += coef * x;
  }
  return true;
}

CovacuaAssembler::CovacuaAssembler(ModeEngine& e, CovacuaProblem p, int weight_bound) : e_(e), p_(std::move(p)) {
  p_.validate();
  for (int w = 1; w <= weight_bound; ++w)
    for (int i = 0; i < e_.dim(w); ++i) states_.push_back(e_.basis_state(w, i));
  basis_states_ = static_cast<int>(states_.size());
  if (p_.infinity_index() >= 0 || p_.rule == FormRule::FusionAtInfinity) return;
  GradedModule& vac = e_.vacuum();
  for (int w = 1; w <= weight_bound; ++w) {
    const int dw = e_.dim(w);
    for (int k = w - 1; k <= 2 * w + 1; ++k) {
      const int n = k - w + 1;
      const int dn = e_.dim(n);
      SparseMatrix m(dw);
      Mat img(dn, dw);
      for (int i = 0; i < dw; ++i) {
        Mat op = e_.mode(vac, e_.theta(e_.basis_state(w, i), n), -n, 0);
        for (int r = 0; r < dn; ++r) img(r, i) = op(r, 0);
      }
      for (int r = 0; r < dn; ++r) {
        SVec row;
        for (int i = 0; i < dw; ++i)
          if (img(r, i) != 0) row.emplace_back(i, img(r, i));
        m.add_row(row);
      }
      for (const Vec& kv : rank_kernel(m, Exec::Serial).kernel) {
        states_.push_back(State{w, kv});
        regular_.emplace_back(static_cast<int>(states_.size()) - 1, k);
      }
    }
  }
}

int CovacuaAssembler::target_depth(int a, int sid, int k, int e) const {
  const int n = k - states_[sid].weight + 1;
  return p_.points[a].at_infinity() ? e + n : e - n;
}

const Mat& CovacuaAssembler::point_op(int a, int sid, int k, int e) {
  auto key = std::make_tuple(a, sid, k, e);
  auto it = ops_.find(key);
  if (it != ops_.end()) return it->second;
  const State& v = states_[sid];
  const int n = k - v.weight + 1;
  GradedModule& m = *p_.points[a].module;
  Mat op;
  if (p_.points[a].at_infinity()) {
    op = e_.mode(m, e_.theta(v, n), -n, e);
    op *= Q(-1);
  } else {
    op = e_.mode(m, v, n, e);
  }
  return ops_.emplace(key, std::move(op)).first->second;
}

std::vector<Form> CovacuaAssembler::forms(int weight, int room) const {
  std::vector<Form> out;
  const bool inf = p_.infinity_index() >= 0;
  for (std::size_t a = 0; a < p_.points.size(); ++a) {
    if (p_.points[a].at_infinity()) continue;
    for (int j = 1; j + weight - 1 <= room; ++j) out.push_back(Form{static_cast<int>(a), j});
  }
  int kmax = 0;
  FormRule rule = p_.rule;
  if (rule == FormRule::Auto && !inf) rule = FormRule::RegularAtInfinity;
  switch (rule) {
    case FormRule::Auto: kmax = room + weight - 1; break;
    case FormRule::RegularAtInfinity:
    case FormRule::FusionAtInfinity: kmax = weight - 2; break;
  }
  for (int k = 0; k <= kmax; ++k) out.push_back(Form{-1, k});
  std::vector<Form> kept;
  for (const auto& f : out)
    if (max_raise(f, weight) <= room) kept.push_back(f);
  return kept;
}

int CovacuaAssembler::max_raise(const Form& f, int weight) const {
  int r = -1000000;
  for (std::size_t a = 0; a < p_.points.size(); ++a) {
    const auto& pt = p_.points[a];
    if (pt.at_infinity()) {
      const int top = f.pole >= 0 ? -f.order : f.order;
      r = std::max(r, top - weight + 1);
      continue;
    }
    int low;
    if (f.pole >= 0)
      low = (static_cast<int>(a) == f.pole) ? -f.order : 0;
    else
      low = (*pt.coord == 0) ? f.order : 0;
    r = std::max(r, weight - 1 - low);
  }
  return r;
}

std::vector<CovacuaAssembler::Generator> CovacuaAssembler::generators(int room) const {
  std::vector<Generator> out;
  for (int sid = 0; sid < basis_states_; ++sid)
    for (const auto& f : forms(states_[sid].weight, room)) out.push_back(Generator{sid, f});
  for (const auto& [sid, k] : regular_) {
    Form f{-1, k};
    if (max_raise(f, states_[sid].weight) <= room) out.push_back(Generator{sid, f});
  }
  return out;
}

SVec CovacuaAssembler::relation_row(const TensorLayout& layout, int col, int sid, const Form& f) {
  auto [t, local] = layout.locate(col);
  (void)local;
  const auto& depths = layout.tuples()[t];
  const int w = states_[sid].weight;
  std::map<int, Q> acc;
  for (std::size_t a = 0; a < p_.points.size(); ++a) {
    const int d = depths[a];
    const bool inf = p_.points[a].at_infinity();
    auto ex = expand_form(f, p_, static_cast<int>(a), w - 1 - d, d + w - 1);
    for (const auto& [k, c] : ex) {
      auto it = ops_.find(std::make_tuple(static_cast<int>(a), sid, k, d));
      if (it == ops_.end()) throw std::logic_error("relation_row: operator not prepared");
      const int td = target_depth(static_cast<int>(a), sid, k, d);
      if (td < 0) continue;
      if (!apply_at_point(layout, col, static_cast<int>(a), it->second, td, c, acc))
        throw std::logic_error("relation_row: image leaves the depth window");
      (void)inf;
    }
  }
  SVec row;
  for (const auto& [c, x] : acc)
    if (x != 0) row.emplace_back(c, x);
  return row;
}

SparseMatrix CovacuaAssembler::assemble(const TensorLayout& layout, Exec exec, RelationStats* stats) {
  const int ntuples = static_cast<int>(layout.tuples().size());
  std::vector<std::vector<Generator>> jobs(ntuples);
  long dropped = 0;
  const long all = static_cast<long>(generators(layout.depth()).size());
  // serial phase: admissible generators per tuple and every operator they need
  for (int t = 0; t < ntuples; ++t) {
    const auto& depths = layout.tuples()[t];
    int total = 0;
    for (int x : depths) total += x;
    jobs[t] = generators(layout.depth() - total);
    dropped += (all - static_cast<long>(jobs[t].size())) * layout.tuple_size(t);
    for (const auto& g : jobs[t]) {
      const int w = states_[g.sid].weight;
      for (std::size_t a = 0; a < p_.points.size(); ++a) {
        const int d = depths[a];
        for (const auto& [k, c] : expand_form(g.form, p_, static_cast<int>(a), w - 1 - d, d + w - 1)) {
          (void)c;
          if (target_depth(static_cast<int>(a), g.sid, k, d) >= 0) point_op(static_cast<int>(a), g.sid, k, d);
        }
      }
    }
  }
  // parallel phase: rows per column, merged in column order
  const int ncols = layout.size();
  std::vector<std::vector<SVec>> rows(ncols);
  const int threads = exec == Exec::Parallel ? worker_threads() : 1;
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (int col = 0; col < ncols; ++col) {
    const int t = layout.locate(col).first;
    for (const auto& job : jobs[t]) {
      SVec r = relation_row(layout, col, job.sid, job.form);
      if (!r.empty()) rows[col].push_back(std::move(r));
    }
  }
  SparseMatrix m(ncols);
  for (auto& rs : rows)
    for (auto& r : rs) m.add_row(std::move(r));
  if (stats) {
    stats->rows = m.rows();
    stats->dropped = dropped;
  }
  return m;
}

BlockSpace covacua_quotient(ModeEngine& e, const CovacuaProblem& p, int depth, int weight_bound, Exec exec) {
  BlockSpace b;
  b.depth = depth;
  b.weight_bound = weight_bound;
  std::vector<ModulePtr> mods;
  for (const auto& pt : p.points) mods.push_back(pt.module);
  b.layout = std::make_shared<TensorLayout>(mods, depth);
  CovacuaAssembler as(e, p, weight_bound);
  SparseMatrix rel = as.assemble(*b.layout, exec, &b.stats);
  b.quotient = quotient_basis(rel, exec);
  b.dimension = b.quotient.dim();
  b.history.emplace_back(depth, weight_bound, b.dimension);
  return b;
}

BlockSpace block_dimension(const CovacuaProblem& p, const StabilizationConfig& cfg, Exec exec) {
  p.validate();
  ModeEngine& e = shared_engine(p.central_charge());
  const int b = p.weight_bound;
  std::vector<std::tuple<int, int, int>> history;
  int prev = -1;
  BlockSpace last;
  for (int d = cfg.start_depth; d <= cfg.max_depth; ++d) {
    last = covacua_quotient(e, p, d, b, exec);
    history.emplace_back(d, b, last.dimension);
    if (prev == last.dimension) {
      const int lower = std::max(2, b - 1);
      int other = last.dimension;
      if (lower < b) {
        other = covacua_quotient(e, p, d, lower, exec).dimension;
        history.emplace_back(d, lower, other);
      }
      if (other == last.dimension) {
        last.stabilized = true;
        break;
      }
    }
    prev = last.dimension;
  }
  last.history = history;
  return last;
}

}  // namespace cb

#include "cb/virasoro/module.hpp"

#include <atomic>
#include <stdexcept>

namespace cb {

namespace {
std::atomic<int> next_module_id{0};
}

GradedModule::GradedModule() : id_(next_module_id++) {}

const Mat& GradedModule::vir(int n, int depth) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(n, depth);
  auto it = vir_cache_.find(key);
  if (it != vir_cache_.end()) return it->second;
  Mat m;
  if (depth < 0 || depth - n < 0)
    m = Mat(std::max(0, dim(depth - n)), std::max(0, dim(depth)));
  else
    m = compute_vir(n, depth);
  return vir_cache_.emplace(key, std::move(m)).first->second;
}

std::vector<int> GradedModule::graded_dims(int max_depth) {
  std::vector<int> d;
  for (int k = 0; k <= max_depth; ++k) d.push_back(dim(k));
  return d;
}

std::string VermaModule::label() const {
  return "M(c=" + to_string(verma_.c()) + ",h=" + to_string(verma_.h()) + ")";
}

SimpleModule::SimpleModule(Q c, Q h, int min_part) : verma_(std::move(c), std::move(h), min_part) {}

SimpleModule::SimpleModule(const MinimalLabel& label)
    : verma_(central_charge(label.p, label.q), conformal_weight(label), 1), label_(label) {
  validate_label(label);
}

std::string SimpleModule::label() const {
  if (label_) return label_->str();
  return "c=" + to_string(verma_.c()) + ",h=" + to_string(verma_.h());
}

const QuotientBasis& SimpleModule::radical(int depth) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = radical_.find(depth);
  if (it != radical_.end()) return it->second;
  const int n = verma_.dim(depth);
  SparseMatrix rel(n);
  if (n > 0) {
    RankKernel rk = rank_kernel(SparseMatrix::from_dense(verma_.gram(depth)));
    for (const auto& v : rk.kernel) rel.add_row(to_sparse(v));
  }
  return radical_.emplace(depth, quotient_basis(rel)).first->second;
}

int SimpleModule::dim(int depth) {
  if (depth < 0) return 0;
  return radical(depth).dim();
}

std::vector<Partition> SimpleModule::basis(int depth) {
  std::vector<Partition> out;
  const auto& b = verma_.basis(depth);
  for (int c : radical(depth).free_columns()) out.push_back(b[c]);
  return out;
}

Vec SimpleModule::reduce(int depth, const Vec& verma_vec) { return radical(depth).reduce(verma_vec); }

Vec SimpleModule::reduce(const Terms& t, int depth) { return reduce(depth, verma_.to_vec(t, depth)); }

Vec SimpleModule::lift(int depth, const Vec& coords) {
  const auto& q = radical(depth);
  Vec v(q.ambient_dim());
  const auto& fc = q.free_columns();
  for (std::size_t i = 0; i < fc.size(); ++i) v[fc[i]] = coords[i];
  return v;
}

Terms SimpleModule::lift_terms(int depth, const Vec& coords) {
  return verma_.from_vec(lift(depth, coords), depth);
}

Mat SimpleModule::compute_vir(int n, int depth) {
  const int target = depth - n;
  const auto& src = radical(depth);
  const auto& b = verma_.basis(depth);
  Mat out(dim(target), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    const Terms& img = verma_.act(n, b[src.free_columns()[j]]);
    if (img.empty()) continue;
    Vec col = reduce(img, target);
    for (int i = 0; i < out.rows(); ++i) out(i, j) = col[i];
  }
  return out;
}

namespace {

std::mutex registry_mu;

struct Key {
  Q c, h;
  int min_part;
  bool operator<(const Key& o) const {
    if (c != o.c) return c < o.c;
    if (h != o.h) return h < o.h;
    return min_part < o.min_part;
  }
};

std::map<Key, std::shared_ptr<SimpleModule>>& simple_registry() {
  static std::map<Key, std::shared_ptr<SimpleModule>> r;
  return r;
}

std::map<int, std::shared_ptr<ContragredientModule>>& dual_registry() {
  static std::map<int, std::shared_ptr<ContragredientModule>> r;
  return r;
}

}  // namespace

std::shared_ptr<SimpleModule> simple_module(const Q& c, const Q& h, int min_part) {
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& r = simple_registry();
  Key k{c, h, min_part};
  auto it = r.find(k);
  if (it != r.end()) return it->second;
  auto m = std::make_shared<SimpleModule>(c, h, min_part);
  r.emplace(k, m);
  return m;
}

std::shared_ptr<SimpleModule> simple_module(const MinimalLabel& label) {
  validate_label(label);
  auto m = simple_module(central_charge(label.p, label.q), conformal_weight(label), 1);
  std::lock_guard<std::mutex> lock(registry_mu);
  if (!m->minimal_label()) m->set_minimal_label(label);
  return m;
}

std::shared_ptr<SimpleModule> vacuum_module(const Q& c) { return simple_module(c, Q(0), 2); }

std::shared_ptr<ContragredientModule> dual_module(const ModulePtr& m) {
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& r = dual_registry();
  auto it = r.find(m->id());
  if (it != r.end()) return it->second;
  auto d = std::make_shared<ContragredientModule>(m);
  r.emplace(m->id(), d);
  return d;
}

ModulePtr parse_module(const std::string& descriptor) {
  std::string s = descriptor;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  bool dual = false;
  if (!s.empty() && s.back() == '*') {
    dual = true;
    s.pop_back();
  }
  ModulePtr base;
  if (s.rfind("c=", 0) == 0) {
    auto comma = s.find(',');
    if (comma == std::string::npos || s.compare(comma + 1, 2, "h=") != 0)
      throw std::invalid_argument("module descriptor: expected c=...,h=...: " + descriptor);
    Q c = parse_rational(s.substr(2, comma - 2));
    Q h = parse_rational(s.substr(comma + 3));
    base = simple_module(c, h, 1);
  } else {
    base = simple_module(parse_label(s));
  }
  return dual ? ModulePtr(dual_module(base)) : base;
}

}  // namespace cb

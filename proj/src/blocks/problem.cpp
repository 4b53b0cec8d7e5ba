#include "cb/blocks/problem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cb {

std::string MarkedPoint::str() const {
  return (coord ? to_string(*coord) : std::string("inf")) + " " + module->label();
}

void CovacuaProblem::validate() const {
  if (points.empty()) throw std::invalid_argument("problem: no marked points");
  if (depth < 0) throw std::invalid_argument("problem: negative depth");
  std::set<Q> seen;
  int inf = 0;
  for (const auto& p : points) {
    if (!p.module) throw std::invalid_argument("problem: missing module");
    if (p.at_infinity()) {
      ++inf;
    } else if (!seen.insert(*p.coord).second) {
      throw std::invalid_argument("problem: repeated coordinate " + to_string(*p.coord));
    }
    if (p.module->c() != points[0].module->c())
      throw std::invalid_argument("problem: modules with different central charges");
  }
  if (inf > 1) throw std::invalid_argument("problem: more than one point at infinity");
  if (inf == 1 && rule == FormRule::FusionAtInfinity)
    throw std::invalid_argument("problem: fusion rule needs an unmarked infinity");
}

Q CovacuaProblem::central_charge() const { return points.at(0).module->c(); }

int CovacuaProblem::infinity_index() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].at_infinity()) return static_cast<int>(i);
  return -1;
}

std::string CovacuaProblem::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < points.size(); ++i) os << (i ? "; " : "") << points[i].str();
  return os.str();
}

CovacuaProblem parse_problem(const std::string& text) {
  CovacuaProblem p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string coord, label, extra;
    if (!(ls >> coord)) continue;
    if (!(ls >> label) || (ls >> extra))
      throw std::invalid_argument("problem line " + std::to_string(lineno) + ": expected 'coordinate module'");
    MarkedPoint mp;
    if (coord != "inf") mp.coord = parse_rational(coord);
    mp.module = parse_module(label);
    p.points.push_back(std::move(mp));
  }
  p.validate();
  return p;
}

namespace {

void gen_tuples(const std::vector<ModulePtr>& mods, int left, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (cur.size() == mods.size()) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d <= left; ++d) {
    if (mods[cur.size()]->dim(d) == 0) continue;
    cur.push_back(d);
    gen_tuples(mods, left - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TensorLayout::TensorLayout(const std::vector<ModulePtr>& modules, int depth) : modules_(modules), depth_(depth) {
  std::vector<int> cur;
  gen_tuples(modules_, depth, cur, tuples_);
  auto sum = [](const std::vector<int>& t) {
    int s = 0;
    for (int x : t) s += x;
    return s;
  };
  std::stable_sort(tuples_.begin(), tuples_.end(), [&](const auto& a, const auto& b) {
    const int sa = sum(a), sb = sum(b);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    int sz = 1;
    for (std::size_t a = 0; a < modules_.size(); ++a) sz *= modules_[a]->dim(tuples_[t][a]);
    offsets_.push_back(total_);
    sizes_.push_back(sz);
    index_[tuples_[t]] = static_cast<int>(t);
    total_ += sz;
  }
}

int TensorLayout::find_tuple(const std::vector<int>& depths) const {
  auto it = index_.find(depths);
  return it == index_.end() ? -1 : it->second;
}

int TensorLayout::column(int t, const std::vector<int>& idx) const {
  int local = 0;
  for (std::size_t a = 0; a < modules_.size(); ++a) local = local * modules_[a]->dim(tuples_[t][a]) + idx[a];
  return offsets_[t] + local;
}

std::vector<int> TensorLayout::local_index(int t, int local) const {
  std::vector<int> idx(modules_.size());
  for (std::size_t a = modules_.size(); a-- > 0;) {
    const int d = modules_[a]->dim(tuples_[t][a]);
    idx[a] = local % d;
    local /= d;
  }
  return idx;
}

std::pair<int, int> TensorLayout::locate(int col) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), col);
  const int t = static_cast<int>(it - offsets_.begin()) - 1;
  return {t, col - offsets_[t]};
}

int TensorLayout::total_depth(int col) const {
  int s = 0;
  for (int x : tuples_[locate(col).first]) s += x;
  return s;
}

std::string TensorLayout::column_label(int col) const {
  auto [t, local] = locate(col);
  auto idx = local_index(t, local);
  std::ostringstream os;
  for (std::size_t a = 0; a < idx.size(); ++a) os << (a ? "⊗" : "") << "e[" << tuples_[t][a] << "," << idx[a] << "]";
  return os.str();
}

}  // namespace cb

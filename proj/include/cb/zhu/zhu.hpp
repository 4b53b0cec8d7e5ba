#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cb/exact/elimination.hpp"
#include "cb/exact/poly.hpp"
#include "cb/voa/engine.hpp"
#include "cb/voa/structure.hpp"

namespace cb {

// Element of V_{<= d}: weight -> coordinates in the reduced vacuum basis.
using FState = std::map<int, Vec>;

FState to_fstate(const State& s);
void add_to(FState& acc, const Q& c, const State& s);
void add_to(FState& acc, const Q& c, const FState& s);

// sum_i C(D1, i) J_{i - 1 - D1}(v1) v2  and  sum_i C(D1, i) J_{i - D1}(v1) v2
FState zhu_circ(ModeEngine& e, const State& v1, const State& v2);
FState zhu_star(ModeEngine& e, const State& v1, const State& v2);
FState zhu_star(ModeEngine& e, const FState& v1, const FState& v2);

// V_{<= depth} / (O(V) ∩ V_{<= depth}) with O(V) spanned by v1∘v2 (D1 + D2 + 1 <= depth)
// and (T(-1) + T(0)) v. Columns are ordered by descending weight so that classes are
// represented on the lowest weights.
class ZhuQuotient {
 public:
  ZhuQuotient(ModeEngine& e, int depth, Exec exec = Exec::Parallel);

  int depth() const { return depth_; }
  int dim() const { return qb_.dim(); }
  int ambient_dim() const { return qb_.ambient_dim(); }
  int relation_count() const { return relations_; }
  // Highest weight carrying a free column.
  int max_free_weight() const;

  SVec embed(const FState& v) const;
  Vec reduce(const FState& v) const;
  FState normal_form(const FState& v) const;
  FState representative(const Vec& coords) const;

 private:
  int column(int weight, int i) const { return offset_.at(weight) + i; }
  ModeEngine& e_;
  int depth_;
  std::map<int, int> offset_;
  std::vector<std::pair<int, int>> col_info_;  // column -> (weight, index)
  QuotientBasis qb_;
  int relations_ = 0;
};

struct ZhuPresentation {
  int depth = 0;
  int dimension = 0;
  int previous_dimension = -1;
  Poly minpoly;  // in x = [T], monic
  std::vector<int> basis_powers;
  bool powers_span = false;
  bool stabilized = false;
  RootData roots;
  std::string str() const;
};

ZhuPresentation zhu_presentation(ModeEngine& e, const ZhuQuotient& z, int previous_dimension);
ZhuPresentation zhu_algebra(int p, int q, int depth);
ZhuPresentation zhu_algebra(ModeEngine& e, int depth);

// The state u with J_0(v1) J_0(v2) = J_0(u) modulo the ideal of the zero-mode algebra.
FState zero_mode_product(ModeEngine& e, const State& v1, const State& v2);
// (-1)^D sum_j T(1)^j v / j!
FState theta_zero_mode(ModeEngine& e, const State& v);
FState theta_zero_mode(ModeEngine& e, const FState& v);

// J_0(v) on the top level of a simple module (a scalar for Virasoro tops).
Q zero_mode_eigenvalue(ModeEngine& e, GradedModule& m, const FState& v);

struct OMapReport {
  CheckResult star;       // [v1*v2] = class of the zero-mode product; o(v1*v2) = o(v1)o(v2)
  CheckResult circ;       // o(v1∘v2) = 0 on every top level
  CheckResult dimension;  // dim A_z = rank of the top-level evaluation
  bool pass() const { return star.pass && circ.pass && dimension.pass; }
};

OMapReport verify_o_map(ModeEngine& e, const ZhuQuotient& z, const std::vector<ModulePtr>& simples,
                        int samples, int max_weight, std::uint64_t seed);

struct InducedCheck {
  MinimalLabel label;
  int checked_depth = 0;
  std::vector<int> induced_dims;  // dim of the relation submodule of M(c,h)
  std::vector<int> radical_dims;  // dim of the radical of the form
  bool simple = false;
};

// Submodule of M(c,h) generated by J_n(N) v_h with N the vacuum singular vector.
InducedCheck induced_simplicity(const MinimalLabel& label, int depth);

struct ConditionReport {
  int p = 0, q = 0;
  CnReport c2;
  ZhuPresentation zhu;
  bool semisimple = false;
  std::vector<InducedCheck> induced;
  bool condition1() const { return c2.stabilized; }
  bool condition2() const { return semisimple; }
  bool condition3() const;
};

ConditionReport condition_report(int p, int q, int zhu_depth, int c2_depth, int induced_depth);

// Squarefree test used for Condition II.
inline bool zero_mode_semisimple(const Poly& minpoly) { return is_squarefree(minpoly); }

}  // namespace cb

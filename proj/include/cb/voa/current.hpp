#pragma once

#include <map>

#include "cb/exact/elimination.hpp"
#include "cb/voa/engine.hpp"

namespace cb {

// J(v, f) for a Laurent polynomial f in xi; J(v, xi^k) is the mode J_{k - D + 1}(v).
struct CurrentElement {
  State state;
  std::map<int, Q> laurent;
};

ModeSum to_modes(const CurrentElement& x);

// Current Lie algebra of the vacuum module, modulo J(T(-1)v, f) + J(v, f') = 0.
class CurrentAlgebra {
 public:
  explicit CurrentAlgebra(ModeEngine& engine) : e_(engine) {}

  // Rewrites every state into the fixed complement of T(-1)V inside V.
  ModeSum canonical(const ModeSum& s);
  ModeSum bracket(const CurrentElement& a, const CurrentElement& b);
  ModeSum bracket(const ModeSum& a, const ModeSum& b);
  // Commutator formula terms without canonicalization.
  ModeSum commutator_terms(const State& v1, int m, const State& v2, int n);

  // Operator of a sum of modes J_n(.) from depth e to depth e - n.
  Mat op(GradedModule& m, const ModeSum& s, int n, int e) { return e_.mode(m, s, n, e); }

 private:
  const QuotientBasis& complement(int weight);
  ModeEngine& e_;
  std::map<int, QuotientBasis> comp_;
};

}  // namespace cb

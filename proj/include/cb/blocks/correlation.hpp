#pragma once

#include <map>
#include <memory>

#include "cb/blocks/covacua.hpp"
#include "cb/exact/rational_form.hpp"
#include "cb/voa/axioms.hpp"

namespace cb {

// Tensor vector on a layout: column -> coefficient.
using TensorVec = std::map<int, Q>;

// Phi(u) = <class of u, weights> on a truncated covacua quotient.
class BlockFunctional {
 public:
  BlockFunctional(std::shared_ptr<const BlockSpace> space, Vec weights);

  const BlockSpace& space() const { return *space_; }
  const Vec& weights() const { return weights_; }
  Q column(int col) const;
  Q operator()(const TensorVec& u) const;

 private:
  std::shared_ptr<const BlockSpace> space_;
  Vec weights_;
  mutable std::map<int, Q> memo_;
};

// Functionals dual to the free columns of the quotient.
std::vector<BlockFunctional> dual_functionals(const std::shared_ptr<const BlockSpace>& space);

class Correlator {
 public:
  Correlator(ModeEngine& e, CovacuaProblem p, BlockFunctional phi);

  const CovacuaProblem& problem() const { return p_; }
  const TensorLayout& layout() const { return *phi_.space().layout; }
  const BlockFunctional& functional() const { return phi_; }
  ModeEngine& engine() { return e_; }

  // J_n(v) at a finite point, theta(J_n(v)) at infinity; throws when the image leaves the window.
  TensorVec act(int a, const State& v, int n, const TensorVec& u);
  // Free room above the deepest column of u.
  int room(const TensorVec& u) const;

  // Phi_1(v;u)(z) with poles at the finite points and a polynomial part fixed at infinity.
  RationalForm one_point(const State& v, const TensorVec& u);
  // Phi_2(v1,v2;u)(z1,z2).
  RationalForm two_point(const State& v1, const State& v2, const TensorVec& u);

  // Coefficient of xi^k of Phi_1 at point a as predicted by the functional.
  Q predicted_coefficient(const State& v, const TensorVec& u, int a, int k);

 private:
  void add_one_point(RationalForm& out, int var, int offset, const Q& coef, const State& v, const TensorVec& u,
                     std::vector<int> extra, std::vector<int> mono);

  ModeEngine& e_;
  CovacuaProblem p_;
  BlockFunctional phi_;
  std::vector<int> finite_;
};

// Laurent data of Phi_1 at every point, residue sum against admissible forms, derivative identity.
CheckResult check_one_point(Correlator& c, const State& v, const TensorVec& u);
// S2 symmetry, vacuum reduction and the expansion at z1 = z2 at a sample z2.
CheckResult check_two_point(Correlator& c, const State& v1, const State& v2, const TensorVec& u, const Q& z2);

// Residue sum of Phi_1(v;u) f over all points for one form.
Q residue_sum(const Correlator& c, const RationalForm& phi1, const Form& f);

}  // namespace cb

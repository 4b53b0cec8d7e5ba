#pragma once

#include <string>
#include <vector>

#include "cb/exact/rational_form.hpp"
#include "cb/voa/axioms.hpp"
#include "cb/voa/engine.hpp"

namespace cb {

// Depth slice t of C_n(M): span of J_{-D-p}(v) m with v in V_D, D >= 1, p >= n - 1.
SparseMatrix cn_generators(ModeEngine& e, GradedModule& m, int n, int depth);

struct CnReport {
  int n = 2;
  int max_depth = 0;
  std::vector<int> slices;  // dim (M / C_n M) per depth
  int total = 0;
  bool stabilized = false;  // last two slices vanish
};

CnReport cn_quotient_dim(ModeEngine& e, GradedModule& m, int n, int depth);

struct FermionicMonomial {
  std::vector<std::pair<int, int>> factors;  // (n_i, index into U), n_1 > n_2 > ... > 0
  int top = 0;                               // index into the top-level basis
  std::string str(const std::vector<State>& u) const;
};

struct FermionicReport {
  std::vector<State> complement;  // U
  std::vector<int> depth_dims;
  std::vector<int> ranks;
  std::vector<std::vector<FermionicMonomial>> monomials;
  bool spans = true;
};

// Greedy complement U of C_2(V) + C|0> in basis order, weights 1..max_weight.
std::vector<State> c2_complement(ModeEngine& e, int max_weight);
FermionicReport fermionic_spanning_set(ModeEngine& e, GradedModule& m, int depth);

// <phi| J(v1,z1) J(v2,z2) |x> as a rational function of (z1, z2) with poles on z1, z2, z1 - z2.
// phi is a functional on depth dphi, x lies at depth dx.
RationalForm matrix_element_2pt(ModeEngine& e, GradedModule& m, int dphi, const Vec& phi, const State& v1,
                                const State& v2, int dx, const Vec& x);

// S2 symmetry and the Laurent expansion at z1 = z2 against <phi|J(J_k(v1)v2, z2)|x>.
CheckResult check_two_point(ModeEngine& e, GradedModule& m, int dphi, const Vec& phi, const State& v1,
                            const State& v2, int dx, const Vec& x, const Q& z2_sample, int orders);

}  // namespace cb

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cb/blocks/checks.hpp"

namespace cb {

// Matrix of [m] -> [L_{-1} at point a · m] on the free columns of the depth-d quotient,
// reduced in the depth-(d+1) quotient.
struct ConnectionMatrix {
  int point = 0;
  int depth = 0;
  std::vector<int> basis_columns;
  std::vector<std::string> basis_labels;
  Mat matrix;
  int dimension() const { return matrix.rows(); }
};

// Throws std::runtime_error when the depth d -> d+1 transport is not an isomorphism.
ConnectionMatrix connection_matrix(const CovacuaProblem& p, int a, int depth, Exec exec = Exec::Parallel);

// A(d) and A(d+1) agree after transporting the depth-d basis into the depth-(d+1) quotient.
CheckResult connection_depth_stability(const CovacuaProblem& p, int a, int depth, Exec exec = Exec::Parallel);

// sum_a w_a A_a = diag(L_0 at infinity - sum of L_0 at the finite points) on the basis columns.
CheckResult euler_check(const CovacuaProblem& p, int depth, Exec exec = Exec::Parallel);

// P/Q with deg P, deg Q <= degree through the points; nullopt if the system has no admissible solution.
std::optional<RatFunc> rational_interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys, int degree);

struct InterpolationConfig {
  int degree_start = 0;  // 0: number of points + 2
  int degree_cap = 32;
  int holdout = 3;
};

// Entries of A_a as rational functions of the coordinate of point b, others fixed.
struct MatrixFunction {
  int point = 0;
  int variable = 0;
  int degree = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<RatFunc>> entries;
  Mat eval(const Q& x) const;
  Mat derivative(const Q& x) const;
};

// Throws std::runtime_error("interpolation-degree-exceeded") past the cap.
MatrixFunction interpolate_connection(const CovacuaProblem& p, int a, int b, int depth,
                                      const InterpolationConfig& cfg = {}, Exec exec = Exec::Parallel);

struct FlatnessReport {
  int a = 0, b = 0;
  int depth = 0;
  int dimension = 0;
  int degree = 0;
  std::vector<Mat> curvatures;  // one per evaluation point
  CheckResult result;
};

// d_a A_b - d_b A_a + [A_a, A_b] at the problem's point and at `extra` shifted configurations.
FlatnessReport flatness_check(const CovacuaProblem& p, int a, int b, int depth, const InterpolationConfig& cfg = {},
                              int extra = 1, Exec exec = Exec::Parallel);

struct OdeExport {
  std::string document;  // JSON
  bool singularities_at_marked_points = true;
};

// dF/dw = A(w)^T F for F_j = Phi(e_j), w the coordinate of the movable point.
OdeExport export_ode(const CovacuaProblem& p, int movable, int depth, const InterpolationConfig& cfg = {},
                     Exec exec = Exec::Parallel);

}  // namespace cb

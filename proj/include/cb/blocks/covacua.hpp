#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "cb/blocks/problem.hpp"

namespace cb {

// Global form f(z): (z - w_pole)^(-order) when pole >= 0, z^order when pole < 0.
struct Form {
  int pole = -1;
  int order = 0;
};

// Laurent coefficients of f at a point, in xi = z - w (finite) or z (infinity).
// Finite points: exponents up to kmax. Infinity: exponents down to kmin.
std::vector<std::pair<int, Q>> expand_form(const Form& f, const CovacuaProblem& p, int point, int kmin, int kmax);

struct RelationStats {
  long rows = 0;
  long dropped = 0;  // (u, v, f) triples outside the depth window
};

// Builds the relation rows j(v ⊗ f) u on the truncated tensor product.
class CovacuaAssembler {
 public:
  CovacuaAssembler(ModeEngine& e, CovacuaProblem p, int weight_bound);

  const CovacuaProblem& problem() const { return p_; }
  ModeEngine& engine() { return e_; }
  const std::vector<State>& states() const { return states_; }

  // Operator attached to xi^k at point a for state sid, acting on depth e:
  // J_{k-D+1}(v) at finite points, -theta(J_{k-D+1}(v)) at infinity.
  const Mat& point_op(int a, int sid, int k, int e);
  int target_depth(int a, int sid, int k, int e) const;

  // Forms usable with every state of the given weight.
  std::vector<Form> forms(int weight, int room) const;
  int max_raise(const Form& f, int weight) const;

  // Relation generators (state id, form) whose rows fit into room. Without a marked infinity the
  // polynomial forms z^k, k >= D - 1, are paired only with states v having theta(J(v, z^k))|0> = 0.
  struct Generator {
    int sid;
    Form form;
  };
  std::vector<Generator> generators(int room) const;

  SparseMatrix assemble(const TensorLayout& layout, Exec exec, RelationStats* stats = nullptr);
  SVec relation_row(const TensorLayout& layout, int col, int sid, const Form& f);

 private:
  ModeEngine& e_;
  CovacuaProblem p_;
  std::vector<State> states_;
  int basis_states_ = 0;
  std::vector<std::pair<int, int>> regular_;  // (state id, k) for the extra polynomial generators
  std::map<std::tuple<int, int, int, int>, Mat> ops_;
};

// Adds coef * (op applied at factor a) of column col into acc; false if the image leaves the layout.
bool apply_at_point(const TensorLayout& layout, int col, int a, const Mat& op, int target_depth, const Q& coef,
                    std::map<int, Q>& acc);

struct BlockSpace {
  int dimension = 0;
  int depth = 0;
  int weight_bound = 0;
  bool stabilized = false;
  std::shared_ptr<TensorLayout> layout;
  QuotientBasis quotient;
  RelationStats stats;
  std::vector<std::tuple<int, int, int>> history;  // (depth, weight bound, dimension)
};

BlockSpace covacua_quotient(ModeEngine& e, const CovacuaProblem& p, int depth, int weight_bound,
                            Exec exec = Exec::Parallel);

struct StabilizationConfig {
  int start_depth = 2;
  int max_depth = 8;
};

// Searches depths until Q(D-1,b) = Q(D,b) = Q(D,b-1); b = problem.weight_bound.
BlockSpace block_dimension(const CovacuaProblem& p, const StabilizationConfig& cfg = {}, Exec exec = Exec::Parallel);

}  // namespace cb

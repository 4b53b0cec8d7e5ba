#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cb/exact/elimination.hpp"
#include "cb/voa/engine.hpp"

namespace cb {

struct MarkedPoint {
  std::optional<Q> coord;  // empty = infinity
  ModulePtr module;
  bool at_infinity() const { return !coord.has_value(); }
  std::string str() const;
};

// Which global forms f(z)(dz)^(1-D) generate relations.
enum class FormRule {
  Auto,            // poles allowed at every marked point (standard when infinity is marked)
  RegularAtInfinity,  // no marked infinity: z^k with k <= 2D - 2
  FusionAtInfinity,   // zero of order D at an unmarked infinity: z^k with k <= D - 2
};

struct CovacuaProblem {
  std::vector<MarkedPoint> points;
  int depth = 4;
  int weight_bound = 3;
  FormRule rule = FormRule::Auto;

  void validate() const;
  Q central_charge() const;
  int infinity_index() const;  // -1 if absent
  std::string str() const;
};

// Problem files: lines "coordinate module" with '#' comments; coordinate is a rational or "inf".
CovacuaProblem parse_problem(const std::string& text);

// Basis of the truncated tensor product: depth tuples with total depth <= D, ordered by
// descending total depth so that quotient representatives sit on low depths.
class TensorLayout {
 public:
  TensorLayout(const std::vector<ModulePtr>& modules, int depth);

  int depth() const { return depth_; }
  int size() const { return total_; }
  int factors() const { return static_cast<int>(modules_.size()); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  int tuple_offset(int t) const { return offsets_[t]; }
  int tuple_size(int t) const { return sizes_[t]; }
  // -1 when the tuple is outside the window or has an empty factor.
  int find_tuple(const std::vector<int>& depths) const;
  int column(int t, const std::vector<int>& idx) const;
  std::vector<int> local_index(int t, int local) const;
  // (tuple id, local index) of a column
  std::pair<int, int> locate(int col) const;
  int total_depth(int col) const;
  std::string column_label(int col) const;

 private:
  std::vector<ModulePtr> modules_;
  int depth_;
  std::vector<std::vector<int>> tuples_;
  std::vector<int> offsets_, sizes_;
  std::map<std::vector<int>, int> index_;
  int total_ = 0;
};

}  // namespace cb

#pragma once

#include <string>
#include <vector>

#include "cb/exact/scalar.hpp"

namespace cb {

struct MinimalLabel {
  int p = 0, q = 0, r = 0, s = 0;
  std::string str() const;
  friend bool operator==(const MinimalLabel&, const MinimalLabel&) = default;
};

// Throws std::invalid_argument unless 1 < p < q, gcd(p,q) = 1.
void validate_model(int p, int q);
// Throws std::invalid_argument unless the model is valid and 0 < r < p, 0 < s < q.
void validate_label(const MinimalLabel& l);

Q central_charge(int p, int q);
Q conformal_weight(int p, int q, int r, int s);
inline Q conformal_weight(const MinimalLabel& l) { return conformal_weight(l.p, l.q, l.r, l.s); }

// All (r,s) labels with 0<r<p, 0<s<q; h-values with multiplicity.
std::vector<MinimalLabel> all_labels(int p, int q);
std::vector<Q> weight_multiset(int p, int q);
// Distinct h values ascending, with a canonical label for each.
std::vector<MinimalLabel> distinct_labels(int p, int q);
std::vector<Q> distinct_weights(int p, int q);

// Depth of the vacuum singular vector beyond T(-1)|0>.
inline int vacuum_null_depth(int p, int q) { return (p - 1) * (q - 1); }

MinimalLabel parse_label(const std::string& text);  // "p/q/r/s"

}  // namespace cb

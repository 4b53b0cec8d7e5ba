#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cb/exact/dense.hpp"
#include "cb/exact/sparse.hpp"

namespace cb {

// Weakly decreasing parts; T(-k1)...T(-kr) v.
using Partition = std::vector<int>;
using Terms = std::map<Partition, Q>;

// Partitions of n with parts >= min_part, lexicographically decreasing.
std::vector<Partition> partitions(int n, int min_part = 1);
std::string partition_str(const Partition& p);
int weight(const Partition& p);

// Verma module M(c,h) with PBW monomials of parts >= min_part. min_part = 2 with h = 0 gives
// the quotient of M(c,0) by the submodule generated by T(-1)v.
class Verma {
 public:
  Verma(Q c, Q h, int min_part = 1);

  const Q& c() const { return c_; }
  const Q& h() const { return h_; }
  int min_part() const { return min_part_; }

  const std::vector<Partition>& basis(int depth);
  int dim(int depth) { return depth < 0 ? 0 : static_cast<int>(basis(depth).size()); }
  int index(const Partition& p);

  // T(n) applied to a monomial, obtained by commuting through the bracket.
  const Terms& act(int n, const Partition& p);
  Terms act(int n, const Terms& t);
  Vec to_vec(const Terms& t, int depth);
  Terms from_vec(const Vec& v, int depth);

  // Matrix of T(n) from depth d to depth d - n.
  Mat matrix(int n, int depth);
  // Contravariant form on the depth basis, <v,v> = 1.
  Mat gram(int depth);

 private:
  Terms compute_act(int n, const Partition& p);
  Q c_, h_;
  int min_part_;
  std::recursive_mutex mu_;
  std::map<int, std::vector<Partition>> basis_;
  std::map<int, std::map<Partition, int>> index_;
  std::map<std::pair<int, Partition>, Terms> act_cache_;
};

}  // namespace cb

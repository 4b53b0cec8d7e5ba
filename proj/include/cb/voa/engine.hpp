#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cb/virasoro/module.hpp"

namespace cb {

// Homogeneous state of the vacuum module L(c,0), in its reduced basis.
struct State {
  int weight = 0;
  Vec coords;
  bool is_zero() const { return cb::is_zero(coords); }
  friend bool operator==(const State& a, const State& b) {
    return a.weight == b.weight && a.coords == b.coords;
  }
};

State operator+(const State& a, const State& b);
State operator-(const State& a, const State& b);
State operator*(const Q& s, const State& a);

// A finite sum of modes J_n(v); key (weight of v, n).
using ModeSum = std::map<std::pair<int, int>, Vec>;

void add_mode(ModeSum& s, const Q& coeff, const State& v, int n);
bool is_zero(const ModeSum& s);

// Result of a truncated action: depth and coordinates, plus a flag when the result left the window.
struct ModuleVector {
  int depth = 0;
  Vec coords;
  bool overflow = false;
};

// Mode operators J_n(v) on Virasoro modules via the associativity recursion
// J_m(T(-k)w) = sum_j (-1)^j C(1-k,j) [T(-k-j) J_{m+k+j}(w) + (-1)^k J_{m+1-j}(w) T(j-1)].
class ModeEngine {
 public:
  explicit ModeEngine(Q c);

  const Q& c() const { return c_; }
  SimpleModule& vacuum() { return *vac_; }
  const std::shared_ptr<SimpleModule>& vacuum_ptr() const { return vac_; }

  State vacuum_state();
  State virasoro_state();  // T = T(-2)|0>
  State zero_state(int weight);
  State basis_state(int weight, int i);
  int dim(int weight) { return vac_->dim(weight); }
  State from_terms(const Terms& t);  // homogeneous partitions with parts >= 2
  Terms to_terms(const State& s);

  // J_n(w) for a partition monomial w|0>, from depth e to depth e - n of m.
  const Mat& monomial_mode(GradedModule& m, const Partition& w, int n, int e);
  Mat mode(GradedModule& m, const Terms& v, int n, int e);
  Mat mode(GradedModule& m, const State& v, int n, int e);
  Mat mode(GradedModule& m, const ModeSum& s, int shift, int e);  // all terms must share index shift

  // J_n(v1) v2 inside the vacuum module.
  State apply(const State& v1, int n, const State& v2);
  State apply_vir(int n, const State& v);
  ModuleVector mode_action(GradedModule& m, const State& v, int n, const ModuleVector& x, int cutoff);

  // theta(J_n(v)) = (-1)^D sum_j J_{-n}(T(1)^j v)/j!
  ModeSum theta(const State& v, int n);
  ModeSum theta(const ModeSum& s);
  // J_n(v) acting on D(m) from dual depth e to e - n, as the transpose of theta(J_n(v)).
  Mat contragredient_mode(GradedModule& m, const State& v, int n, int e);

  State random_state(std::mt19937_64& rng, int weight, int range = 3);

 private:
  Q c_;
  std::shared_ptr<SimpleModule> vac_;
  std::recursive_mutex mu_;
  std::map<std::tuple<int, Partition, int, int>, Mat> memo_;
};

// Deterministic helpers on raw engine output (no distribution objects).
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace cb

namespace cb {

// One engine per central charge, shared so that mode caches are reused.
ModeEngine& shared_engine(const Q& c);

}  // namespace cb

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cb/blocks/correlation.hpp"

namespace cb {

// Column of `lo` seen in the larger window `hi` (same tuple, same local index).
int embed_column(const TensorLayout& lo, const TensorLayout& hi, int col);

// Matrix, on the free columns of lo, of an operator sending lo-columns into hi-vectors.
// nullopt when the classes of lo do not map isomorphically onto those of hi.
std::optional<Mat> quotient_operator(const BlockSpace& lo, const BlockSpace& hi,
                                     const std::function<TensorVec(int)>& op);

// Applies the Virasoro mode L_n at point a to a column, into layout `to`.
TensorVec vir_at(const CovacuaProblem& p, const TensorLayout& from, const TensorLayout& to, int a, int n, int col);

// Simple modules of the minimal model the problem lives in (empty if it is not a minimal-model problem).
std::vector<ModulePtr> model_simples(const CovacuaProblem& p);

struct PropagationReport {
  int base = 0;
  int extended = 0;
  bool stabilized = false;
  std::vector<Q> inserted;
  std::vector<std::tuple<int, int, int>> history;
  bool pass() const { return stabilized && base == extended; }
};

PropagationReport check_propagation_of_vacua(const CovacuaProblem& p, const std::vector<Q>& extra,
                                             const StabilizationConfig& cfg = {}, Exec exec = Exec::Parallel);

struct DecompositionReport {
  int fusion_dimension = 0;
  int depth = 0;
  bool stabilized = false;
  bool transport = false;
  Mat h;  // sum_a (w_a L_{-1} + L_0) at point a, on the fusion quotient
  std::vector<ModulePtr> channels;
  std::vector<int> multiplicities;  // generalized eigenspace of h at h_i
  std::vector<int> direct;          // dim V(M ⊗ L_i), L_i at infinity
  bool pass() const;
  std::string str() const;
};

// M ⊗ M(0): the quotient by the forms regular away from the finite points with a zero of
// order D at infinity, split by the weight operator, against the direct computations.
DecompositionReport check_decomposition(const CovacuaProblem& finite_part, std::vector<ModulePtr> channels = {},
                                        const StabilizationConfig& cfg = {}, Exec exec = Exec::Parallel);

struct ChannelTerm {
  ModulePtr channel;
  int left = 0;
  int right = 0;
  bool stabilized = false;
};

struct FactorizationReport {
  int direct = 0;
  bool direct_stabilized = false;
  std::vector<ChannelTerm> terms;
  int channel_sum() const;
  bool pass() const;
  std::string str() const;
};

// Points [0, split) form the left group, the rest the right group; the channel sits at infinity on the
// left and at a free finite coordinate on the right.
FactorizationReport check_factorization(const CovacuaProblem& whole, int split, std::vector<ModulePtr> channels = {},
                                        const StabilizationConfig& cfg = {}, Exec exec = Exec::Parallel);

struct ModeSample {
  State v;
  int n = 0;
};

std::vector<ModeSample> sample_modes(ModeEngine& e, int count, int max_weight, int max_shift, std::uint64_t seed);

// (J_n(v) ⊗ 1 - 1 ⊗ theta(J_n(v)) q^n) Omega(L) = 0 coefficientwise up to q^order.
CheckResult sewing_element_check(ModeEngine& e, const ModulePtr& l, int q_order, const std::vector<ModeSample>& samples);

}  // namespace cb

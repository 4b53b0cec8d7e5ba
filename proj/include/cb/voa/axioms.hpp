#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cb/voa/current.hpp"
#include "cb/voa/engine.hpp"

namespace cb {

struct CheckResult {
  bool pass = true;
  int cases = 0;
  std::string witness;  // first failing instance
  void record(bool ok, const std::string& what);
  void merge(const CheckResult& o);
};

// Each verifier evaluates both sides exactly; probes are module depths e.
CheckResult verify_commutator(ModeEngine& e, GradedModule& m, const State& v1, int p, const State& v2,
                              int n, int depth);
CheckResult verify_associativity(ModeEngine& e, GradedModule& m, const State& v1, int n, const State& v2,
                                 int p, int depth);
CheckResult verify_skew_symmetry(ModeEngine& e, const State& v1, const State& v2, int n);
CheckResult verify_derivation(ModeEngine& e, GradedModule& m, const State& v, int n, int depth);
CheckResult verify_translation(ModeEngine& e, GradedModule& m, const State& v, int n, int depth);
CheckResult verify_creation(ModeEngine& e, const State& v);
CheckResult verify_square(ModeEngine& e, GradedModule& m, const State& v1, const State& v2, int p,
                          int depth);
CheckResult verify_theta_involution(ModeEngine& e, const State& v, int n);
CheckResult verify_theta_antihomomorphism(ModeEngine& e, GradedModule& m, const State& v1, int p,
                                          const State& v2, int n, int depth);
CheckResult verify_contragredient(ModeEngine& e, const ModulePtr& m, const State& v, int n, int depth);
CheckResult verify_bracket_commutator(CurrentAlgebra& g, ModeEngine& e, GradedModule& m, const State& v1,
                                      int p, const State& v2, int n, int depth);
CheckResult verify_jacobi(CurrentAlgebra& g, const CurrentElement& a, const CurrentElement& b,
                          const CurrentElement& c);

struct AxiomSuiteConfig {
  int exhaustive_weight = 3;  // all basis states of weight <= this
  int sample_weight = 6;
  int samples = 200;
  int depth = 4;
  int mode_range = 3;
  std::uint64_t seed = 7;
};

struct AxiomTally {
  std::string name;
  CheckResult result;
};

// Runs every verifier over the probe modules: exhaustive on low weights, then seeded samples.
std::vector<AxiomTally> run_axiom_suite(ModeEngine& e, const std::vector<ModulePtr>& probes,
                                        const AxiomSuiteConfig& cfg);

}  // namespace cb

// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cb/blocks/checks.hpp"
#include "cb/connection/connection.hpp"
#include "cb/voa/axioms.hpp"
#include "cb/voa/current.hpp"
#include "cb/zhu/zhu.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

const std::vector<std::pair<int, int>> kSmall{{2, 5}, {3, 4}};

std::vector<ModulePtr> simples(int p, int q) {
  std::vector<ModulePtr> out;
  for (const auto& l : distinct_labels(p, q)) out.push_back(simple_module(l));
  return out;
}

Outcome minimal_data() {
  Outcome o;
  o.require(central_charge(2, 5) == ratio(-22, 5), "c(2,5)");
  o.require(central_charge(3, 4) == ratio(1, 2), "c(3,4)");
  o.require(distinct_weights(2, 5) == std::vector<Q>{ratio(-1, 5), Q(0)}, "h(2,5)");
  o.require(distinct_weights(3, 4) == std::vector<Q>{Q(0), ratio(1, 16), ratio(1, 2)}, "h(3,4)");
  for (int q = 3; q <= 12; ++q)
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      o.require(central_charge(p, q) == oracle::minimal_c(p, q), "c formula");
      for (int r = 1; r < p; ++r)
        for (int s = 1; s < q; ++s)
          o.require(conformal_weight(p, q, r, s) == conformal_weight(p, q, p - r, q - s),
                    "h symmetry at " + std::to_string(p) + "/" + std::to_string(q));
    }
  return o;
}

Outcome zhu_algebras() {
  Outcome o;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {2, 7}, {3, 4}, {2, 9}}) {
    int expect = (p - 1) * (q - 1) / 2;
    ZhuPresentation z;
    for (int d = 2; d <= 2 * expect + 4; ++d) {
      z = zhu_algebra(p, q, d);
      if (z.stabilized) break;
    }
    std::string tag = std::to_string(p) + "/" + std::to_string(q);
    o.require(z.stabilized, tag + " did not stabilize");
    o.require(z.dimension == expect, tag + " dimension");
    o.require(z.minpoly.leading() == Q(1) && z.minpoly.degree() == expect, tag + " minimal polynomial");
    std::vector<Q> roots;
    for (const auto& [x, m] : z.roots.roots)
      for (int i = 0; i < m; ++i) roots.push_back(x);
    o.require(roots == distinct_weights(p, q), tag + " roots");
    o.require(zero_mode_semisimple(z.minpoly), tag + " squarefree");
  }
  return o;
}

Outcome axiom_suite() {
  Outcome o;
  for (auto [p, q] : kSmall) {
    ModeEngine& e = shared_engine(central_charge(p, q));
    auto probes = simples(p, q);
    probes.push_back(dual_module(probes.back()));
    AxiomSuiteConfig cfg;
    cfg.exhaustive_weight = 3;
    cfg.sample_weight = 6;
    cfg.samples = 200;
    const std::vector<std::string> counted{"commutator", "associativity", "skew-symmetry", "derivation", "translation", "jacobi"};
    for (const auto& t : run_axiom_suite(e, probes, cfg)) {
      o.require(t.result.pass, t.name + ": " + t.result.witness);
      if (std::find(counted.begin(), counted.end(), t.name) != counted.end())
        o.require(t.result.cases >= cfg.samples, t.name + ": too few cases");
    }
  }
  return o;
}

Outcome duality() {
  Outcome o;
  for (auto [p, q] : kSmall) {
    ModeEngine& e = shared_engine(central_charge(p, q));
    std::mt19937_64 rng(p * 100 + q);
    for (int w = 0; w <= 6; ++w)
      for (int n = -3; n <= 3; ++n) {
        State v = e.random_state(rng, w);
        ModeSum s;
        add_mode(s, Q(1), v, n);
        ModeSum t = e.theta(e.theta(s));
        ModeSum diff = t;
        for (const auto& [k, vec] : s) {
          auto& slot = diff[k];
          if (slot.empty()) slot = Vec(vec.size());
          for (size_t i = 0; i < vec.size(); ++i) slot[i] -= vec[i];
        }
        o.require(is_zero(diff), "theta^2 on modes");
      }
    ZhuQuotient z(e, 2 * (p - 1) * (q - 1) / 2 + 4);
    for (int w = 0; w <= 6; ++w) {
      FState v = to_fstate(e.random_state(rng, w));
      o.require(z.reduce(theta_zero_mode(e, theta_zero_mode(e, v))) == z.reduce(v), "theta^2 on the Zhu quotient");
    }
    for (const auto& l : all_labels(p, q)) {
      auto m = simple_module(l);
      o.require(dual_module(dual_module(m))->graded_dims(6) == m->graded_dims(6), "double dual " + l.str());
    }
  }
  return o;
}

std::vector<std::string> two_point_problems(int p, int q, std::vector<int>* expected) {
  std::vector<std::string> out;
  auto labels = distinct_labels(p, q);
  for (const auto& a : labels)
    for (const auto& b : labels) {
      out.push_back("0 " + a.str() + "\ninf " + b.str() + "*\n");
      expected->push_back(a == b ? 1 : 0);
    }
  return out;
}

Outcome two_point_blocks() {
  Outcome o;
  for (auto [p, q] : kSmall) {
    std::vector<int> expected;
    auto probs = two_point_problems(p, q, &expected);
    for (size_t i = 0; i < probs.size(); ++i) {
      BlockSpace s = block_dimension(parse_problem(probs[i]));
      o.require(s.stabilized && s.depth <= 8, "not stabilized by depth 8");
      o.require(s.dimension == expected[i], "dimension for\n" + probs[i]);
    }
  }
  return o;
}

const std::vector<std::pair<std::string, int>> kThreePoint{
    {"0 2/5/1/2\n1 2/5/1/2\ninf 2/5/1/2\n", 1},
    {"0 2/5/1/2\n1 2/5/1/2\ninf 2/5/1/1\n", 1},
    {"0 2/5/1/2\n1 2/5/1/1\ninf 2/5/1/1\n", 0},
    {"0 2/5/1/1\n1 2/5/1/1\ninf 2/5/1/1\n", 1},
};

Outcome three_point_blocks() {
  Outcome o;
  for (const auto& [text, expected] : kThreePoint) {
    CovacuaProblem p = parse_problem(text);
    BlockSpace s = block_dimension(p);
    ModeEngine& e = shared_engine(p.central_charge());
    int deeper = covacua_quotient(e, p, s.depth + 1, p.weight_bound).dimension;
    CovacuaProblem finite = p;
    Q h_inf = finite.points.back().module->h();
    finite.points.pop_back();
    DecompositionReport d = check_decomposition(finite);
    int via = -1;
    for (size_t i = 0; i < d.channels.size(); ++i)
      if (d.channels[i]->h() == h_inf) via = d.multiplicities[i];
    o.require(s.stabilized && s.dimension == deeper, "not stable across depths");
    o.require(d.pass(), "decomposition route: " + d.str());
    o.require(s.dimension == via, "direct and decomposition disagree");
    o.require(s.dimension == expected, "dimension for\n" + text);
  }
  return o;
}

Outcome propagation() {
  Outcome o;
  std::vector<std::string> probs;
  for (auto [p, q] : kSmall) {
    std::vector<int> ignored;
    for (auto& t : two_point_problems(p, q, &ignored)) probs.push_back(t);
  }
  for (const auto& [t, d] : kThreePoint) probs.push_back(t);
  for (const auto& t : probs) {
    CovacuaProblem p = parse_problem(t);
    PropagationReport one = check_propagation_of_vacua(p, {ratio(7, 3)});
    PropagationReport two = check_propagation_of_vacua(p, {ratio(-5, 2), ratio(11, 4)});
    o.require(one.pass() && two.pass(), "dimension changed for\n" + t);
  }
  return o;
}

Outcome factorization() {
  Outcome o;
  const std::pair<const char*, int> cases[] = {
      {"0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n", 2},
      {"0 3/4/1/2\n1 3/4/1/2\n2 3/4/1/2\ninf 3/4/1/2\n", 2},
      {"0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/1\n", 1},
  };
  for (auto [text, expected] : cases) {
    FactorizationReport r = check_factorization(parse_problem(text), 2);
    o.require(r.pass(), r.str());
    o.require(r.direct == expected && r.channel_sum() == expected, "expected " + std::to_string(expected));
  }
  return o;
}

Outcome sewing() {
  Outcome o;
  for (const char* l : {"2/5/1/2", "3/4/1/2"}) {
    ModulePtr m = parse_module(l);
    ModeEngine& e = shared_engine(m->c());
    auto samples = sample_modes(e, 12, 5, 3, 29);
    o.require(samples.size() >= 10, "too few samples");
    CheckResult r = sewing_element_check(e, m, 4, samples);
    o.require(r.pass, std::string(l) + ": " + r.witness);
  }
  return o;
}

Outcome correlations() {
  Outcome o;
  std::mt19937_64 rng(41);
  int samples = 0;
  for (const char* t : {"0 2/5/1/2\n1 2/5/1/2\ninf 2/5/1/2\n", "0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n",
                        "0 3/4/1/2\n1 3/4/1/2\ninf 3/4/1/3\n"}) {
    CovacuaProblem p = parse_problem(t);
    ModeEngine& e = shared_engine(p.central_charge());
    auto space = std::make_shared<BlockSpace>(covacua_quotient(e, p, 6, 3));
    std::vector<int> low;
    for (int c = 0; c < space->layout->size(); ++c)
      if (space->layout->total_depth(c) <= 1) low.push_back(c);
    for (const auto& phi : dual_functionals(space)) {
      Correlator c(e, p, phi);
      for (int k = 0; k < 5; ++k) {
        TensorVec u;
        for (int col : low) u[col] = Q(uniform_int(rng, -3, 3));
        int w = uniform_int(rng, 2, 4);
        CheckResult r1 = check_one_point(c, e.random_state(rng, w), u);
        CheckResult r2 = check_two_point(c, e.random_state(rng, uniform_int(rng, 2, 3)), e.random_state(rng, 2), u,
                                         ratio(uniform_int(rng, 5, 40), 11) + ratio(1, 13));
        o.require(r1.pass, "one-point: " + r1.witness);
        o.require(r2.pass, "two-point: " + r2.witness);
        ++samples;
      }
    }
  }
  o.require(samples >= 20, "too few samples");
  return o;
}

Outcome connection() {
  Outcome o;
  CovacuaProblem p = parse_problem("0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n");
  FlatnessReport f = flatness_check(p, 1, 2, 3);
  o.require(f.dimension == 2, "block bundle rank");
  o.require(f.result.pass, f.result.witness);
  CheckResult st = connection_depth_stability(p, 2, 3);
  o.require(st.pass, st.witness);
  CheckResult eu = euler_check(p, 3);
  o.require(eu.pass, eu.witness);
  return o;
}

Outcome conditions() {
  Outcome o;
  for (auto [p, q] : kSmall) {
    ConditionReport r = condition_report(p, q, 8, 12, 8);
    o.require(r.condition1() && r.condition2() && r.condition3(), "condition report " + std::to_string(p) + "/" + std::to_string(q));
  }
  ConditionReport neg = condition_report(2, 5, 8, 12, 8);
  Poly x = Poly::monomial(Q(1), 1);
  neg.zhu.minpoly = x * x * Poly::x_minus(ratio(-1, 5));
  neg.semisimple = zero_mode_semisimple(neg.zhu.minpoly);
  o.require(!neg.condition2(), "negative control reported squarefree");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "minimal-model data", 1, minimal_data},
      {2, "Zhu algebra", 4 * 120, zhu_algebras},
      {3, "axiom suite", 300, axiom_suite},
      {4, "duality", 60, duality},
      {5, "two-point blocks", 300, two_point_blocks},
      {6, "Lee-Yang three-point blocks", 300, three_point_blocks},
      {7, "propagation of vacua", 300, propagation},
      {8, "factorization", 1800, factorization},
      {9, "sewing identity", 60, sewing},
      {10, "residues and correlation functions", 60, correlations},
      {11, "connection flatness and depth stability", 1800, connection},
      {12, "condition report", 60, conditions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.budget_s;
    bool ok = o.pass && in_time;
    if (!in_time && o.pass) o.detail = "over the time budget";
    std::printf("[%s] %2d %-42s %8.2fs (budget %gs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

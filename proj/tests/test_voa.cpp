#include <doctest.h>

#include <random>

#include "cb/voa/axioms.hpp"
#include "cb/voa/current.hpp"
#include "cb/voa/engine.hpp"
#include "cb/voa/structure.hpp"
#include "oracles.hpp"

using namespace cb;

TEST_CASE("axiom suite on Lee-Yang and Ising") {
  for (auto [p, q] : {std::pair{2, 5}, std::pair{3, 4}}) {
    ModeEngine& e = shared_engine(central_charge(p, q));
    std::vector<ModulePtr> probes;
    for (const auto& l : distinct_labels(p, q)) probes.push_back(simple_module(l));
    probes.push_back(dual_module(probes.back()));
    AxiomSuiteConfig cfg;
    cfg.exhaustive_weight = 2;
    cfg.sample_weight = 5;
    cfg.samples = 20;
    cfg.depth = 3;
    cfg.mode_range = 2;
    for (const auto& t : run_axiom_suite(e, probes, cfg)) {
      CHECK_MESSAGE(t.result.pass, p, "/", q, " ", t.name, ": ", t.result.witness);
      CHECK(t.result.cases > 0);
    }
  }
}

TEST_CASE("modes of T are the Virasoro generators") {
  ModeEngine& e = shared_engine(central_charge(3, 4));
  auto m = simple_module(parse_label("3/4/1/2"));
  State t = e.virasoro_state();
  for (int n = -3; n <= 3; ++n)
    for (int d = std::max(0, n); d <= 5; ++d) CHECK(e.mode(*m, t, n, d) == m->vir(n, d));
}

TEST_CASE("vacuum modes act as the identity") {
  ModeEngine& e = shared_engine(central_charge(2, 5));
  auto m = simple_module(parse_label("2/5/1/2"));
  State vac = e.vacuum_state();
  for (int n = -2; n <= 2; ++n)
    for (int d = std::max(0, n); d <= 4; ++d) {
      Mat op = e.mode(*m, vac, n, d);
      if (n == 0)
        CHECK(op == Mat::identity(m->dim(d)));
      else
        CHECK(op == Mat(m->dim(d - n), m->dim(d)));
    }
}

TEST_CASE("creation and vacuum annihilation") {
  ModeEngine& e = shared_engine(central_charge(2, 5));
  std::mt19937_64 rng(11);
  for (int w = 0; w <= 6; ++w) {
    State v = e.random_state(rng, w);
    // J_{-D}(v)|0> = v, and J_n(v)|0> = 0 for n > -D
    CHECK(e.apply(v, -w, e.vacuum_state()) == v);
    for (int n = -w + 1; n <= w; ++n) CHECK(e.apply(v, n, e.vacuum_state()).is_zero());
  }
}

TEST_CASE("theta is an involution") {
  ModeEngine& e = shared_engine(central_charge(3, 4));
  std::mt19937_64 rng(5);
  for (int w = 0; w <= 6; ++w)
    for (int n = -3; n <= 3; ++n) {
      State v = e.random_state(rng, w);
      ModeSum once = e.theta(v, n);
      ModeSum twice = e.theta(once);
      ModeSum orig;
      add_mode(orig, Q(1), v, n);
      ModeSum diff = twice;
      for (const auto& [k, vec] : orig) {
        auto& slot = diff[k];
        if (slot.empty()) slot = Vec(vec.size());
        for (size_t i = 0; i < vec.size(); ++i) slot[i] -= vec[i];
      }
      CHECK(is_zero(diff));
    }
}

TEST_CASE("C2 quotient dimension equals the number of simples") {
  for (auto [p, q] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{2, 7}}) {
    ModeEngine& e = shared_engine(central_charge(p, q));
    CnReport r = cn_quotient_dim(e, e.vacuum(), 2, 12);
    CHECK(r.stabilized);
    CHECK(r.total == (p - 1) * (q - 1) / 2);
  }
}

TEST_CASE("fermionic spanning set") {
  ModeEngine& e = shared_engine(central_charge(2, 5));
  FermionicReport r = fermionic_spanning_set(e, e.vacuum(), 8);
  CHECK(r.spans);
  CHECK(r.complement.size() == 1);
  for (size_t d = 0; d < r.depth_dims.size(); ++d) CHECK(r.ranks[d] == r.depth_dims[d]);
}

TEST_CASE("vacuum two-point function of T") {
  for (auto [p, q] : {std::pair{2, 5}, std::pair{3, 4}}) {
    Q c = central_charge(p, q);
    ModeEngine& e = shared_engine(c);
    State t = e.virasoro_state();
    RationalForm f = matrix_element_2pt(e, e.vacuum(), 0, Vec{Q(1)}, t, t, 0, Vec{Q(1)});
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
      Q z1 = ratio(uniform_int(rng, -20, 20), uniform_int(rng, 1, 6));
      Q z2 = ratio(uniform_int(rng, -20, 20), uniform_int(rng, 1, 6));
      if (z1 == z2) continue;
      Q d = z1 - z2;
      CHECK(f.eval({z1, z2}) == c / 2 / (d * d * d * d));
    }
  }
}

TEST_CASE("two-point symmetry and OPE on a module") {
  ModeEngine& e = shared_engine(central_charge(3, 4));
  auto m = simple_module(parse_label("3/4/1/2"));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 6; ++k) {
    State v1 = e.random_state(rng, uniform_int(rng, 2, 4));
    State v2 = e.random_state(rng, uniform_int(rng, 2, 4));
    int dx = uniform_int(rng, 0, 2);
    int dphi = uniform_int(rng, 0, 3);
    Vec phi(m->dim(dphi)), x(m->dim(dx));
    for (auto& a : phi) a = Q(uniform_int(rng, -3, 3));
    for (auto& a : x) a = Q(uniform_int(rng, -3, 3));
    CheckResult r = check_two_point(e, *m, dphi, phi, v1, v2, dx, x, ratio(3, 7), 4);
    CHECK_MESSAGE(r.pass, r.witness);
  }
}

TEST_CASE("current algebra bracket") {
  Q c = central_charge(2, 5);
  ModeEngine& e = shared_engine(c);
  CurrentAlgebra g(e);
  State t = e.virasoro_state();
  ModeSum b = g.bracket(CurrentElement{t, {{3, Q(1)}}}, CurrentElement{t, {{-1, Q(1)}}});
  auto m = simple_module(parse_label("2/5/1/2"));
  for (int d = 0; d <= 4; ++d) {
    Mat want = m->vir(0, d);
    want *= Q(4);
    Mat id = Mat::identity(m->dim(d));
    id *= ratio(-11, 5);
    want += id;
    CHECK(g.op(*m, b, 0, d) == want);
  }
}

TEST_CASE("Jacobi identity and bracket-commutator compatibility") {
  ModeEngine& e = shared_engine(central_charge(3, 4));
  CurrentAlgebra g(e);
  auto m = simple_module(parse_label("3/4/2/1"));
  std::mt19937_64 rng(21);
  auto rand_elem = [&] {
    CurrentElement x;
    x.state = e.random_state(rng, uniform_int(rng, 2, 4));
    for (int i = 0; i < 2; ++i) x.laurent[uniform_int(rng, -2, 3)] += Q(uniform_int(rng, 1, 4));
    return x;
  };
  for (int k = 0; k < 5; ++k) {
    CheckResult r = verify_jacobi(g, rand_elem(), rand_elem(), rand_elem());
    CHECK_MESSAGE(r.pass, r.witness);
  }
  for (int k = 0; k < 5; ++k) {
    State v1 = e.random_state(rng, uniform_int(rng, 2, 4));
    State v2 = e.random_state(rng, uniform_int(rng, 2, 4));
    CheckResult r = verify_bracket_commutator(g, e, *m, v1, uniform_int(rng, -2, 2), v2, uniform_int(rng, -2, 2), 3);
    CHECK_MESSAGE(r.pass, r.witness);
  }
}

TEST_CASE("mode caches are consistent across repeated evaluation") {
  ModeEngine& e = shared_engine(central_charge(2, 5));
  auto m = simple_module(parse_label("2/5/1/2"));
  std::mt19937_64 rng(2);
  State v = e.random_state(rng, 5);
  Mat a = e.mode(*m, v, 1, 4);
  Mat b = e.mode(*m, v, 1, 4);
  CHECK(a == b);
  ModeEngine fresh(central_charge(2, 5));
  auto m2 = simple_module(parse_label("2/5/1/2"));
  CHECK(fresh.mode(*m2, v, 1, 4) == a);
}

#include <doctest.h>

#include <random>

#include "cb/zhu/zhu.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {

std::vector<Q> root_values(const RootData& r) {
  std::vector<Q> out;
  for (const auto& [x, mult] : r.roots) {
    CHECK(mult == 1);
    out.push_back(x);
  }
  return out;
}

std::vector<Q> oracle_weights(int p, int q) {
  std::vector<Q> out;
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q; ++s) out.push_back(oracle::kac_weight(p, q, r, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("Lee-Yang Zhu algebra") {
  ZhuPresentation z = zhu_algebra(2, 5, 8);
  CHECK(z.stabilized);
  CHECK(z.dimension == 2);
  CHECK(z.minpoly == Poly({Q(0), ratio(1, 5), Q(1)}));
  CHECK(z.powers_span);
  CHECK(root_values(z.roots) == std::vector<Q>{ratio(-1, 5), Q(0)});
  CHECK(z.roots.remainder.degree() == 0);
}

TEST_CASE("Zhu algebra dimension and spectrum match the Kac table") {
  const std::tuple<int, int, int> cases[] = {{2, 5, 7}, {3, 4, 7}, {2, 7, 8}, {2, 9, 10}, {3, 5, 10}};
  for (auto [p, q, depth] : cases) {
    ZhuPresentation z = zhu_algebra(p, q, depth);
    CHECK(z.stabilized);
    CHECK(z.dimension == (p - 1) * (q - 1) / 2);
    CHECK(z.minpoly.degree() == z.dimension);
    CHECK(zero_mode_semisimple(z.minpoly));
    CHECK(root_values(z.roots) == oracle_weights(p, q));
  }
}

TEST_CASE("quotient dimension is monotone and settles") {
  ModeEngine& e = shared_engine(central_charge(2, 7));
  int prev = 0;
  for (int d = 1; d <= 9; ++d) {
    ZhuQuotient z(e, d);
    CHECK(z.dim() >= prev);
    CHECK(z.dim() <= 3);
    prev = z.dim();
  }
  CHECK(prev == 3);
}

TEST_CASE("serial and parallel quotients agree") {
  ModeEngine& e = shared_engine(central_charge(3, 5));
  ZhuQuotient a(e, 8, Exec::Serial), b(e, 8, Exec::Parallel);
  CHECK(a.dim() == b.dim());
  CHECK(a.relation_count() == b.relation_count());
  std::mt19937_64 rng(1);
  for (int w = 0; w <= 8; ++w) {
    FState v = to_fstate(e.random_state(rng, w));
    CHECK(a.reduce(v) == b.reduce(v));
  }
}

TEST_CASE("squarefree test rejects repeated roots") {
  Poly x = Poly::monomial(Q(1), 1);
  Poly p = x * x * Poly::x_minus(ratio(1, 2));
  CHECK_FALSE(zero_mode_semisimple(p));
  CHECK(zero_mode_semisimple(x * Poly::x_minus(ratio(1, 2))));
  RootData r = rational_roots(p);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].second == 2);
}

TEST_CASE("o-map is an algebra map onto the top levels") {
  for (auto [p, q, depth] : {std::tuple{2, 5, 7}, std::tuple{3, 4, 7}}) {
    ModeEngine& e = shared_engine(central_charge(p, q));
    ZhuQuotient z(e, depth);
    std::vector<ModulePtr> simples;
    for (const auto& l : distinct_labels(p, q)) simples.push_back(simple_module(l));
    OMapReport r = verify_o_map(e, z, simples, 20, 4, 17);
    CHECK_MESSAGE(r.star.pass, r.star.witness);
    CHECK_MESSAGE(r.circ.pass, r.circ.witness);
    CHECK_MESSAGE(r.dimension.pass, r.dimension.witness);
  }
}

TEST_CASE("zero mode eigenvalues") {
  ModeEngine& e = shared_engine(central_charge(3, 4));
  for (const auto& l : distinct_labels(3, 4)) {
    auto m = simple_module(l);
    CHECK(zero_mode_eigenvalue(e, *m, to_fstate(e.virasoro_state())) == conformal_weight(l.p, l.q, l.r, l.s));
    CHECK(zero_mode_eigenvalue(e, *m, to_fstate(e.vacuum_state())) == Q(1));
  }
}

TEST_CASE("theta squares to the identity on the Zhu quotient") {
  ModeEngine& e = shared_engine(central_charge(2, 7));
  ZhuQuotient z(e, 8);
  std::mt19937_64 rng(8);
  for (int w = 0; w <= 6; ++w) {
    FState v = to_fstate(e.random_state(rng, w));
    FState t2 = theta_zero_mode(e, theta_zero_mode(e, v));
    CHECK(z.reduce(t2) == z.reduce(v));
  }
}

TEST_CASE("regularity conditions hold for Lee-Yang and Ising") {
  for (auto [p, q] : {std::pair{2, 5}, std::pair{3, 4}}) {
    ConditionReport r = condition_report(p, q, 8, 12, 8);
    CHECK(r.condition1());
    CHECK(r.condition2());
    CHECK(r.condition3());
    CHECK(r.c2.total == (p - 1) * (q - 1) / 2);
  }
}

TEST_CASE("induced modules are simple") {
  for (const auto& l : distinct_labels(2, 5)) {
    InducedCheck c = induced_simplicity(l, 8);
    CHECK(c.simple);
    CHECK(c.induced_dims == c.radical_dims);
  }
}

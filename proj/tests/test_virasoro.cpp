#include <doctest.h>

#include <random>

#include "cb/virasoro/module.hpp"
#include "cb/virasoro/minimal.hpp"
#include "cb/virasoro/verma.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {

// [L_m, L_n] = (m - n) L_{m+n} + c/12 (m^3 - m) delta_{m+n,0}, as matrices out of depth d.
bool virasoro_bracket_holds(GradedModule& m, int a, int b, int d) {
  if (d - a < 0 || d - b < 0 || d - a - b < 0) return true;
  Mat lhs = m.vir(a, d - b) * m.vir(b, d) - m.vir(b, d - a) * m.vir(a, d);
  Mat rhs = m.vir(a + b, d);
  rhs *= Q(a - b);
  if (a + b == 0) {
    Mat id = Mat::identity(m.dim(d));
    id *= m.c() * Q(a * a * a - a) / Q(12);
    rhs += id;
  }
  return lhs == rhs;
}

}  // namespace

TEST_CASE("minimal-model central charges and weights") {
  CHECK(central_charge(2, 5) == ratio(-22, 5));
  CHECK(central_charge(3, 4) == ratio(1, 2));
  CHECK(distinct_weights(2, 5) == std::vector<Q>{ratio(-1, 5), Q(0)});
  CHECK(distinct_weights(3, 4) == std::vector<Q>{Q(0), ratio(1, 16), ratio(1, 2)});
  CHECK(weight_multiset(2, 5).size() == 4);
  CHECK(weight_multiset(3, 4).size() == 6);
  for (int q = 3; q <= 12; ++q)
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(central_charge(p, q) == oracle::minimal_c(p, q));
      for (int r = 1; r < p; ++r)
        for (int s = 1; s < q; ++s) {
          CHECK(conformal_weight(p, q, r, s) == conformal_weight(p, q, p - r, q - s));
          CHECK(conformal_weight(p, q, r, s) == oracle::kac_weight(p, q, r, s));
        }
      CHECK(static_cast<int>(distinct_labels(p, q).size()) == (p - 1) * (q - 1) / 2);
    }
}

TEST_CASE("label validation and parsing") {
  CHECK_THROWS_AS(validate_model(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(validate_model(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_label({2, 5, 2, 1}), std::invalid_argument);
  CHECK(parse_label("3/4/1/2") == MinimalLabel{3, 4, 1, 2});
  CHECK_THROWS(parse_label("3/4/1"));
  CHECK(parse_module("c=1/2,h=1/16")->h() == ratio(1, 16));
  CHECK(parse_module("2/5/1/2*")->label() == "2/5/1/2*");
  CHECK_THROWS(parse_module("2/5/3/1"));
}

TEST_CASE("partitions") {
  for (int n = 0; n <= 15; ++n) CHECK(static_cast<long>(partitions(n).size()) == oracle::partitions(n));
  auto p = partitions(4);
  CHECK(p.front() == Partition{4});
  CHECK(p.back() == Partition{1, 1, 1, 1});
  CHECK(partitions(5, 2).size() == 2);
}

TEST_CASE("Gram matrices against the closed form at depth 1 and 2") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Q c = ratio(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
    Q h = ratio(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 7));
    Verma v(c, h);
    CHECK(v.gram(1)(0, 0) == 2 * h);
    Mat g = v.gram(2);
    CHECK(g(0, 0) == 4 * h + c / 2);
    CHECK(g(0, 1) == 6 * h);
    CHECK(g(1, 0) == 6 * h);
    CHECK(g(1, 1) == 8 * h * h + 4 * h);
  }
  Mat g = Verma(Q(7), Q(3)).gram(2);
  CHECK(g(0, 0) == ratio(31, 2));
  CHECK(g(1, 1) == Q(84));
}

TEST_CASE("Virasoro relations on Verma, simple and contragredient modules") {
  std::vector<ModulePtr> mods{
      std::make_shared<VermaModule>(ratio(-22, 5), ratio(-1, 5)),
      simple_module(parse_label("2/5/1/2")),
      simple_module(parse_label("3/4/1/2")),
      vacuum_module(ratio(1, 2)),
  };
  mods.push_back(dual_module(mods[1]));
  mods.push_back(dual_module(mods[3]));
  for (auto& m : mods)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int d = 0; d <= 5; ++d) CHECK_MESSAGE(virasoro_bracket_holds(*m, a, b, d), m->label(), " ", a, " ", b, " ", d);
}

TEST_CASE("simple-module graded dimensions match the alternating character sum") {
  const std::pair<int, int> models[] = {{2, 5}, {3, 4}, {2, 7}, {3, 5}};
  for (auto [p, q] : models)
    for (const auto& l : all_labels(p, q)) {
      auto m = simple_module(l);
      for (int n = 0; n <= 8; ++n) CHECK_MESSAGE(m->dim(n) == oracle::character(p, q, l.r, l.s, n), l.str(), " depth ", n);
    }
  // the vacuum module built on parts >= 2 carries the same character
  auto v = vacuum_module(central_charge(2, 5));
  for (int n = 0; n <= 10; ++n) CHECK(v->dim(n) == oracle::character(2, 5, 1, 1, n));
}

TEST_CASE("Lee-Yang and Ising characters") {
  CHECK(vacuum_module(central_charge(2, 5))->graded_dims(8) == std::vector<int>{1, 0, 1, 1, 1, 1, 2, 2, 3});
  CHECK(simple_module(parse_label("2/5/1/2"))->graded_dims(8) == std::vector<int>{1, 1, 1, 1, 2, 2, 3, 3, 4});
  CHECK(simple_module(ratio(1, 2), ratio(1, 16))->graded_dims(8) == std::vector<int>{1, 1, 1, 2, 2, 3, 4, 5, 6});
}

TEST_CASE("radical of the form is a submodule") {
  auto m = simple_module(parse_label("3/4/1/3"));
  Verma& v = m->verma();
  for (int d = 1; d <= 6; ++d) {
    const QuotientBasis& rad = m->radical(d);
    CHECK(v.dim(d) - rad.relation_rank() == m->dim(d));
    // L_1 and L_2 map radical vectors into the radical one level down
    for (const IRow& row : rad.echelon_form().rows) {
      Vec x(v.dim(d));
      for (const auto& [c, val] : row) x[c] = Q(val);
      for (int n = 1; n <= 2; ++n) {
        if (d - n < 0) continue;
        Vec y = v.matrix(n, d).apply(x);
        CHECK(is_zero(m->reduce(d - n, y)));
      }
    }
  }
}

TEST_CASE("contragredient modules") {
  for (const auto& l : all_labels(3, 4)) {
    auto m = simple_module(l);
    auto d = dual_module(m);
    auto dd = dual_module(d);
    CHECK(dual_module(m).get() == d.get());
    CHECK(d->graded_dims(6) == m->graded_dims(6));
    CHECK(dd->graded_dims(6) == m->graded_dims(6));
    for (int n = -2; n <= 2; ++n)
      for (int e = 0; e <= 4; ++e)
        if (e - n >= 0) CHECK(d->vir(n, e) == m->vir(-n, e - n).transpose());
  }
}

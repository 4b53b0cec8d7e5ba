#include <doctest.h>

#include <json.hpp>
#include <random>

#include "cb/connection/connection.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {

const char* kLeeYang4 = "0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n";

Q trace(const Mat& m) {
  Q t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Q det2(const Mat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

std::vector<std::string> locus(const OdeExport& x) {
  auto doc = nlohmann::json::parse(x.document);
  return doc.at("singular_locus").get<std::vector<std::string>>();
}

}  // namespace

TEST_CASE("rational interpolation recovers a known function") {
  // (2x^2 - 3) / (x^2 + x/2 + 5)
  Poly num({Q(-3), Q(0), Q(2)});
  Poly den({Q(5), ratio(1, 2), Q(1)});
  RatFunc f(num, den);
  std::vector<Q> xs, ys;
  for (int i = 0; i < 9; ++i) {
    xs.push_back(ratio(2 * i - 7, 3));
    ys.push_back(f.eval(xs.back()));
  }
  auto g = rational_interpolate(xs, ys, 2);
  REQUIRE(g.has_value());
  CHECK(*g == f);
  auto g4 = rational_interpolate(xs, ys, 3);
  REQUIRE(g4.has_value());
  CHECK(*g4 == f);
  // too low a degree has no solution through all points
  CHECK_FALSE(rational_interpolate(xs, ys, 1).has_value());
}

TEST_CASE("interpolation fails loudly past the degree cap") {
  CovacuaProblem p = parse_problem(kLeeYang4);
  InterpolationConfig cfg;
  cfg.degree_start = 1;
  cfg.degree_cap = 1;
  CHECK_THROWS_WITH_AS(interpolate_connection(p, 2, 2, 3, cfg), "interpolation-degree-exceeded", std::runtime_error);
}

TEST_CASE("two-point connection vanishes") {
  for (const char* t : {"2 2/5/1/2\ninf 2/5/1/2*\n", "-1/3 3/4/1/2\ninf 3/4/1/2*\n"}) {
    CovacuaProblem p = parse_problem(t);
    ConnectionMatrix a = connection_matrix(p, 0, 3);
    REQUIRE(a.dimension() == 1);
    CHECK(a.matrix.is_zero());
  }
}

TEST_CASE("three-point connection is the weight difference over the coordinate") {
  for (Q w : {Q(1), Q(2), ratio(-3, 4)}) {
    std::string text = "0 2/5/1/2\n" + to_string(w) + " 2/5/1/2\ninf 2/5/1/2\n";
    CovacuaProblem p = parse_problem(text);
    ConnectionMatrix a = connection_matrix(p, 1, 3);
    REQUIRE(a.dimension() == 1);
    Q h = oracle::kac_weight(2, 5, 1, 2);
    CHECK(a.matrix(0, 0) == (h - h - h) / w);
  }
  ConnectionMatrix a = connection_matrix(parse_problem("0 2/5/1/2\n1 2/5/1/2\ninf 2/5/1/2\n"), 1, 3);
  CHECK(a.matrix(0, 0) == ratio(1, 5));
  // Ising (sigma, sigma, epsilon): 1/2 - 2/16
  ConnectionMatrix b = connection_matrix(parse_problem("0 3/4/1/2\n1 3/4/1/2\ninf 3/4/1/3\n"), 1, 3);
  CHECK(b.matrix(0, 0) == ratio(3, 8));
}

TEST_CASE("empty block space gives an empty connection") {
  ConnectionMatrix a = connection_matrix(parse_problem("0 2/5/1/2\n1 2/5/1/1\ninf 2/5/1/1\n"), 1, 3);
  CHECK(a.dimension() == 0);
  CHECK(a.matrix.cols() == 0);
  CHECK(euler_check(parse_problem("0 2/5/1/2\n1 2/5/1/1\ninf 2/5/1/1\n"), 3).pass);
}

TEST_CASE("Lee-Yang four-point connection") {
  CovacuaProblem p = parse_problem(kLeeYang4);
  ConnectionMatrix a = connection_matrix(p, 2, 3);
  CHECK(a.dimension() == 2);
  CHECK(a.basis_labels.size() == 2);
  CheckResult st = connection_depth_stability(p, 2, 3);
  CHECK_MESSAGE(st.pass, st.witness);
  for (int d = 3; d <= 4; ++d) {
    CheckResult eu = euler_check(p, d);
    CHECK_MESSAGE(eu.pass, eu.witness);
  }
  FlatnessReport f = flatness_check(p, 1, 2, 3);
  CHECK_MESSAGE(f.result.pass, f.result.witness);
  CHECK(f.dimension == 2);
  for (const Mat& c : f.curvatures) CHECK(c.is_zero());
  CHECK(f.curvatures.size() >= 2);
}

TEST_CASE("connection entries interpolate to functions validated off the sample set") {
  CovacuaProblem p = parse_problem(kLeeYang4);
  MatrixFunction f = interpolate_connection(p, 2, 2, 3);
  for (Q x : {ratio(7, 2), ratio(-5, 3), Q(9)}) {
    CovacuaProblem q = p;
    q.points[2].coord = x;
    ConnectionMatrix a = connection_matrix(q, 2, 3);
    REQUIRE(a.basis_labels == f.basis_labels);
    CHECK(f.eval(x) == a.matrix);
  }
}

TEST_CASE("inserting the vacuum keeps the spectrum of the connection") {
  ConnectionMatrix a = connection_matrix(parse_problem(kLeeYang4), 2, 3);
  ConnectionMatrix b = connection_matrix(parse_problem("0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\n7 2/5/1/1\ninf 2/5/1/2\n"), 2, 3);
  REQUIRE(a.dimension() == 2);
  REQUIRE(b.dimension() == 2);
  CHECK(trace(a.matrix) == trace(b.matrix));
  CHECK(det2(a.matrix) == det2(b.matrix));
}

TEST_CASE("ODE export and translation of the singular locus") {
  OdeExport x = export_ode(parse_problem(kLeeYang4), 2, 3);
  CHECK(x.singularities_at_marked_points);
  CHECK(locus(x) == std::vector<std::string>{"0", "1"});
  auto doc = nlohmann::json::parse(x.document);
  CHECK(doc.at("dimension") == 2);
  CHECK(doc.at("matrix").size() == 2);
  OdeExport y = export_ode(parse_problem("1 2/5/1/2\n2 2/5/1/2\n4 2/5/1/2\ninf 2/5/1/2\n"), 2, 3);
  CHECK(y.singularities_at_marked_points);
  CHECK(locus(y) == std::vector<std::string>{"1", "2"});
}

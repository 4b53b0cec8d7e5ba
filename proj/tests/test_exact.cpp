#include <doctest.h>

#include <random>

#include "cb/exact/elimination.hpp"
#include "cb/exact/rational_form.hpp"
#include "oracles.hpp"

using namespace cb;

namespace {

Q small_rational(std::mt19937_64& rng) {
  int num = static_cast<int>(rng() % 9) - 4;
  int den = 1 + static_cast<int>(rng() % 3);
  return ratio(num, den);
}

// Random sparse matrix of prescribed rank r: product of random factors.
Mat random_low_rank(std::mt19937_64& rng, int rows, int cols, int r) {
  Mat a(rows, r), b(r, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < r; ++k) a(i, k) = (rng() % 3 == 0) ? small_rational(rng) : Q(0);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < cols; ++j) b(k, j) = (rng() % 2 == 0) ? small_rational(rng) : Q(0);
  return a * b;
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(parse_rational(" -6/4 ") == ratio(-3, 2));
  CHECK(to_string(ratio(4, -6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0x"), std::invalid_argument);
  CHECK(binom(Q(-2), 3) == Q(-4));
  CHECK(binom(5, 2) == Q(10));
  CHECK(binom(5, -1) == Q(0));
  CHECK(power(ratio(2, 3), -2) == ratio(9, 4));
}

TEST_CASE("rank and kernel agree with plain Gauss-Jordan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 3 + static_cast<int>(rng() % 8), cols = 3 + static_cast<int>(rng() % 8);
    const int r = static_cast<int>(rng() % 5);
    Mat m = random_low_rank(rng, rows, cols, r);
    SparseMatrix s = SparseMatrix::from_dense(m);
    const int want = oracle::rank(m);
    CHECK(rank(s, Exec::Serial) == want);
    CHECK(rank(s, Exec::Parallel) == want);
    RankKernel rk = rank_kernel(s);
    CHECK(rk.rank == want);
    CHECK(static_cast<int>(rk.kernel.size()) == cols - want);
    for (const Vec& k : rk.kernel) CHECK(is_zero(m.apply(k)));
  }
}

TEST_CASE("serial and parallel elimination produce the same echelon form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_low_rank(rng, 12, 10, 6);
    SparseMatrix s = SparseMatrix::from_dense(m);
    Echelon a = echelon(s, Exec::Serial), b = echelon(s, Exec::Parallel);
    CHECK(a.pivot_cols == b.pivot_cols);
    CHECK(a.rows == b.rows);
  }
}

TEST_CASE("quotient basis: classes, representatives and pivots on the left") {
  SparseMatrix rel(4);
  rel.add_row({{0, Q(1)}, {3, Q(-1)}});
  rel.add_row({{1, Q(2)}, {2, Q(2)}});
  QuotientBasis qb = quotient_basis(rel);
  CHECK(qb.dim() == 2);
  CHECK(qb.free_columns() == std::vector<int>{2, 3});
  // e0 = e3 and e1 = -e2 modulo the relations
  CHECK(qb.reduce(SVec{{0, Q(1)}}) == Vec{Q(0), Q(1)});
  CHECK(qb.reduce(SVec{{1, Q(3)}}) == Vec{Q(-3), Q(0)});
  CHECK(qb.in_span(SVec{{0, Q(5)}, {3, Q(-5)}}));
  Vec amb = qb.reduce_ambient(Vec{Q(1), Q(1), Q(0), Q(0)});
  CHECK(amb == Vec{Q(0), Q(0), Q(-1), Q(1)});
}

TEST_CASE("solve") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_low_rank(rng, 6, 5, 4);
    Vec x(5);
    for (auto& v : x) v = small_rational(rng);
    Vec b = a.apply(x);
    auto got = solve(SparseMatrix::from_dense(a), b);
    REQUIRE(got.has_value());
    CHECK(a.apply(*got) == b);
  }
  Mat a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  CHECK_FALSE(solve(SparseMatrix::from_dense(a), Vec{Q(1), Q(2)}).has_value());
}

TEST_CASE("dense inverse against the oracle determinant") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = small_rational(rng);
    auto inv = dense_inverse(m);
    CHECK(inv.has_value() == (oracle::det(m) != 0));
    if (inv) CHECK(m * *inv == Mat::identity(4));
  }
}

TEST_CASE("sparse text round trip") {
  SparseMatrix m(3);
  m.add_row({{0, ratio(1, 2)}, {2, Q(-3)}});
  m.add_row({});
  m.add_row({{1, ratio(-7, 5)}});
  CHECK(SparseMatrix::from_text(m.to_text()) == m);
}

TEST_CASE("polynomials: gcd, squarefree, rational roots") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<Q, int> roots;
    Poly p = Poly::constant(ratio(3, 2));
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      Q r = small_rational(rng);
      roots[r] += 1;
      p = p * Poly::x_minus(r);
    }
    // irreducible quadratic factor x^2 + 2 stays in the remainder
    Poly full = p * Poly(std::vector<Q>{Q(2), Q(0), Q(1)});
    RootData rd = rational_roots(full);
    std::map<Q, int> got(rd.roots.begin(), rd.roots.end());
    CHECK(got == roots);
    CHECK(rd.remainder == Poly(std::vector<Q>{Q(2), Q(0), Q(1)}));
    bool distinct = true;
    for (const auto& [r, m] : roots) distinct = distinct && m == 1;
    CHECK(is_squarefree(p) == distinct);
  }
  Poly a = Poly::x_minus(Q(1)) * Poly::x_minus(Q(2));
  Poly b = Poly::x_minus(Q(2)) * Poly::x_minus(Q(3));
  CHECK(gcd(a, b) == Poly::x_minus(Q(2)));
  auto [quo, rem] = (a * b).divmod(b);
  CHECK(quo == a);
  CHECK(rem.is_zero());
}

TEST_CASE("rational functions: residues sum to zero, Laurent data") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    RatFunc f;
    std::vector<Q> poles;
    for (int i = 0; i < 3; ++i) {
      Q a(static_cast<long>(i) - 1);
      for (int k = 1; k <= 2; ++k) f += RatFunc::pole(small_rational(rng), a, k);
      poles.push_back(a);
    }
    f += RatFunc::poly(Poly(std::vector<Q>{small_rational(rng), small_rational(rng)}));
    Q s = f.residue_at_infinity();
    for (const Q& a : poles) s += f.residue_at(a);
    CHECK(s == 0);
    // Laurent data reproduce the function near a regular point
    auto lau = f.laurent_at(Q(5), 3);
    CHECK(lau[0] == f.eval(Q(5)));
    CHECK(lau[1] == f.derivative().eval(Q(5)));
  }
  RatFunc g = RatFunc::pole(Q(3), Q(2), 2);
  CHECK(g.laurent_at(Q(2), 0).at(-2) == Q(3));
  auto inf = RatFunc::poly(Poly::monomial(Q(1), 2)).laurent_at_infinity(-3);
  CHECK(inf.at(2) == Q(1));
  CHECK(g.rational_poles() == std::vector<Q>{Q(2)});
}

TEST_CASE("rational forms in two variables") {
  std::vector<MPoly> factors{MPoly::linear(Q(0), {Q(1), Q(0)}), MPoly::linear(Q(0), {Q(1), Q(-1)})};
  RationalForm f({"z1", "z2"}, factors);
  f.add_term(Q(2), {0, 1}, {1, 2});  // 2 z2 / (z1 (z1 - z2)^2)
  CHECK(f.eval({Q(1), Q(3)}) == ratio(3, 2));
  RationalForm g = f.swapped(0, 1);
  CHECK(g.eval({Q(3), Q(1)}) == f.eval({Q(1), Q(3)}));
  CHECK(equal(f, f.swapped(0, 1).swapped(0, 1)));
  RatFunc line = f.substitute(1, Q(3)).to_univariate(0);
  CHECK(line.eval(Q(1)) == ratio(3, 2));
  CHECK(line.residue_at(Q(0)) == ratio(2, 3));
}

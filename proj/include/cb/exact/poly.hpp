#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cb/exact/scalar.hpp"

namespace cb {

// Dense univariate polynomial over Q, coefficients in increasing degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Q> coeffs);
  static Poly constant(const Q& c);
  static Poly monomial(const Q& c, int degree);
  static Poly x_minus(const Q& a);  // x - a

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Q(0); }
  Q leading() const { return c_.empty() ? Q(0) : c_.back(); }

  Q eval(const Q& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly shifted(const Q& a) const;  // p(x + a)
  Poly reversed(int n) const;      // x^n p(1/x), n >= degree

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Q& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  // Quotient and remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Q> c_;
};

Poly gcd(Poly a, Poly b);  // monic, zero if both zero
bool is_squarefree(const Poly& p);

struct RootData {
  std::vector<std::pair<Q, int>> roots;  // distinct rational roots, ascending, with multiplicity
  Poly remainder;                         // monic factor without rational roots
};

RootData rational_roots(const Poly& p);

}  // namespace cb

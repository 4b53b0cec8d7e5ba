#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cb/exact/poly.hpp"

namespace cb {

// Univariate rational function, reduced with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Q(1))) {}
  RatFunc(Poly num, Poly den);
  static RatFunc poly(Poly p) { return RatFunc(std::move(p), Poly::constant(Q(1))); }
  // c * (x - a)^(-k) for k >= 0
  static RatFunc pole(const Q& c, const Q& a, int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Q eval(const Q& x) const;
  RatFunc derivative() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const Q& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(RatFunc a, const Q& s) { return a *= s; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Laurent coefficients in (x - a), exponents up to max_exp inclusive.
  std::map<int, Q> laurent_at(const Q& a, int max_exp) const;
  // Expansion at infinity in powers of x; exponents from the top degree down to min_exp.
  std::map<int, Q> laurent_at_infinity(int min_exp) const;
  Q residue_at(const Q& a) const;
  Q residue_at_infinity() const;
  // Distinct rational poles; the remaining denominator factor is returned via rest.
  std::vector<Q> rational_poles(Poly* rest = nullptr) const;

  std::string str(const std::string& var = "z") const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

// Sparse multivariate polynomial over Q.
class MPoly {
 public:
  using Exps = std::vector<int>;
  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Q& c);
  static MPoly variable(int nvars, int i);
  // a0 + sum_i a[i] z_i
  static MPoly linear(const Q& a0, const std::vector<Q>& a);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Q>& terms() const { return terms_; }
  void add_term(const Exps& e, const Q& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Q& s);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  MPoly pow(int k) const;

  Q eval(const std::vector<Q>& x) const;
  MPoly substitute(int var, const Q& value) const;
  bool uses(int var) const;
  Poly to_univariate(int var) const;  // requires all other variables absent
  int total_degree() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Exps, Q> terms_;
};

// Numerator over a product of powers of declared linear forms: the declared pole divisor.
class RationalForm {
 public:
  RationalForm() = default;
  RationalForm(std::vector<std::string> vars, std::vector<MPoly> factors);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<MPoly>& factors() const { return factors_; }
  const std::vector<int>& exponents() const { return exps_; }
  const MPoly& numerator() const { return num_; }

  // c * monomial(z^mono) * prod factor_i^(-pows[i]); negative entries of mono are not allowed.
  void add_term(const Q& c, const std::vector<int>& mono, const std::vector<int>& pows);
  void add_scaled(const Q& c, const RationalForm& o, const std::vector<int>& extra_pows,
                  const std::vector<int>& mono);

  RationalForm& operator+=(const RationalForm& o);
  RationalForm& operator-=(const RationalForm& o);
  RationalForm& operator*=(const Q& s);
  bool is_zero() const { return num_.is_zero(); }
  friend bool equal(const RationalForm& a, const RationalForm& b);

  Q eval(const std::vector<Q>& x) const;
  // Fix one variable; returns the form over the remaining variables with the same variable list.
  RationalForm substitute(int var, const Q& value) const;
  RatFunc to_univariate(int var) const;
  // Swap two variables (e.g. z1 <-> z2) including in the declared factors.
  RationalForm swapped(int i, int j) const;

  std::string str() const;

 private:
  void raise_to(const std::vector<int>& target);
  int factor_index(const MPoly& f);
  std::vector<std::string> vars_;
  std::vector<MPoly> factors_;
  std::vector<int> exps_;
  MPoly num_;
};

}  // namespace cb

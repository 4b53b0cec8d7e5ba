#include "cb/exact/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cb {

Poly::Poly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Q& c) { return Poly(std::vector<Q>{c}); }

Poly Poly::monomial(const Q& c, int degree) {
  std::vector<Q> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::x_minus(const Q& a) { return Poly(std::vector<Q>{-a, Q(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q Poly::eval(const Q& x) const {
  Q out(0);
  for (int i = degree(); i >= 0; --i) out = out * x + c_[i];
  return out;
}

Poly Poly::derivative() const {
  std::vector<Q> v;
  for (int i = 1; i <= degree(); ++i) v.push_back(c_[i] * i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Q inv = Q(1) / leading();
  p *= inv;
  return p;
}

Poly Poly::shifted(const Q& a) const {
  // Horner in the variable (x + a).
  Poly out;
  Poly xa(std::vector<Q>{a, Q(1)});
  for (int i = degree(); i >= 0; --i) out = out * xa + Poly::constant(c_[i]);
  return out;
}

Poly Poly::reversed(int n) const {
  if (n < degree()) throw std::invalid_argument("Poly::reversed: n < degree");
  std::vector<Q> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) v[n - i] = c_[i];
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Q& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Q> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = *this;
  std::vector<Q> q(std::max(0, degree() - d.degree() + 1));
  const Q lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    Q f = r.leading() / lead;
    q[shift] = f;
    for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  return {Poly(std::move(q)), r};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Q& a = c_[i];
    if (a == 0) continue;
    Q mag = abs(a);
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Z> positive_divisors(Z n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Z, int>> fac;
  Z m = n;
  for (Z p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<Z> divs{Z(1)};
  for (const auto& [p, e] : fac) {
    std::vector<Z> next;
    for (const auto& d : divs) {
      Z pk = 1;
      for (int k = 0; k <= e; ++k) {
        next.push_back(d * pk);
        pk *= p;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

}  // namespace

RootData rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RootData out;
  Poly rest = p.monic();
  int zero_mult = 0;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    rest = rest.divmod(Poly::x_minus(Q(0))).first;
    ++zero_mult;
  }
  std::set<Q> cand;
  if (rest.degree() > 0) {
    Z den = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Z a0 = Q(rest.coeff(0) * den).get_num();
    Z an = Q(rest.leading() * den).get_num();
    for (const auto& num : positive_divisors(a0))
      for (const auto& d : positive_divisors(an)) {
        Q r(num, d);
        r.canonicalize();
        cand.insert(r);
        cand.insert(-r);
      }
  }
  if (zero_mult) out.roots.emplace_back(Q(0), zero_mult);
  for (const auto& r : cand) {
    int mult = 0;
    while (rest.degree() > 0 && rest.eval(r) == 0) {
      rest = rest.divmod(Poly::x_minus(r)).first;
      ++mult;
    }
    if (mult) out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = rest.monic();
  return out;
}

}  // namespace cb

#include "cb/exact/rational_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cb {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Q(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Q lead = den_.leading();
  if (lead != 1) {
    Q inv = Q(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::pole(const Q& c, const Q& a, int k) {
  Poly den = Poly::constant(Q(1));
  for (int i = 0; i < k; ++i) den = den * Poly::x_minus(a);
  return RatFunc(Poly::constant(c), den);
}

Q RatFunc::eval(const Q& x) const {
  Q d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFunc evaluated at a pole");
  return num_.eval(x) / d;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  RatFunc neg = o;
  neg *= Q(-1);
  return *this += neg;
}

RatFunc& RatFunc::operator*=(const Q& s) {
  num_ *= s;
  reduce();
  return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

namespace {

// Series of a/b in t up to t^n (b(0) != 0).
std::vector<Q> series_divide(const Poly& a, const Poly& b, int n) {
  std::vector<Q> s(static_cast<std::size_t>(std::max(n + 1, 0)));
  const Q b0 = b.coeff(0);
  for (int i = 0; i <= n; ++i) {
    Q acc = a.coeff(i);
    for (int j = 1; j <= std::min(i, b.degree()); ++j) acc -= b.coeff(j) * s[i - j];
    s[i] = acc / b0;
  }
  return s;
}

int low_order(const Poly& p) {
  int k = 0;
  while (k <= p.degree() && p.coeff(k) == 0) ++k;
  return k;
}

Poly drop_low(const Poly& p, int k) {
  std::vector<Q> v;
  for (int i = k; i <= p.degree(); ++i) v.push_back(p.coeff(i));
  return Poly(std::move(v));
}

}  // namespace

std::map<int, Q> RatFunc::laurent_at(const Q& a, int max_exp) const {
  std::map<int, Q> out;
  if (num_.is_zero()) return out;
  Poly n = num_.shifted(a), d = den_.shifted(a);
  int kn = low_order(n), kd = low_order(d);
  n = drop_low(n, kn);
  d = drop_low(d, kd);
  const int base = kn - kd;
  const int terms = max_exp - base;
  if (terms < 0) return out;
  auto s = series_divide(n, d, terms);
  for (int i = 0; i <= terms; ++i)
    if (s[i] != 0) out[base + i] = s[i];
  return out;
}

std::map<int, Q> RatFunc::laurent_at_infinity(int min_exp) const {
  std::map<int, Q> out;
  if (num_.is_zero()) return out;
  const int dn = num_.degree(), dd = den_.degree();
  Poly n = num_.reversed(dn), d = den_.reversed(dd);
  // f = t^(dd - dn) n(t)/d(t) with t = 1/x; d(0) = leading coefficient != 0.
  const int top = dn - dd;
  const int terms = top - min_exp;
  if (terms < 0) return out;
  auto s = series_divide(n, d, terms);
  for (int i = 0; i <= terms; ++i)
    if (s[i] != 0) out[top - i] = s[i];
  return out;
}

Q RatFunc::residue_at(const Q& a) const {
  auto l = laurent_at(a, -1);
  auto it = l.find(-1);
  return it == l.end() ? Q(0) : it->second;
}

Q RatFunc::residue_at_infinity() const {
  auto l = laurent_at_infinity(-1);
  auto it = l.find(-1);
  return it == l.end() ? Q(0) : -it->second;
}

std::vector<Q> RatFunc::rational_poles(Poly* rest) const {
  std::vector<Q> out;
  if (den_.degree() <= 0) {
    if (rest) *rest = Poly::constant(Q(1));
    return out;
  }
  RootData rd = rational_roots(den_);
  for (const auto& r : rd.roots) out.push_back(r.first);
  if (rest) *rest = rd.remainder;
  return out;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(int nvars, const Q& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_[Exps(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  Exps e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::linear(const Q& a0, const std::vector<Q>& a) {
  const int n = static_cast<int>(a.size());
  MPoly p = constant(n, a0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Exps e(n, 0);
    e[i] = 1;
    p.terms_[e] = a[i];
  }
  return p;
}

void MPoly::add_term(const Exps& e, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Q& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exps e(out.nvars_, 0);
      for (int i = 0; i < out.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::pow(int k) const {
  MPoly out = constant(nvars_, Q(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Q MPoly::eval(const std::vector<Q>& x) const {
  Q out(0);
  for (const auto& [e, c] : terms_) {
    Q t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= power(x[i], e[i]);
    out += t;
  }
  return out;
}

MPoly MPoly::substitute(int var, const Q& value) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exps f = e;
    f[var] = 0;
    out.add_term(f, c * power(value, e[var]));
  }
  return out;
}

bool MPoly::uses(int var) const {
  for (const auto& t : terms_)
    if (t.first[var] != 0) return true;
  return false;
}

Poly MPoly::to_univariate(int var) const {
  std::vector<Q> v;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("MPoly::to_univariate: other variable present");
    if (static_cast<int>(v.size()) <= e[var]) v.resize(static_cast<std::size_t>(e[var]) + 1);
    v[e[var]] += c;
  }
  return Poly(std::move(v));
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Q mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << to_string(mag);
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      os << (need_star ? "*" : "") << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RationalForm

RationalForm::RationalForm(std::vector<std::string> vars, std::vector<MPoly> factors)
    : vars_(std::move(vars)), factors_(std::move(factors)), exps_(factors_.size(), 0),
      num_(static_cast<int>(vars_.size())) {}

int RationalForm::factor_index(const MPoly& f) {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] == f) return static_cast<int>(i);
  factors_.push_back(f);
  exps_.push_back(0);
  return static_cast<int>(factors_.size()) - 1;
}

void RationalForm::raise_to(const std::vector<int>& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] > exps_[i]) {
      if (!num_.is_zero()) num_ = num_ * factors_[i].pow(target[i] - exps_[i]);
      exps_[i] = target[i];
    }
  }
}

void RationalForm::add_term(const Q& c, const std::vector<int>& mono, const std::vector<int>& pows) {
  if (c == 0) return;
  std::vector<int> target = exps_;
  for (std::size_t i = 0; i < pows.size(); ++i) target[i] = std::max(target[i], pows[i]);
  raise_to(target);
  MPoly t(nvars());
  t.add_term(mono, c);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int p = i < pows.size() ? pows[i] : 0;
    if (exps_[i] > p) t = t * factors_[i].pow(exps_[i] - p);
  }
  num_ += t;
}

void RationalForm::add_scaled(const Q& c, const RationalForm& o, const std::vector<int>& extra_pows,
                              const std::vector<int>& mono) {
  if (c == 0 || o.is_zero()) return;
  if (o.nvars() != nvars()) throw std::invalid_argument("RationalForm variable mismatch");
  std::vector<int> map(o.factors_.size());
  for (std::size_t i = 0; i < o.factors_.size(); ++i) map[i] = factor_index(o.factors_[i]);
  std::vector<int> pows(factors_.size(), 0);
  for (std::size_t i = 0; i < o.factors_.size(); ++i) pows[map[i]] += o.exps_[i];
  for (std::size_t i = 0; i < extra_pows.size(); ++i) pows[i] += extra_pows[i];
  std::vector<int> target = exps_;
  for (std::size_t i = 0; i < pows.size(); ++i) target[i] = std::max(target[i], pows[i]);
  raise_to(target);
  MPoly t = o.num_;
  t *= c;
  if (!mono.empty()) {
    MPoly m(nvars());
    m.add_term(mono, Q(1));
    t = t * m;
  }
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > pows[i]) t = t * factors_[i].pow(exps_[i] - pows[i]);
  num_ += t;
}

RationalForm& RationalForm::operator+=(const RationalForm& o) {
  add_scaled(Q(1), o, {}, {});
  return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& o) {
  add_scaled(Q(-1), o, {}, {});
  return *this;
}

RationalForm& RationalForm::operator*=(const Q& s) {
  num_ *= s;
  return *this;
}

bool equal(const RationalForm& a, const RationalForm& b) {
  RationalForm d = a;
  d -= b;
  return d.is_zero();
}

Q RationalForm::eval(const std::vector<Q>& x) const {
  Q den(1);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!exps_[i]) continue;
    Q f = factors_[i].eval(x);
    if (f == 0) throw std::domain_error("RationalForm evaluated on its pole divisor");
    den *= power(f, exps_[i]);
  }
  return num_.eval(x) / den;
}

RationalForm RationalForm::substitute(int var, const Q& value) const {
  RationalForm out(vars_, {});
  out.num_ = num_.substitute(var, value);
  Q scale(1);
  std::vector<int> pows;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    MPoly f = factors_[i].substitute(var, value);
    bool constant = f.total_degree() <= 0;
    if (constant) {
      Q v = f.is_zero() ? Q(0) : f.terms().begin()->second;
      if (exps_[i] > 0 && v == 0) throw std::domain_error("substitution lands on the pole divisor");
      scale /= power(v == 0 ? Q(1) : v, exps_[i]);
      continue;
    }
    int k = out.factor_index(f);
    if (static_cast<int>(pows.size()) <= k) pows.resize(static_cast<std::size_t>(k) + 1, 0);
    pows[k] += exps_[i];
  }
  out.exps_ = pows;
  out.exps_.resize(out.factors_.size(), 0);
  out.num_ *= scale;
  return out;
}

RatFunc RationalForm::to_univariate(int var) const {
  Poly den = Poly::constant(Q(1));
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!exps_[i]) continue;
    Poly f = factors_[i].to_univariate(var);
    for (int k = 0; k < exps_[i]; ++k) den = den * f;
  }
  return RatFunc(num_.to_univariate(var), den);
}

RationalForm RationalForm::swapped(int i, int j) const {
  auto swap_poly = [&](const MPoly& p) {
    MPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      MPoly::Exps f = e;
      std::swap(f[i], f[j]);
      out.add_term(f, c);
    }
    return out;
  };
  RationalForm out(vars_, {});
  for (const auto& f : factors_) out.factors_.push_back(swap_poly(f));
  out.exps_ = exps_;
  out.num_ = swap_poly(num_);
  return out;
}

std::string RationalForm::str() const {
  std::ostringstream os;
  os << "(" << num_.str(vars_) << ")";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!exps_[i]) continue;
    os << " / (" << factors_[i].str(vars_) << ")";
    if (exps_[i] > 1) os << "^" << exps_[i];
  }
  return os.str();
}

}  // namespace cb

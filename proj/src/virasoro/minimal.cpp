#include "cb/virasoro/minimal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cb {

std::string MinimalLabel::str() const {
  std::ostringstream os;
  os << p << "/" << q << "/" << r << "/" << s;
  return os.str();
}

void validate_model(int p, int q) {
  if (!(1 < p && p < q) || std::gcd(p, q) != 1) {
    std::ostringstream os;
    os << "invalid minimal model (p,q)=(" << p << "," << q << "): need 1<p<q coprime";
    throw std::invalid_argument(os.str());
  }
}

void validate_label(const MinimalLabel& l) {
  validate_model(l.p, l.q);
  if (!(0 < l.r && l.r < l.p && 0 < l.s && l.s < l.q))
    throw std::invalid_argument("invalid label " + l.str() + ": need 0<r<p, 0<s<q");
}

Q central_charge(int p, int q) {
  validate_model(p, q);
  Q d(p - q);
  Q out = Q(1) - Q(6) * d * d / Q(p * q);
  return out;
}

Q conformal_weight(int p, int q, int r, int s) {
  validate_label({p, q, r, s});
  Q a(r * q - s * p), b(p - q);
  return (a * a - b * b) / Q(4 * p * q);
}

std::vector<MinimalLabel> all_labels(int p, int q) {
  validate_model(p, q);
  std::vector<MinimalLabel> out;
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q; ++s) out.push_back({p, q, r, s});
  return out;
}

std::vector<Q> weight_multiset(int p, int q) {
  std::vector<Q> out;
  for (const auto& l : all_labels(p, q)) out.push_back(conformal_weight(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MinimalLabel> distinct_labels(int p, int q) {
  std::vector<MinimalLabel> out;
  std::vector<Q> seen;
  for (const auto& l : all_labels(p, q)) {
    Q h = conformal_weight(l);
    if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
    seen.push_back(h);
    out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [](const MinimalLabel& a, const MinimalLabel& b) {
    return conformal_weight(a) < conformal_weight(b);
  });
  return out;
}

std::vector<Q> distinct_weights(int p, int q) {
  std::vector<Q> out;
  for (const auto& l : distinct_labels(p, q)) out.push_back(conformal_weight(l));
  return out;
}

MinimalLabel parse_label(const std::string& text) {
  MinimalLabel l;
  char a, b, c;
  std::istringstream is(text);
  if (!(is >> l.p >> a >> l.q >> b >> l.r >> c >> l.s) || a != '/' || b != '/' || c != '/')
    throw std::invalid_argument("label must be p/q/r/s: '" + text + "'");
  std::string rest;
  if (is >> rest) throw std::invalid_argument("trailing text in label: '" + text + "'");
  validate_label(l);
  return l;
}

}  // namespace cb

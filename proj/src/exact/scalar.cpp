#include "cb/exact/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cb {

std::string to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Z& x) { return x.get_str(); }

static bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

Q parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.size() > 1 && num[0] == '+') num = num.substr(1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + text + "'");
  Z d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Q out(Z(num), d);
  out.canonicalize();
  return out;
}

Q binom(const Q& top, long k) {
  if (k < 0) return Q(0);
  Q out(1);
  for (long i = 0; i < k; ++i) {
    out *= (top - i);
    out /= (i + 1);
  }
  return out;
}

Q binom(long top, long k) { return binom(Q(top), k); }

Q factorial(long n) {
  Q out(1);
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Q power(const Q& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return power(Q(1) / base, -e);
  }
  Q out(1);
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

std::size_t bit_length(const Z& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace cb

namespace cb {

Q ratio(long a, long b) {
  Q x(a, b);
  x.canonicalize();
  return x;
}

}  // namespace cb

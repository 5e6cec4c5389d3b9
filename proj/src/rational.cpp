#include "gkm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gkm {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text))
      throw std::invalid_argument("not a rational literal: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  const Integer d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational& value) {
  return value.str();
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i);
  return out;
}

} // namespace gkm

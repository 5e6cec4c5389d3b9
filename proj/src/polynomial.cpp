#include "gkm/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkm {

RationalPoly RationalPoly::constant(int num_vars, const Rational& c) {
  RationalPoly p(num_vars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

RationalPoly RationalPoly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(std::move(e), 1);
}

RationalPoly RationalPoly::monomial(std::vector<int> exponents, const Rational& coeff) {
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  RationalPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coeff);
  return p;
}

RationalPoly RationalPoly::linear_form(const RationalVector& coeffs) {
  RationalPoly p(static_cast<int>(coeffs.size()));
  std::vector<int> e(static_cast<std::size_t>(coeffs.size()), 0);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, coeffs(i));
    e[static_cast<std::size_t>(i)] = 0;
  }
  return p;
}

RationalPoly RationalPoly::linear_form(const IntVector& coeffs) {
  return linear_form(to_rational(coeffs));
}

int RationalPoly::degree() const {
  int d = kZeroDegree;
  for (const auto& [e, c] : terms_) {
    const int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > d) d = t;
  }
  return d;
}

bool RationalPoly::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

Rational RationalPoly::coeff(const std::vector<int>& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPoly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomials over different variable sets");
  RationalPoly p(num_vars_);
  std::vector<int> e(static_cast<std::size_t>(num_vars_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (int i = 0; i < num_vars_; ++i)
        e[static_cast<std::size_t>(i)] =
            ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      p.add_term(e, ca * cb);
    }
  return p;
}

Rational RationalPoly::evaluate(const RationalVector& point) const {
  if (point.size() != num_vars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < num_vars_; ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      for (int r = 0; r < k; ++r) t *= point(i);
    }
    total += t;
  }
  return total;
}

RationalPoly RationalPoly::substitute(int var, const RationalPoly& value) const {
  if (var < 0 || var >= num_vars_)
    throw std::invalid_argument("substitution variable out of range");
  if (value.num_vars() != num_vars_)
    throw std::invalid_argument("substitution value over different variable set");

  // Cache powers of the replacement up to the largest exponent of x_var.
  int max_pow = 0;
  for (const auto& [e, c] : terms_)
    max_pow = std::max(max_pow, e[static_cast<std::size_t>(var)]);
  std::vector<RationalPoly> powers;
  powers.reserve(static_cast<std::size_t>(max_pow) + 1);
  powers.push_back(constant(num_vars_, 1));
  for (int k = 1; k <= max_pow; ++k) powers.push_back(powers.back() * value);

  RationalPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> rest = e;
    const int k = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    out += monomial(std::move(rest), c) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

std::string RationalPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Graded-lex display: higher total degree first, then lex descending.
  std::vector<std::pair<std::vector<int>, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : ordered) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (int i = 0; i < num_vars_; ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (has_var) mono << "*";
      if (static_cast<std::size_t>(i) < names.size())
        mono << names[static_cast<std::size_t>(i)];
      else
        mono << "x" << i;
      if (k > 1) mono << "^" << k;
      has_var = true;
    }
    if (!has_var) {
      os << c.str();
    } else if (c == 1) {
      os << mono.str();
    } else if (c == -1) {
      os << "-" << mono.str();
    } else {
      os << c.str() << "*" << mono.str();
    }
  }
  return os.str();
}

namespace {

void enumerate_exponents(int num_vars, int degree, int var, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (var == num_vars - 1) {
    current[static_cast<std::size_t>(var)] = degree;
    out.push_back(current);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    current[static_cast<std::size_t>(var)] = k;
    enumerate_exponents(num_vars, degree - k, var + 1, current, out);
  }
}

} // namespace

std::vector<std::vector<int>> monomial_exponents(int num_vars, int degree) {
  if (num_vars <= 0 || degree < 0)
    throw std::invalid_argument("monomial_exponents: bad arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(num_vars), 0);
  enumerate_exponents(num_vars, degree, 0, current, out);
  return out;
}

Eigen::Index monomial_count(int num_vars, int degree) {
  // C(degree + num_vars - 1, num_vars - 1)
  Integer num = 1, den = 1;
  for (int i = 1; i <= num_vars - 1; ++i) {
    num *= degree + i;
    den *= i;
  }
  return static_cast<Eigen::Index>(num / den);
}

bool is_divisible(const RationalPoly& p, const RationalPoly& gamma) {
  if (gamma.is_zero() || !gamma.is_homogeneous(1))
    throw std::invalid_argument("is_divisible: divisor must be a nonzero linear form");
  const int n = gamma.num_vars();
  if (p.num_vars() != n)
    throw std::invalid_argument("is_divisible: variable sets differ");
  if (p.is_zero()) return true;

  // gamma = sum g_i x_i with g_k != 0; on the hyperplane gamma = 0 we have
  // x_k = -(1/g_k) sum_{i != k} g_i x_i, and gamma | p iff p vanishes there.
  int k = -1;
  Rational gk;
  RationalVector g = RationalVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    g(i) = gamma.coeff(e);
    if (k < 0 && g(i) != 0) {
      k = i;
      gk = g(i);
    }
  }
  RationalVector repl = -g / gk;
  repl(k) = 0;
  return p.substitute(k, RationalPoly::linear_form(repl)).is_zero();
}

} // namespace gkm

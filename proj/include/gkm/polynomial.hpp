#ifndef GKM_POLYNOMIAL_HPP
#define GKM_POLYNOMIAL_HPP

#include "gkm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkm {

/**
 * Multivariate polynomial with exact rational coefficients. Terms are keyed
 * by exponent vectors; zero coefficients are never stored. The monomial
 * order used everywhere (bases, reports) is graded lexicographic with
 * x0 > x1 > ... > x{n-1}.
 */
class RationalPoly {
 public:
  /// Sentinel degree of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  explicit RationalPoly(int num_vars) : num_vars_(num_vars) {}

  static RationalPoly constant(int num_vars, const Rational& c);
  static RationalPoly variable(int num_vars, int index);
  static RationalPoly monomial(std::vector<int> exponents, const Rational& coeff);
  /// The linear form sum_i coeffs[i] * x_i.
  static RationalPoly linear_form(const RationalVector& coeffs);
  static RationalPoly linear_form(const IntVector& coeffs);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous(int d) const;
  Rational coeff(const std::vector<int>& exponents) const;
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& scalar);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  RationalPoly operator-() const;
  RationalPoly operator*(const RationalPoly& other) const;
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const RationalVector& point) const;

  /// Replaces x_var by `value` (a polynomial in the same variable set).
  RationalPoly substitute(int var, const RationalPoly& value) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  int num_vars_;
  std::map<std::vector<int>, Rational> terms_;
};

/**
 * Exponent vectors of all degree-d monomials in num_vars variables, in the
 * global graded-lex order. Degree 0 yields the single all-zero vector.
 */
std::vector<std::vector<int>> monomial_exponents(int num_vars, int degree);

/// Number of degree-d monomials in num_vars variables.
Eigen::Index monomial_count(int num_vars, int degree);

/**
 * Whether the nonzero linear form gamma divides p. One variable with a
 * nonzero coefficient in gamma is eliminated by substitution; p is divisible
 * iff the remainder vanishes identically. Throws if gamma is zero or not
 * homogeneous linear.
 */
bool is_divisible(const RationalPoly& p, const RationalPoly& gamma);

} // namespace gkm

#endif

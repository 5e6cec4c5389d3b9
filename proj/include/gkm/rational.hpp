#ifndef GKM_RATIONAL_HPP
#define GKM_RATIONAL_HPP

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace gkm {

/**
 * Exact arbitrary-precision rational scalar. Every matrix, weight and
 * polynomial coefficient in this library is a `Rational`; no floating
 * point is used anywhere.
 */
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

/// Parses "p" or "p/q" (q nonzero). Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical form "p" or "p/q" with q > 1 and gcd(|p|, q) = 1.
std::string rational_to_string(const Rational& value);

RationalVector to_rational(const IntVector& v);

} // namespace gkm

#endif

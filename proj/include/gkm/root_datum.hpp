#ifndef GKM_ROOT_DATUM_HPP
#define GKM_ROOT_DATUM_HPP

#include "gkm/rational.hpp"

#include <vector>

namespace gkm {

/**
 * Cartan data of a finite root system of classical type. Weights live in the
 * simple-root basis of t*, stored as RationalVector; roots are integer
 * vectors in the same basis. cartan(i, j) = alpha_j(alpha_i^vee), so for a
 * weight mu with root coordinates r the coroot pairings are (cartan * r).
 */
struct RootDatum {
  char type_letter = 'A';
  int rank = 0;
  IntMatrix cartan;
  IntVector symmetrizer;                 // d_i with diag(d) * cartan symmetric
  std::vector<IntVector> positive_roots; // simple roots first, then by height
  RationalMatrix inverse_cartan;
};

/**
 * Builds the root datum for types A (rank >= 1), B, C (rank >= 2) and
 * D (rank >= 3), up to rank_cap. Positive roots are enumerated by closing
 * the simple roots under simple reflections inside the positive cone.
 * Throws std::invalid_argument for unsupported type/rank.
 */
RootDatum build_root_datum(char type_letter, int rank, int rank_cap = 6);

/// mu(alpha_i^vee) for the i-th simple root, 0-based.
Rational simple_pairing(const RootDatum& datum, const RationalVector& mu, int i);

/// mu(gamma^vee) for an arbitrary root gamma given in root coordinates.
Rational coroot_pairing(const RootDatum& datum, const RationalVector& mu,
                        const IntVector& gamma);

/// gamma(a) for a root gamma, where a_vals(j) = alpha_j(a).
Rational root_pairing_a(const IntVector& gamma, const IntVector& a_vals);

/**
 * Evaluation mu(a) of a weight at the torus direction a, determined by the
 * pairings a_vals(j) = alpha_j(a): linear in mu, equals sum_j r_j a_vals(j)
 * for mu = sum_j r_j alpha_j.
 */
Rational pairing_a(const RationalVector& mu, const IntVector& a_vals);

/**
 * Reflection s_gamma(mu) = mu - mu(gamma^vee) gamma. gamma must be a
 * positive root of the datum; anything else is rejected.
 */
RationalVector reflect(const RootDatum& datum, const RationalVector& mu,
                       const IntVector& gamma);

/// Root coordinates of the i-th fundamental weight (column i of cartan^-1).
RationalVector fundamental_weight(const RootDatum& datum, int i);

/// Converts fundamental-weight coordinates to root coordinates.
RationalVector weight_from_fundamental(const RootDatum& datum, const IntVector& coeffs);

bool is_dominant(const RootDatum& datum, const RationalVector& mu);
bool is_positive_root(const RootDatum& datum, const IntVector& gamma);

} // namespace gkm

#endif

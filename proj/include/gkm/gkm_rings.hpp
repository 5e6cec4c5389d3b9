#ifndef GKM_GKM_RINGS_HPP
#define GKM_GKM_RINGS_HPP

#include "gkm/admissible.hpp"
#include "gkm/linalg.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

#include <vector>

namespace gkm {

/**
 * Graded basis of the torus-equivariant cohomology of X presented on the
 * moment graph: in cohomological degree 2d, the canonical basis of the space
 * of admissible degree-d tuples, stored both as coefficient vectors and as
 * per-vertex polynomials.
 */
struct GradedBasisHT {
  int rank = 0;
  Eigen::Index vertex_count = 0;
  int max_cohomological_degree = 0;
  std::vector<LinearSolutionSpace> coefficient_spaces;        // index d = degree/2
  std::vector<std::vector<std::vector<RationalPoly>>> tuples; // [d][basis][vertex]

  Eigen::Index dim(int cohomological_degree) const;
};

/**
 * Graded basis of the circle-equivariant cohomology of X. In cohomological
 * degree 2d an element is determined by one coefficient of nu^d per vertex;
 * the stored space is the canonical echelon span of the projections of the
 * degree-2d admissible tuples under alpha_j -> a_j nu.
 */
struct GradedBasisHS {
  Eigen::Index vertex_count = 0;
  int max_cohomological_degree = 0;
  std::vector<LinearSolutionSpace> degrees;  // subspaces of Q^vertex_count

  Eigen::Index dim(int cohomological_degree) const;
};

GradedBasisHT ht_basis(const MomentGraph& g, int max_cohomological_degree);

/**
 * Rejects a_vals that vanish on some edge label (the projection would not
 * see that edge's direction).
 */
GradedBasisHS hs_basis(const MomentGraph& g, const IntVector& a_vals,
                       int max_cohomological_degree);

/**
 * Degreewise surjectivity of the restriction map from tuples admissible on
 * the full graph to tuples admissible on the truncation at r0. This is the
 * extension property required of the moment level, certified up to the
 * stated degree bound only.
 */
struct Assumption3Report {
  Rational r0;
  int max_cohomological_degree = 0;
  std::vector<bool> degree_passed;  // index d = degree/2
  bool all_passed = false;
  std::string note;  // records the bounded-degree scope of the certificate
};

Assumption3Report check_assumption3(const MomentGraph& g, const Rational& r0,
                                    int max_cohomological_degree);

} // namespace gkm

#endif

#ifndef GKM_ADMISSIBLE_HPP
#define GKM_ADMISSIBLE_HPP

#include "gkm/linalg.hpp"
#include "gkm/moment_graph.hpp"

namespace gkm {

/**
 * The space of admissible degree-d tuples over the moment graph: one
 * homogeneous degree-d polynomial per vertex such that for every edge the
 * difference of the endpoint polynomials is divisible by the edge label.
 *
 * Coordinates are vertex-major: component v * monomial_count(rank, d) + m is
 * the coefficient of the m-th degree-d monomial (global graded-lex order) of
 * the polynomial at vertex v.
 */
LinearSolutionSpace admissible_space(const MomentGraph& g, int degree);

} // namespace gkm

#endif

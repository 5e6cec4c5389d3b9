#ifndef GKM_TESTS_ORACLES_HPP
#define GKM_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. They share
// no code path with the library routines they check: Bruhat order is decided
// by exhaustive subword search, ranks and kernels come from Eigen's
// FullPivLU, and divisibility constraints are assembled by eliminating a
// different variable.

#include "gkm/kirwan.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/weyl.hpp"

#include <vector>

namespace oracles {

/// u <= w iff some subword of the given reduced word of w represents u.
bool subword_bruhat_leq(const gkm::WeylGroup& group, const std::vector<int>& u_word,
                        const std::vector<int>& w_word);

/// Betti numbers of X(w) by counting representatives via subword search.
std::vector<int> poincare_by_subwords(const gkm::SchubertDatum& sd);

/// Exact rank via Eigen's FullPivLU.
Eigen::Index lu_rank(const gkm::RationalMatrix& m);

/// Admissibility constraints assembled with the *last* variable of each edge
/// label eliminated; dimension from FullPivLU.
Eigen::Index admissible_dim(const gkm::MomentGraph& g, int degree);

/// Full quotient Betti computation on top of FullPivLU kernels.
std::vector<int> quotient_betti(const gkm::MomentGraph& g, const gkm::IntVector& a_vals,
                                const gkm::Rational& r0, int max_cohomological_degree);

// Shared fixtures: the singular Schubert threefold X(s3 s1 s2) in Gr(2, C^4)
// and its ambient Grassmannian, with the standard circle direction.
gkm::RootDatum a3();
gkm::SchubertDatum gr2c4_schubert();
gkm::SchubertDatum gr2c4_full();
gkm::IntVector circle_direction();  // alpha_j(a) = (-2, -1, -4)

} // namespace oracles

#endif

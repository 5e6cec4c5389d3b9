#ifndef GKM_KIRWAN_HPP
#define GKM_KIRWAN_HPP

#include "gkm/gkm_rings.hpp"
#include "gkm/moment_graph.hpp"

#include <vector>

namespace gkm {

/**
 * The two halves of the Tolman-Weitsman kernel inside the circle-equivariant
 * cohomology, degree by degree: K_- consists of the classes vanishing at
 * every fixed point below the level r0, K_+ of those vanishing above it.
 */
struct KernelSpaces {
  std::vector<LinearSolutionSpace> k_minus;  // index d = cohomological degree / 2
  std::vector<LinearSolutionSpace> k_plus;
  std::vector<LinearSolutionSpace> k_sum;
};

KernelSpaces kernel_spaces(const GradedBasisHS& hs, const std::vector<Rational>& phi,
                           const Rational& r0);

/**
 * Everything the quotient-cohomology computation produces along the way.
 * betti[d] is the rank of the quotient in cohomological degree 2d:
 * dim H_S(2d) minus dim (K_- + K_+)(2d).
 */
struct QuotientComputation {
  MomentGraph graph;
  GradedBasisHS hs;
  KernelSpaces kernels;
  std::vector<int> betti;
};

/**
 * Validates the positioning of a (Assumption 1 clauses) and of r0 (the
 * regular-level clause), then computes kernels and Betti numbers up to the
 * degree bound. Throws AssumptionError naming the failed hypothesis. The
 * extension property of r0 and the singularity evidence are reported by the
 * callers that present results; they are not re-derived here.
 */
QuotientComputation compute_quotient(const SchubertDatum& sd, const IntVector& a_vals,
                                     const Rational& r0, int max_cohomological_degree);

std::vector<int> kirwan_betti(const SchubertDatum& sd, const IntVector& a_vals,
                              const Rational& r0, int max_cohomological_degree);

/**
 * Multiplicative presentation of the quotient cohomology. Basis cosets are
 * chosen canonically, preferring representatives with multiplicative
 * meaning: in degree 2d the candidates are the constant tuple (the image of
 * nu^d), then componentwise products of previously chosen cosets, then the
 * echelon basis vectors of H_S(2d); candidates dependent on the kernel plus
 * the cosets already chosen are skipped. Products of basis cosets are
 * expanded in the basis of their target degree; products landing beyond the
 * degree bound are marked unavailable rather than guessed.
 */
struct QuotientPresentation {
  int max_cohomological_degree = 0;
  std::vector<int> betti;
  std::vector<RationalMatrix> basis_cosets;  // [d]: betti[d] rows of vertex values

  struct Product {
    int left_degree = 0;   // cohomological
    int left_index = 0;
    int right_degree = 0;
    int right_index = 0;
    bool available = false;
    RationalVector expansion;  // coefficients over basis_cosets[target degree]
  };
  std::vector<Product> products;  // all unordered pairs, left <= right

  const Product* find_product(int left_degree, int left_index, int right_degree,
                              int right_index) const;
};

QuotientPresentation ring_presentation(const SchubertDatum& sd, const IntVector& a_vals,
                                       const Rational& r0, int max_cohomological_degree);

} // namespace gkm

#endif

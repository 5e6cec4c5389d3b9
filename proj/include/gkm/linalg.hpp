#ifndef GKM_LINALG_HPP
#define GKM_LINALG_HPP

#include "gkm/rational.hpp"

#include <optional>
#include <vector>

namespace gkm {

struct EchelonForm {
  RationalMatrix reduced;                   // reduced row echelon form
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;  // one per pivot row, increasing
};

/**
 * Reduced row echelon form over the rationals. The forward pass is a
 * fraction-free (Bareiss) elimination on denominator-cleared rows, so all
 * intermediate entries are integers; the back substitution then normalises
 * pivots to 1. The RREF of a matrix is unique, which makes every basis
 * produced from it canonical.
 */
EchelonForm reduced_row_echelon(RationalMatrix m);

/**
 * A linear subspace of Q^n, stored as the reduced row echelon basis of its
 * span. Two spaces are equal iff their stored bases are identical matrices.
 */
class LinearSolutionSpace {
 public:
  LinearSolutionSpace() = default;
  explicit LinearSolutionSpace(Eigen::Index ambient_dim);  // the zero space

  /// Span of the rows of `rows` inside Q^ambient_dim (rows may be dependent).
  static LinearSolutionSpace span_of_rows(Eigen::Index ambient_dim,
                                          const RationalMatrix& rows);

  Eigen::Index ambient_dimension() const { return ambient_; }
  Eigen::Index dimension() const { return basis_.rows(); }

  /// dimension() x ambient_dimension() matrix in reduced row echelon form.
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivot_columns() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  LinearSolutionSpace sum(const LinearSolutionSpace& other) const;

  friend bool operator==(const LinearSolutionSpace& a, const LinearSolutionSpace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Eigen::Index ambient_ = 0;
  RationalMatrix basis_{0, 0};
  std::vector<Eigen::Index> pivots_;
};

struct RankNullspace {
  Eigen::Index rank = 0;
  LinearSolutionSpace nullspace;
};

/// Exact rank of m together with the canonical basis of {x : m x = 0}.
RankNullspace rank_and_nullspace(const RationalMatrix& m);

/**
 * One solution of A x = b with all free variables set to zero, or nullopt
 * if the system is inconsistent.
 */
std::optional<RationalVector> solve_linear(const RationalMatrix& a,
                                           const RationalVector& b);

/**
 * Whether `point` is a convex combination of the rows of `hull_points`,
 * decided exactly by a phase-one simplex (Bland's rule, so it terminates).
 * An empty candidate set yields false.
 */
bool in_convex_hull(const RationalVector& point, const RationalMatrix& hull_points);

} // namespace gkm

#endif

#include "gkm/admissible.hpp"

#include "gkm/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace gkm {

LinearSolutionSpace admissible_space(const MomentGraph& g, int degree) {
  if (degree < 0) throw std::invalid_argument("admissible_space: degree must be >= 0");
  const int rank = g.rank;
  const Eigen::Index vertex_count = static_cast<Eigen::Index>(g.vertices.size());
  const auto monomials = monomial_exponents(rank, degree);
  const Eigen::Index m = static_cast<Eigen::Index>(monomials.size());
  const Eigen::Index ambient = vertex_count * m;
  if (vertex_count == 0) return LinearSolutionSpace(0);

  // Divisibility of p_u - p_v by the label gamma is linear in the
  // coefficients: substitute the hyperplane gamma = 0 into each monomial and
  // require the remainder to vanish coefficient by coefficient.
  RationalMatrix constraints(0, ambient);
  Eigen::Index row = 0;
  for (const MomentGraphEdge& edge : g.edges) {
    int k = -1;
    for (int i = 0; i < rank; ++i)
      if (edge.label(i) != 0) { k = i; break; }
    if (k < 0) throw std::invalid_argument("admissible_space: zero edge label");

    RationalVector repl = RationalVector::Zero(rank);
    for (int i = 0; i < rank; ++i)
      if (i != k) repl(i) = Rational(-edge.label(i)) / edge.label(k);
    const RationalPoly replacement = RationalPoly::linear_form(repl);

    // Index the monomials of the substituted space (x_k eliminated).
    std::map<std::vector<int>, Eigen::Index> target_index;
    for (const auto& e : monomial_exponents(rank, degree)) {
      if (e[static_cast<std::size_t>(k)] != 0) continue;
      target_index.emplace(e, static_cast<Eigen::Index>(target_index.size()));
    }

    constraints.conservativeResize(row + static_cast<Eigen::Index>(target_index.size()),
                                   ambient);
    constraints.bottomRows(static_cast<Eigen::Index>(target_index.size())).setZero();

    for (Eigen::Index mi = 0; mi < m; ++mi) {
      const RationalPoly substituted =
          RationalPoly::monomial(monomials[static_cast<std::size_t>(mi)], 1)
              .substitute(k, replacement);
      for (const auto& [exps, coeff] : substituted.terms()) {
        const Eigen::Index t = target_index.at(exps);
        constraints(row + t, edge.u * m + mi) += coeff;
        constraints(row + t, edge.v * m + mi) -= coeff;
      }
    }
    row += static_cast<Eigen::Index>(target_index.size());
  }

  return rank_and_nullspace(constraints).nullspace;
}

} // namespace gkm

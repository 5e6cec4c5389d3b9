#include "gkm/gkm_rings.hpp"

#include <stdexcept>
#include <string>

namespace gkm {

namespace {

int degree_slots(int max_cohomological_degree) {
  if (max_cohomological_degree < 0)
    throw std::invalid_argument("degree bound must be >= 0");
  return max_cohomological_degree / 2 + 1;
}

} // namespace

Eigen::Index GradedBasisHT::dim(int cohomological_degree) const {
  if (cohomological_degree % 2 != 0) return 0;
  const int d = cohomological_degree / 2;
  if (d < 0 || d >= static_cast<int>(coefficient_spaces.size()))
    throw std::out_of_range("degree beyond the computed bound");
  return coefficient_spaces[static_cast<std::size_t>(d)].dimension();
}

Eigen::Index GradedBasisHS::dim(int cohomological_degree) const {
  if (cohomological_degree % 2 != 0) return 0;
  const int d = cohomological_degree / 2;
  if (d < 0 || d >= static_cast<int>(degrees.size()))
    throw std::out_of_range("degree beyond the computed bound");
  return degrees[static_cast<std::size_t>(d)].dimension();
}

GradedBasisHT ht_basis(const MomentGraph& g, int max_cohomological_degree) {
  GradedBasisHT basis;
  basis.rank = g.rank;
  basis.vertex_count = static_cast<Eigen::Index>(g.vertices.size());
  basis.max_cohomological_degree = max_cohomological_degree;

  for (int d = 0; d < degree_slots(max_cohomological_degree); ++d) {
    LinearSolutionSpace space = admissible_space(g, d);
    const auto monomials = monomial_exponents(g.rank, d);
    const Eigen::Index m = static_cast<Eigen::Index>(monomials.size());

    std::vector<std::vector<RationalPoly>> tuples;
    for (Eigen::Index b = 0; b < space.dimension(); ++b) {
      std::vector<RationalPoly> tuple;
      for (Eigen::Index v = 0; v < basis.vertex_count; ++v) {
        RationalPoly p(g.rank);
        for (Eigen::Index mi = 0; mi < m; ++mi) {
          const Rational c = space.basis()(b, v * m + mi);
          if (c != 0)
            p += RationalPoly::monomial(monomials[static_cast<std::size_t>(mi)], c);
        }
        tuple.push_back(std::move(p));
      }
      tuples.push_back(std::move(tuple));
    }
    basis.coefficient_spaces.push_back(std::move(space));
    basis.tuples.push_back(std::move(tuples));
  }
  return basis;
}

GradedBasisHS hs_basis(const MomentGraph& g, const IntVector& a_vals,
                       int max_cohomological_degree) {
  if (a_vals.size() != g.rank)
    throw std::invalid_argument("hs_basis: a_vals has wrong length");
  for (const MomentGraphEdge& e : g.edges)
    if (root_pairing_a(e.label, a_vals) == 0)
      throw std::invalid_argument("hs_basis: a is not regular, edge label " +
                                  root_to_string(e.label) + " pairs to zero with a");

  GradedBasisHS basis;
  basis.vertex_count = static_cast<Eigen::Index>(g.vertices.size());
  basis.max_cohomological_degree = max_cohomological_degree;
  const RationalVector point = to_rational(a_vals);

  for (int d = 0; d < degree_slots(max_cohomological_degree); ++d) {
    const LinearSolutionSpace space = admissible_space(g, d);
    const auto monomials = monomial_exponents(g.rank, d);
    const Eigen::Index m = static_cast<Eigen::Index>(monomials.size());

    // Substituting alpha_j -> a_j nu sends a degree-d monomial to
    // (monomial value at a) nu^d; per vertex this leaves one coefficient.
    RationalVector monomial_values(m);
    for (Eigen::Index mi = 0; mi < m; ++mi)
      monomial_values(mi) =
          RationalPoly::monomial(monomials[static_cast<std::size_t>(mi)], 1).evaluate(point);

    RationalMatrix projected(space.dimension(), basis.vertex_count);
    for (Eigen::Index b = 0; b < space.dimension(); ++b)
      for (Eigen::Index v = 0; v < basis.vertex_count; ++v) {
        Rational s = 0;
        for (Eigen::Index mi = 0; mi < m; ++mi)
          s += space.basis()(b, v * m + mi) * monomial_values(mi);
        projected(b, v) = s;
      }
    basis.degrees.push_back(
        LinearSolutionSpace::span_of_rows(basis.vertex_count, projected));
  }
  return basis;
}

Assumption3Report check_assumption3(const MomentGraph& g, const Rational& r0,
                                    int max_cohomological_degree) {
  Assumption3Report report;
  report.r0 = r0;
  report.max_cohomological_degree = max_cohomological_degree;

  const MomentGraph truncated = truncate_graph(g, r0);
  std::vector<Eigen::Index> kept;  // old index of each truncated vertex, in order
  {
    std::size_t next = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (next < truncated.vertices.size() &&
          g.vertices[i].rep_word == truncated.vertices[next].rep_word) {
        kept.push_back(static_cast<Eigen::Index>(i));
        ++next;
      }
    }
  }

  report.all_passed = true;
  for (int d = 0; d < degree_slots(max_cohomological_degree); ++d) {
    const LinearSolutionSpace full = admissible_space(g, d);
    const LinearSolutionSpace target = admissible_space(truncated, d);
    const Eigen::Index m = monomial_count(g.rank, d);

    RationalMatrix restricted(full.dimension(),
                              static_cast<Eigen::Index>(kept.size()) * m);
    for (Eigen::Index b = 0; b < full.dimension(); ++b)
      for (std::size_t v = 0; v < kept.size(); ++v)
        restricted.block(b, static_cast<Eigen::Index>(v) * m, 1, m) =
            full.basis().block(b, kept[v] * m, 1, m);

    const Eigen::Index image_rank =
        LinearSolutionSpace::span_of_rows(restricted.cols(), restricted).dimension();
    const bool passed = image_rank == target.dimension();
    report.degree_passed.push_back(passed);
    if (!passed) report.all_passed = false;
  }
  report.note = "extension property certified for cohomological degrees <= " +
                std::to_string(max_cohomological_degree) + " only";
  return report;
}

} // namespace gkm

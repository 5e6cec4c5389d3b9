#include "gkm/kirwan.hpp"

#include "gkm/errors.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

namespace {

// Vectors of the space whose coordinates at `where` all vanish.
LinearSolutionSpace vanishing_subspace(const LinearSolutionSpace& space,
                                       const std::vector<Eigen::Index>& where) {
  if (where.empty()) return space;
  const Eigen::Index dim = space.dimension();
  RationalMatrix restricted(dim, static_cast<Eigen::Index>(where.size()));
  for (Eigen::Index b = 0; b < dim; ++b)
    for (std::size_t j = 0; j < where.size(); ++j)
      restricted(b, static_cast<Eigen::Index>(j)) = space.basis()(b, where[j]);

  // Combinations x with x^T restricted = 0, i.e. the nullspace of its transpose.
  const LinearSolutionSpace combos =
      rank_and_nullspace(RationalMatrix(restricted.transpose())).nullspace;
  RationalMatrix vectors = combos.basis() * space.basis();
  return LinearSolutionSpace::span_of_rows(space.ambient_dimension(), vectors);
}

} // namespace

KernelSpaces kernel_spaces(const GradedBasisHS& hs, const std::vector<Rational>& phi,
                           const Rational& r0) {
  if (static_cast<Eigen::Index>(phi.size()) != hs.vertex_count)
    throw std::invalid_argument("kernel_spaces: one Phi_a value per vertex required");
  std::vector<Eigen::Index> below, above;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[v] < r0) below.push_back(static_cast<Eigen::Index>(v));
    if (phi[v] > r0) above.push_back(static_cast<Eigen::Index>(v));
  }

  KernelSpaces out;
  for (const LinearSolutionSpace& space : hs.degrees) {
    out.k_minus.push_back(vanishing_subspace(space, below));
    out.k_plus.push_back(vanishing_subspace(space, above));
    out.k_sum.push_back(out.k_minus.back().sum(out.k_plus.back()));
  }
  return out;
}

QuotientComputation compute_quotient(const SchubertDatum& sd, const IntVector& a_vals,
                                     const Rational& r0, int max_cohomological_degree) {
  const Assumption1Report a1 = validate_assumption1(sd, a_vals);
  if (!a1.passed()) {
    std::string detail;
    for (const std::string& f : a1.failures) detail += (detail.empty() ? "" : "; ") + f;
    throw AssumptionError("Assumption 1", detail);
  }

  QuotientComputation q;
  q.graph = moment_graph(sd, a_vals);
  const R0Report r0_report = validate_r0(q.graph, r0);
  if (!r0_report.passed) throw AssumptionError("Assumption 3(i)", r0_report.message);

  q.hs = hs_basis(q.graph, a_vals, max_cohomological_degree);
  std::vector<Rational> phi;
  for (const MomentGraphVertex& v : q.graph.vertices) phi.push_back(v.phi);
  q.kernels = kernel_spaces(q.hs, phi, r0);

  for (std::size_t d = 0; d < q.hs.degrees.size(); ++d)
    q.betti.push_back(static_cast<int>(q.hs.degrees[d].dimension() -
                                       q.kernels.k_sum[d].dimension()));
  return q;
}

std::vector<int> kirwan_betti(const SchubertDatum& sd, const IntVector& a_vals,
                              const Rational& r0, int max_cohomological_degree) {
  return compute_quotient(sd, a_vals, r0, max_cohomological_degree).betti;
}

const QuotientPresentation::Product* QuotientPresentation::find_product(
    int left_degree, int left_index, int right_degree, int right_index) const {
  if (std::pair(left_degree, left_index) > std::pair(right_degree, right_index)) {
    std::swap(left_degree, right_degree);
    std::swap(left_index, right_index);
  }
  for (const Product& p : products)
    if (p.left_degree == left_degree && p.left_index == left_index &&
        p.right_degree == right_degree && p.right_index == right_index)
      return &p;
  return nullptr;
}

QuotientPresentation ring_presentation(const SchubertDatum& sd, const IntVector& a_vals,
                                       const Rational& r0,
                                       int max_cohomological_degree) {
  const QuotientComputation q =
      compute_quotient(sd, a_vals, r0, max_cohomological_degree);
  const Eigen::Index n = q.hs.vertex_count;

  QuotientPresentation out;
  out.max_cohomological_degree = max_cohomological_degree;
  out.betti = q.betti;

  // Pick coset representatives degree by degree.
  for (std::size_t d = 0; d < q.hs.degrees.size(); ++d) {
    const LinearSolutionSpace& space = q.hs.degrees[d];
    LinearSolutionSpace spanned = q.kernels.k_sum[d];

    std::vector<RationalVector> candidates;
    candidates.push_back(RationalVector::Constant(n, 1));  // the image of nu^d
    for (std::size_t p = 1; 2 * p <= d; ++p) {
      const std::size_t r = d - p;
      for (Eigen::Index i = 0; i < out.basis_cosets[p].rows(); ++i)
        for (Eigen::Index j = 0; j < out.basis_cosets[r].rows(); ++j)
          candidates.push_back(out.basis_cosets[p]
                                   .row(i)
                                   .cwiseProduct(out.basis_cosets[r].row(j))
                                   .transpose());
    }
    for (Eigen::Index b = 0; b < space.dimension(); ++b)
      candidates.push_back(space.basis().row(b).transpose());

    RationalMatrix chosen(0, n);
    for (const RationalVector& c : candidates) {
      if (chosen.rows() == q.betti[d]) break;
      if (!space.contains(c)) continue;  // products stay in H_S; nu^d does too
      const LinearSolutionSpace extended =
          spanned.sum(LinearSolutionSpace::span_of_rows(n, c.transpose()));
      if (extended.dimension() == spanned.dimension()) continue;
      spanned = extended;
      chosen.conservativeResize(chosen.rows() + 1, n);
      chosen.row(chosen.rows() - 1) = c.transpose();
    }
    if (chosen.rows() != q.betti[d])
      throw InternalCheckError("ring_presentation: coset selection did not reach the "
                               "quotient dimension");
    out.basis_cosets.push_back(std::move(chosen));
  }

  // Structure constants: expand every pairwise product over the basis cosets
  // of the target degree, modulo the kernel.
  const int slots = static_cast<int>(q.hs.degrees.size());
  for (int dl = 0; dl < slots; ++dl)
    for (Eigen::Index il = 0; il < out.basis_cosets[static_cast<std::size_t>(dl)].rows();
         ++il)
      for (int dr = dl; dr < slots; ++dr)
        for (Eigen::Index ir = (dr == dl) ? il : 0;
             ir < out.basis_cosets[static_cast<std::size_t>(dr)].rows(); ++ir) {
          QuotientPresentation::Product product;
          product.left_degree = 2 * dl;
          product.left_index = static_cast<int>(il);
          product.right_degree = 2 * dr;
          product.right_index = static_cast<int>(ir);
          const int dt = dl + dr;
          if (2 * dt > max_cohomological_degree) {
            product.available = false;
            out.products.push_back(std::move(product));
            continue;
          }
          const RationalVector value =
              out.basis_cosets[static_cast<std::size_t>(dl)]
                  .row(il)
                  .cwiseProduct(out.basis_cosets[static_cast<std::size_t>(dr)].row(ir))
                  .transpose();

          const RationalMatrix& cosets = out.basis_cosets[static_cast<std::size_t>(dt)];
          const LinearSolutionSpace& kernel = q.kernels.k_sum[static_cast<std::size_t>(dt)];
          RationalMatrix columns(n, cosets.rows() + kernel.dimension());
          columns.leftCols(cosets.rows()) = cosets.transpose();
          columns.rightCols(kernel.dimension()) = kernel.basis().transpose();
          const auto solution = solve_linear(columns, value);
          if (!solution)
            throw InternalCheckError(
                "ring_presentation: a product of classes left the computed ring");
          product.available = true;
          product.expansion = solution->head(cosets.rows());
          out.products.push_back(std::move(product));
        }
  return out;
}

} // namespace gkm

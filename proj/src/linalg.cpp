#include "gkm/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace gkm {

namespace {

// Scale each row by the lcm of its denominators; leaves rank, nullspace and
// row span unchanged.
void clear_denominators(RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = lcm(l, denominator(m(i, j)));
    if (l != 1)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= l;
  }
}

} // namespace

EchelonForm reduced_row_echelon(RationalMatrix m) {
  EchelonForm out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  clear_denominators(m);

  // Forward pass, fraction-free: after step k every entry is an integer
  // (a minor of the original integer matrix), and the division by the
  // previous pivot is exact.
  Rational prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;

  // Back substitution to the unique RREF.
  for (Eigen::Index k = out.rank - 1; k >= 0; --k) {
    const Eigen::Index pc = out.pivot_columns[static_cast<std::size_t>(k)];
    const Rational p = m(k, pc);
    for (Eigen::Index j = pc; j < cols; ++j) m(k, j) /= p;
    for (Eigen::Index i = 0; i < k; ++i) {
      const Rational f = m(i, pc);
      if (f == 0) continue;
      for (Eigen::Index j = pc; j < cols; ++j) m(i, j) -= f * m(k, j);
    }
  }
  out.reduced = std::move(m);
  return out;
}

LinearSolutionSpace::LinearSolutionSpace(Eigen::Index ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

LinearSolutionSpace LinearSolutionSpace::span_of_rows(Eigen::Index ambient_dim,
                                                      const RationalMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("span_of_rows: row length does not match ambient dimension");
  LinearSolutionSpace s(ambient_dim);
  if (rows.rows() == 0) return s;
  EchelonForm e = reduced_row_echelon(rows);
  s.basis_ = e.reduced.topRows(e.rank);
  s.pivots_ = std::move(e.pivot_columns);
  return s;
}

bool LinearSolutionSpace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) return false;
  RationalVector w = v;
  for (Eigen::Index k = 0; k < basis_.rows(); ++k) {
    const Rational f = w(pivots_[static_cast<std::size_t>(k)]);
    if (f != 0) w -= f * basis_.row(k).transpose();
  }
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (w(j) != 0) return false;
  return true;
}

LinearSolutionSpace LinearSolutionSpace::sum(const LinearSolutionSpace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("sum: ambient dimensions differ");
  RationalMatrix stacked(basis_.rows() + other.basis_.rows(), ambient_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.bottomRows(other.basis_.rows()) = other.basis_;
  return span_of_rows(ambient_, stacked);
}

RankNullspace rank_and_nullspace(const RationalMatrix& m) {
  RankNullspace out;
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) {
    out.rank = 0;
    RationalMatrix id = RationalMatrix::Identity(cols, cols);
    out.nullspace = LinearSolutionSpace::span_of_rows(cols, id);
    return out;
  }
  EchelonForm e = reduced_row_echelon(m);
  out.rank = e.rank;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : e.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  RationalMatrix basis(cols - e.rank, cols);
  basis.setZero();
  Eigen::Index row = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(row, f) = 1;
    for (Eigen::Index k = 0; k < e.rank; ++k)
      basis(row, e.pivot_columns[static_cast<std::size_t>(k)]) = -e.reduced(k, f);
    ++row;
  }
  out.nullspace = LinearSolutionSpace::span_of_rows(cols, basis);
  return out;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a,
                                           const RationalVector& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_linear: shape mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  EchelonForm e = reduced_row_echelon(std::move(aug));
  for (Eigen::Index c : e.pivot_columns)
    if (c == a.cols()) return std::nullopt;  // 0 = 1 row: inconsistent
  RationalVector x = RationalVector::Zero(a.cols());
  for (Eigen::Index k = 0; k < e.rank; ++k)
    x(e.pivot_columns[static_cast<std::size_t>(k)]) = e.reduced(k, a.cols());
  return x;
}

bool in_convex_hull(const RationalVector& point, const RationalMatrix& hull_points) {
  const Eigen::Index k = hull_points.rows();
  if (k == 0) return false;
  const Eigen::Index n = point.size();
  if (hull_points.cols() != n)
    throw std::invalid_argument("in_convex_hull: dimension mismatch");

  // Feasibility of { mu >= 0, sum mu = 1, sum mu_i p_i = point } via a
  // phase-one simplex tableau [A | artificials | rhs].
  const Eigen::Index m = n + 1;
  RationalMatrix tab(m, k + m + 1);
  tab.setZero();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) tab(i, j) = hull_points(j, i);
    tab(i, k + m) = point(i);
  }
  for (Eigen::Index j = 0; j < k; ++j) tab(n, j) = 1;
  tab(n, k + m) = 1;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab(i, k + m) < 0) tab.row(i) = -tab.row(i);
    tab(i, k + i) = 1;
  }

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = k + i;

  // Reduced costs for minimising the sum of artificials.
  RationalVector cost = RationalVector::Zero(k + m);
  for (Eigen::Index j = 0; j < k + m; ++j) {
    Rational s = (j >= k) ? 1 : 0;
    for (Eigen::Index i = 0; i < m; ++i) s -= tab(i, j);  // basic costs are all 1
    cost(j) = s;
  }

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + m; ++j)
      if (cost(j) < 0) { enter = j; break; }  // Bland: smallest index
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab(i, enter) <= 0) continue;
      const Rational ratio = tab(i, k + m) / tab(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] <
                                basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // cannot happen: the objective is bounded below

    const Rational p = tab(leave, enter);
    tab.row(leave) /= p;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || tab(i, enter) == 0) continue;
      tab.row(i) -= tab(i, enter) * tab.row(leave);
    }
    const Rational c = cost(enter);
    for (Eigen::Index j = 0; j < k + m; ++j) cost(j) -= c * tab(leave, j);
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  Rational objective = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] >= k) objective += tab(i, k + m);
  return objective == 0;
}

} // namespace gkm

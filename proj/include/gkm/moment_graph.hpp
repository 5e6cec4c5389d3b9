#ifndef GKM_MOMENT_GRAPH_HPP
#define GKM_MOMENT_GRAPH_HPP

#include "gkm/rational.hpp"
#include "gkm/root_datum.hpp"
#include "gkm/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gkm {

/**
 * A Schubert variety X(w) inside the coadjoint orbit of a dominant weight
 * lambda, described combinatorially: the parabolic is cut out by the
 * positive roots pairing to zero with lambda, and w is stored as the
 * minimal-length representative of its coset (the input word is
 * canonicalised at construction).
 */
struct SchubertDatum {
  RootDatum datum;
  std::shared_ptr<const WeylGroup> group;
  RationalVector lambda;               // root coordinates, dominant, nonzero
  WeylElement w;                       // minimal coset representative
  std::vector<IntVector> parabolic;    // {alpha in R+ : lambda(alpha^vee) = 0}
};

SchubertDatum make_schubert_datum(const RootDatum& datum, const RationalVector& lambda,
                                  const std::vector<int>& w_word,
                                  std::size_t order_cap = 40320);

/// The positive roots gamma with lambda(gamma^vee) = 0. Rejects lambda = 0.
std::vector<IntVector> parabolic_roots(const RootDatum& datum,
                                       const RationalVector& lambda);

struct MomentGraphVertex {
  std::vector<int> rep_word;  // minimal coset representative, 0-based letters
  RationalVector weight;
  Rational phi;               // Phi_a value
};

struct MomentGraphEdge {
  Eigen::Index u = 0;
  Eigen::Index v = 0;   // u < v
  IntVector label;      // the positive root joining the two weights
};

/**
 * The moment graph: one vertex per fixed point of X, an edge between two
 * vertices whenever a reflection in a positive root exchanges their weights,
 * labeled with that root. Vertices are ordered by (length, lex word) and
 * edges by (u, v); each unordered pair is stored once.
 */
struct MomentGraph {
  int rank = 0;
  std::vector<MomentGraphVertex> vertices;
  std::vector<MomentGraphEdge> edges;
};

/// Fixed points of X(w): the orbit points whose representative is <= w.
std::vector<OrbitPoint> fixed_points(const SchubertDatum& sd);

MomentGraph moment_graph(const SchubertDatum& sd, const IntVector& a_vals);

/// Induced subgraph on the vertices with phi >= r0.
MomentGraph truncate_graph(const MomentGraph& g, const Rational& r0);

/**
 * Operational test of the positioning assumption on the circle direction a:
 * (1) gamma(a) != 0 for every positive root, (2) Phi_a is injective on the
 * whole orbit W.lambda, (3) Phi_a is strictly increasing along Bruhat order
 * on the fixed points of X, so lambda is the global minimum and w.lambda the
 * global maximum. Each failed clause is reported.
 */
struct Assumption1Report {
  bool regularity = false;
  bool injectivity = false;
  bool bruhat_monotone = false;
  std::vector<std::string> failures;
  bool passed() const { return regularity && injectivity && bruhat_monotone; }
};

Assumption1Report validate_assumption1(const SchubertDatum& sd, const IntVector& a_vals);

/**
 * The level r0 must lie strictly between the extreme vertex values and avoid
 * every critical value Phi_a(v.lambda).
 */
struct R0Report {
  bool passed = false;
  std::string message;
};

R0Report validate_r0(const MomentGraph& g, const Rational& r0);

/// Coefficients [b_0, b_2, b_4, ...]: cells of X counted by length.
std::vector<int> poincare_polynomial(const SchubertDatum& sd);

bool is_palindromic(const std::vector<int>& coefficients);

/**
 * Indices of vertices whose valency differs from the complex dimension of X.
 * At a smooth fixed point the two agree, so the flagged vertices are the
 * candidate singular points. The heuristic is necessary evidence only: it
 * cannot prove smoothness, and in non-simply-laced types agreement may
 * reflect rational smoothness rather than smoothness.
 */
std::vector<Eigen::Index> valency_report(const MomentGraph& g, int complex_dim);

/**
 * Vertices whose weight is an extreme point of the convex hull of all vertex
 * weights, decided by exact rational linear feasibility.
 */
std::vector<Eigen::Index> polytope_vertices(const MomentGraph& g);

/**
 * Graphviz text. Node ids are hyphen-joined 1-based reduced words ("e" for
 * the identity) with a `phi` attribute; edge labels render the root in
 * simple-root coordinates, e.g. "a1+a2+a3".
 */
std::string to_dot(const MomentGraph& g);

/// "a1+2a2" style rendering of a root's simple-root coordinates.
std::string root_to_string(const IntVector& root);

/// "3-1-2" style rendering of a word, "e" when empty.
std::string word_to_string(const std::vector<int>& word);

} // namespace gkm

#endif

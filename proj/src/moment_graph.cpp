#include "gkm/moment_graph.hpp"

#include "gkm/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gkm {

namespace {

std::vector<Rational> weight_key(const RationalVector& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

} // namespace

std::vector<IntVector> parabolic_roots(const RootDatum& datum,
                                       const RationalVector& lambda) {
  if (lambda.isZero())
    throw std::invalid_argument("parabolic_roots: lambda must be nonzero");
  if (!is_dominant(datum, lambda))
    throw std::invalid_argument("parabolic_roots: lambda must be dominant");
  std::vector<IntVector> out;
  for (const IntVector& gamma : datum.positive_roots)
    if (coroot_pairing(datum, lambda, gamma) == 0) out.push_back(gamma);
  return out;
}

SchubertDatum make_schubert_datum(const RootDatum& datum, const RationalVector& lambda,
                                  const std::vector<int>& w_word,
                                  std::size_t order_cap) {
  SchubertDatum sd;
  sd.datum = datum;
  sd.lambda = lambda;
  sd.parabolic = parabolic_roots(datum, lambda);
  sd.group = std::make_shared<WeylGroup>(datum, order_cap);

  // Canonicalise w: X(w) only depends on w.lambda, so replace the input word
  // by the minimal coset representative reaching that orbit point.
  const RationalVector target = apply_word(datum, w_word, lambda);
  for (const OrbitPoint& p : weyl_orbit(datum, lambda, order_cap)) {
    if (p.weight == target) {
      sd.w = p.rep;
      return sd;
    }
  }
  throw std::logic_error("make_schubert_datum: orbit point not found");
}

std::vector<OrbitPoint> fixed_points(const SchubertDatum& sd) {
  const std::size_t w_index = sd.group->index_of_word(sd.w.word);
  std::vector<OrbitPoint> out;
  for (const OrbitPoint& p : weyl_orbit(sd.datum, sd.lambda)) {
    const std::size_t v_index = sd.group->index_of_word(p.rep.word);
    if (sd.group->bruhat_leq(v_index, w_index)) out.push_back(p);
  }
  return out;
}

MomentGraph moment_graph(const SchubertDatum& sd, const IntVector& a_vals) {
  if (a_vals.size() != sd.datum.rank)
    throw std::invalid_argument("moment_graph: a_vals has wrong length");

  MomentGraph g;
  g.rank = sd.datum.rank;
  std::map<std::vector<Rational>, Eigen::Index> vertex_index;
  for (const OrbitPoint& p : fixed_points(sd)) {
    vertex_index.emplace(weight_key(p.weight), g.vertices.size());
    g.vertices.push_back({p.rep.word, p.weight, pairing_a(p.weight, a_vals)});
  }

  std::set<std::pair<Eigen::Index, Eigen::Index>> seen;
  for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(g.vertices.size()); ++u) {
    for (const IntVector& gamma : sd.datum.positive_roots) {
      if (coroot_pairing(sd.datum, g.vertices[u].weight, gamma) == 0) continue;
      const RationalVector image = reflect(sd.datum, g.vertices[u].weight, gamma);
      const auto it = vertex_index.find(weight_key(image));
      if (it == vertex_index.end()) continue;
      const Eigen::Index v = it->second;
      const auto pair = std::minmax(u, v);
      if (seen.emplace(pair.first, pair.second).second)
        g.edges.push_back({pair.first, pair.second, gamma});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const MomentGraphEdge& a, const MomentGraphEdge& b) {
              if (a.u != b.u) return a.u < b.u;
              return a.v < b.v;
            });
  return g;
}

MomentGraph truncate_graph(const MomentGraph& g, const Rational& r0) {
  MomentGraph out;
  out.rank = g.rank;
  std::vector<Eigen::Index> new_index(g.vertices.size(), -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (g.vertices[i].phi >= r0) {
      new_index[i] = static_cast<Eigen::Index>(out.vertices.size());
      out.vertices.push_back(g.vertices[i]);
    }
  }
  for (const MomentGraphEdge& e : g.edges) {
    const Eigen::Index u = new_index[static_cast<std::size_t>(e.u)];
    const Eigen::Index v = new_index[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) out.edges.push_back({u, v, e.label});
  }
  return out;
}

Assumption1Report validate_assumption1(const SchubertDatum& sd, const IntVector& a_vals) {
  Assumption1Report report;

  report.regularity = true;
  for (const IntVector& gamma : sd.datum.positive_roots) {
    if (root_pairing_a(gamma, a_vals) == 0) {
      report.regularity = false;
      report.failures.push_back("regularity: root " + root_to_string(gamma) +
                                " pairs to zero with a");
    }
  }

  const std::vector<OrbitPoint> orbit = weyl_orbit(sd.datum, sd.lambda);
  report.injectivity = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j)
      if (pairing_a(orbit[i].weight, a_vals) == pairing_a(orbit[j].weight, a_vals)) {
        report.injectivity = false;
        report.failures.push_back("injectivity: Phi_a(" +
                                  word_to_string(orbit[i].rep.word) + ".lambda) = Phi_a(" +
                                  word_to_string(orbit[j].rep.word) + ".lambda)");
      }

  // Strict monotonicity along Bruhat order forces lambda to be the global
  // minimum and w.lambda the global maximum of Phi_a on the fixed points.
  const std::vector<OrbitPoint> fixed = fixed_points(sd);
  report.bruhat_monotone = true;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const std::size_t vi = sd.group->index_of_word(fixed[i].rep.word);
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      if (i == j) continue;
      const std::size_t vj = sd.group->index_of_word(fixed[j].rep.word);
      if (sd.group->bruhat_leq(vi, vj) && vi != vj &&
          !(pairing_a(fixed[i].weight, a_vals) < pairing_a(fixed[j].weight, a_vals))) {
        report.bruhat_monotone = false;
        report.failures.push_back("monotonicity: " + word_to_string(fixed[i].rep.word) +
                                  " < " + word_to_string(fixed[j].rep.word) +
                                  " but Phi_a does not increase");
      }
    }
  }
  return report;
}

R0Report validate_r0(const MomentGraph& g, const Rational& r0) {
  R0Report report;
  if (g.vertices.empty()) {
    report.message = "graph has no vertices";
    return report;
  }
  Rational min = g.vertices.front().phi, max = g.vertices.front().phi;
  for (const MomentGraphVertex& v : g.vertices) {
    min = std::min(min, v.phi);
    max = std::max(max, v.phi);
    if (v.phi == r0) {
      report.message = "r0 equals the critical value Phi_a(" +
                       word_to_string(v.rep_word) + ".lambda) = " + rational_to_string(r0);
      return report;
    }
  }
  if (r0 < min || r0 > max) {
    report.message = "r0 = " + rational_to_string(r0) + " lies outside Phi_a(X) = [" +
                     rational_to_string(min) + ", " + rational_to_string(max) + "]";
    return report;
  }
  report.passed = true;
  report.message = "r0 is a regular moment level in the interior of Phi_a(X)";
  return report;
}

std::vector<int> poincare_polynomial(const SchubertDatum& sd) {
  std::vector<int> coefficients;
  for (const OrbitPoint& p : fixed_points(sd)) {
    const std::size_t len = p.rep.word.size();
    if (coefficients.size() <= len) coefficients.resize(len + 1, 0);
    ++coefficients[len];
  }
  return coefficients;
}

bool is_palindromic(const std::vector<int>& coefficients) {
  std::vector<int> reversed(coefficients.rbegin(), coefficients.rend());
  return reversed == coefficients;
}

std::vector<Eigen::Index> valency_report(const MomentGraph& g, int complex_dim) {
  std::vector<int> valency(g.vertices.size(), 0);
  for (const MomentGraphEdge& e : g.edges) {
    ++valency[static_cast<std::size_t>(e.u)];
    ++valency[static_cast<std::size_t>(e.v)];
  }
  std::vector<Eigen::Index> flagged;
  for (std::size_t i = 0; i < valency.size(); ++i)
    if (valency[i] != complex_dim) flagged.push_back(static_cast<Eigen::Index>(i));
  return flagged;
}

std::vector<Eigen::Index> polytope_vertices(const MomentGraph& g) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.vertices.size());
  std::vector<Eigen::Index> extreme;
  for (Eigen::Index i = 0; i < n; ++i) {
    RationalMatrix others(n - 1, g.rank);
    Eigen::Index row = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      others.row(row++) = g.vertices[static_cast<std::size_t>(j)].weight.transpose();
    }
    if (!in_convex_hull(g.vertices[static_cast<std::size_t>(i)].weight, others))
      extreme.push_back(i);
  }
  return extreme;
}

std::string root_to_string(const IntVector& root) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < root.size(); ++i) {
    if (root(i) == 0) continue;
    if (!first) os << (root(i) > 0 ? "+" : "");
    first = false;
    if (root(i) == -1)
      os << "-";
    else if (root(i) != 1)
      os << root(i);
    os << "a" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << "-";
    os << word[i] + 1;
  }
  return os.str();
}

std::string to_dot(const MomentGraph& g) {
  std::ostringstream os;
  os << "graph moment_graph {\n";
  for (const MomentGraphVertex& v : g.vertices) {
    const std::string id = word_to_string(v.rep_word);
    os << "  \"" << id << "\" [label=\"" << id << "\\nphi=" << rational_to_string(v.phi)
       << "\", phi=\"" << rational_to_string(v.phi) << "\"];\n";
  }
  for (const MomentGraphEdge& e : g.edges) {
    os << "  \"" << word_to_string(g.vertices[static_cast<std::size_t>(e.u)].rep_word)
       << "\" -- \"" << word_to_string(g.vertices[static_cast<std::size_t>(e.v)].rep_word)
       << "\" [label=\"" << root_to_string(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace gkm

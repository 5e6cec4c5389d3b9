#include "gkm/report.hpp"

#include "gkm/errors.hpp"
#include "gkm/gkm_rings.hpp"
#include "gkm/kirwan.hpp"
#include "gkm/moment_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace gkm {

namespace {

using nlohmann::ordered_json;

struct Pipeline {
  RootDatum datum;
  SchubertDatum sd;
  MomentGraph graph;
  int degree_bound = 0;
};

Pipeline build_pipeline(const JobConfig& config) {
  Pipeline p;
  p.datum = build_root_datum(config.type_letter, config.rank);
  p.sd = make_schubert_datum(p.datum, weight_from_fundamental(p.datum, config.lambda_fw),
                             config.w_word);
  p.graph = moment_graph(p.sd, config.a_vals);
  p.degree_bound = config.degree_bound.value_or(2 * p.sd.w.length());
  return p;
}

ordered_json vector_to_json(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_string(v(i)));
  return out;
}

ordered_json config_section(const JobConfig& config, const Pipeline& p) {
  ordered_json j;
  j["type"] = std::string(1, config.type_letter);
  j["rank"] = config.rank;
  ordered_json lambda = ordered_json::array();
  for (Eigen::Index i = 0; i < config.lambda_fw.size(); ++i)
    lambda.push_back(config.lambda_fw(i));
  j["lambda"] = lambda;
  j["w"] = word_to_string(p.sd.w.word);  // canonical minimal representative
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < config.a_vals.size(); ++i) a.push_back(config.a_vals(i));
  j["a"] = a;
  j["r0"] = rational_to_string(config.r0);
  j["degree_bound"] = p.degree_bound;
  return j;
}

ordered_json graph_section(const MomentGraph& g) {
  ordered_json j;
  ordered_json vertices = ordered_json::array();
  for (const MomentGraphVertex& v : g.vertices) {
    ordered_json vj;
    vj["rep"] = word_to_string(v.rep_word);
    vj["weight"] = vector_to_json(v.weight);
    vj["phi"] = rational_to_string(v.phi);
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  ordered_json edges = ordered_json::array();
  for (const MomentGraphEdge& e : g.edges) {
    ordered_json ej;
    ej["u"] = word_to_string(g.vertices[static_cast<std::size_t>(e.u)].rep_word);
    ej["v"] = word_to_string(g.vertices[static_cast<std::size_t>(e.v)].rep_word);
    ej["label"] = root_to_string(e.label);
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j;
}

struct AssumptionResults {
  Assumption1Report a1;
  R0Report r0;
  std::vector<Eigen::Index> valency_flags;
  std::vector<int> poincare;
  bool palindromic = false;
  std::optional<Assumption3Report> a3;
};

AssumptionResults evaluate_assumptions(const Pipeline& p, const JobConfig& config) {
  AssumptionResults r;
  r.a1 = validate_assumption1(p.sd, config.a_vals);
  r.r0 = validate_r0(p.graph, config.r0);
  r.valency_flags = valency_report(p.graph, p.sd.w.length());
  r.poincare = poincare_polynomial(p.sd);
  r.palindromic = is_palindromic(r.poincare);
  if (r.a1.passed() && r.r0.passed)
    r.a3 = check_assumption3(p.graph, config.r0, p.degree_bound);
  return r;
}

ordered_json assumptions_section(const Pipeline& p, const AssumptionResults& r) {
  ordered_json j;

  ordered_json a1;
  a1["regularity"] = r.a1.regularity;
  a1["injectivity"] = r.a1.injectivity;
  a1["bruhat_monotone"] = r.a1.bruhat_monotone;
  a1["passed"] = r.a1.passed();
  a1["failures"] = r.a1.failures;
  j["assumption1"] = a1;

  ordered_json a3i;
  a3i["passed"] = r.r0.passed;
  a3i["message"] = r.r0.message;
  j["assumption3i"] = a3i;

  ordered_json a2;
  ordered_json flags = ordered_json::array();
  for (Eigen::Index i : r.valency_flags)
    flags.push_back(word_to_string(p.graph.vertices[static_cast<std::size_t>(i)].rep_word));
  a2["valency_flagged_vertices"] = flags;
  a2["poincare_polynomial"] = r.poincare;
  a2["palindromic"] = r.palindromic;
  a2["note"] =
      "valency agreement is necessary evidence only; it cannot prove smoothness, and "
      "in non-simply-laced types it may reflect rational smoothness rather than "
      "smoothness";
  j["assumption2_evidence"] = a2;

  ordered_json a3;
  if (r.a3) {
    a3["checked"] = true;
    a3["passed_all_degrees"] = r.a3->all_passed;
    ordered_json per = ordered_json::array();
    for (std::size_t d = 0; d < r.a3->degree_passed.size(); ++d) {
      ordered_json entry;
      entry["degree"] = 2 * static_cast<int>(d);
      entry["passed"] = static_cast<bool>(r.a3->degree_passed[d]);
      per.push_back(entry);
    }
    a3["per_degree"] = per;
    a3["note"] = r.a3->note;
  } else {
    a3["checked"] = false;
    a3["note"] = "skipped: prerequisites failed";
  }
  j["assumption3ii"] = a3;
  return j;
}

void append_assumption_text(std::ostringstream& os, const AssumptionResults& r,
                            const Pipeline& p) {
  os << "Assumption 1 (position of a): " << (r.a1.passed() ? "PASS" : "FAIL") << "\n";
  for (const std::string& f : r.a1.failures) os << "  - " << f << "\n";
  os << "Assumption 3(i) (r0 a regular level): " << (r.r0.passed ? "PASS" : "FAIL")
     << "\n  - " << r.r0.message << "\n";
  os << "Assumption 2 evidence: valency flags {";
  for (std::size_t i = 0; i < r.valency_flags.size(); ++i) {
    if (i) os << ", ";
    os << word_to_string(
        p.graph.vertices[static_cast<std::size_t>(r.valency_flags[i])].rep_word);
  }
  os << "}; Poincare polynomial (";
  for (std::size_t i = 0; i < r.poincare.size(); ++i) {
    if (i) os << ",";
    os << r.poincare[i];
  }
  os << ") " << (r.palindromic ? "palindromic" : "non-palindromic") << "\n";
  if (r.a3) {
    os << "Assumption 3(ii) (extension of admissible tuples): "
       << (r.a3->all_passed ? "PASS" : "FAIL") << " for all cohomological degrees <= "
       << r.a3->max_cohomological_degree << "\n  - " << r.a3->note << "\n";
  } else {
    os << "Assumption 3(ii): skipped, prerequisites failed\n";
  }
}

// Dimension oracle from the cell decomposition; disagreement with the linear
// algebra means the computation cannot be trusted.
void cross_check_formality(const Pipeline& p, const GradedBasisHT* ht,
                           const GradedBasisHS* hs, int bound) {
  const std::vector<int> b = poincare_polynomial(p.sd);
  for (int deg = 0; deg <= bound; deg += 2) {
    const int d = deg / 2;
    Eigen::Index expected_ht = 0, expected_hs = 0;
    for (int e = 0; e <= d && e < static_cast<int>(b.size()); ++e) {
      expected_ht += b[static_cast<std::size_t>(e)] * monomial_count(p.datum.rank, d - e);
      expected_hs += b[static_cast<std::size_t>(e)];
    }
    if (ht && ht->dim(deg) != expected_ht)
      throw InternalCheckError("equivariant dimension mismatch in degree " +
                               std::to_string(deg) + ": linear algebra gives " +
                               std::to_string(ht->dim(deg)) + ", cell count gives " +
                               std::to_string(expected_ht));
    if (hs && hs->dim(deg) != expected_hs)
      throw InternalCheckError("circle-equivariant dimension mismatch in degree " +
                               std::to_string(deg));
  }
}

ordered_json cohomology_section(const Pipeline& p, const GradedBasisHT& ht,
                                const GradedBasisHS& hs) {
  ordered_json j;
  ordered_json dims = ordered_json::array();
  for (int deg = 0; deg <= p.degree_bound; deg += 2) {
    ordered_json entry;
    entry["degree"] = deg;
    entry["dim_ht"] = static_cast<int>(ht.dim(deg));
    entry["dim_hs"] = static_cast<int>(hs.dim(deg));
    dims.push_back(entry);
  }
  j["dimensions"] = dims;
  return j;
}

ordered_json quotient_section(const QuotientComputation& q,
                              const QuotientPresentation& presentation) {
  ordered_json j;
  ordered_json betti = ordered_json::array();
  for (int bd : q.betti) betti.push_back(bd);
  j["betti"] = betti;

  ordered_json kernels = ordered_json::array();
  for (std::size_t d = 0; d < q.kernels.k_minus.size(); ++d) {
    ordered_json entry;
    entry["degree"] = 2 * static_cast<int>(d);
    entry["dim_k_minus"] = static_cast<int>(q.kernels.k_minus[d].dimension());
    entry["dim_k_plus"] = static_cast<int>(q.kernels.k_plus[d].dimension());
    entry["dim_k_sum"] = static_cast<int>(q.kernels.k_sum[d].dimension());
    kernels.push_back(entry);
  }
  j["kernel"] = kernels;

  ordered_json cosets = ordered_json::array();
  for (std::size_t d = 0; d < presentation.basis_cosets.size(); ++d) {
    const RationalMatrix& reps = presentation.basis_cosets[d];
    for (Eigen::Index i = 0; i < reps.rows(); ++i) {
      ordered_json entry;
      entry["degree"] = 2 * static_cast<int>(d);
      entry["index"] = static_cast<int>(i);
      entry["vertex_values"] = vector_to_json(reps.row(i).transpose());
      cosets.push_back(entry);
    }
  }
  j["basis_cosets"] = cosets;

  ordered_json products = ordered_json::array();
  for (const QuotientPresentation::Product& prod : presentation.products) {
    ordered_json entry;
    entry["left"] = {prod.left_degree, prod.left_index};
    entry["right"] = {prod.right_degree, prod.right_index};
    entry["available"] = prod.available;
    if (prod.available) entry["expansion"] = vector_to_json(prod.expansion);
    products.push_back(entry);
  }
  j["products"] = products;
  return j;
}

std::string betti_line(const std::vector<int>& betti) {
  std::ostringstream os;
  os << "betti (cohomological degrees 0,2,...): ";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) os << " ";
    os << betti[static_cast<std::size_t>(i)];
  }
  return os.str();
}

CommandOutcome run_validate(const Pipeline& p, const JobConfig& config) {
  CommandOutcome out;
  const AssumptionResults r = evaluate_assumptions(p, config);
  out.document["assumptions"] = assumptions_section(p, r);
  std::ostringstream os;
  append_assumption_text(os, r, p);
  out.text = os.str();
  const bool ok = r.a1.passed() && r.r0.passed && (!r.a3 || r.a3->all_passed);
  out.exit_code = ok ? 0 : 3;
  return out;
}

CommandOutcome run_graph(const Pipeline& p) {
  CommandOutcome out;
  out.dot = to_dot(p.graph);
  out.text = out.dot;
  out.document["graph"] = graph_section(p.graph);
  return out;
}

CommandOutcome run_cohomology(const Pipeline& p, const JobConfig& config) {
  CommandOutcome out;
  const Assumption1Report a1 = validate_assumption1(p.sd, config.a_vals);
  if (!a1.regularity)
    throw AssumptionError("Assumption 1 (regularity)",
                          "a pairs to zero with a positive root");
  const GradedBasisHT ht = ht_basis(p.graph, p.degree_bound);
  const GradedBasisHS hs = hs_basis(p.graph, config.a_vals, p.degree_bound);
  cross_check_formality(p, &ht, &hs, p.degree_bound);
  out.document["cohomology"] = cohomology_section(p, ht, hs);
  std::ostringstream os;
  for (int deg = 0; deg <= p.degree_bound; deg += 2)
    os << "degree " << deg << ": dim H_T = " << ht.dim(deg)
       << ", dim H_S = " << hs.dim(deg) << "\n";
  out.text = os.str();
  return out;
}

CommandOutcome run_quotient(const Pipeline& p, const JobConfig& config,
                            bool include_everything) {
  CommandOutcome out;
  const AssumptionResults r = evaluate_assumptions(p, config);
  const QuotientComputation q =
      compute_quotient(p.sd, config.a_vals, config.r0, p.degree_bound);
  cross_check_formality(p, nullptr, &q.hs, p.degree_bound);
  const QuotientPresentation presentation =
      ring_presentation(p.sd, config.a_vals, config.r0, p.degree_bound);

  out.document["assumptions"] = assumptions_section(p, r);
  if (include_everything) {
    out.document["graph"] = graph_section(p.graph);
    const GradedBasisHT ht = ht_basis(p.graph, p.degree_bound);
    const GradedBasisHS hs = hs_basis(p.graph, config.a_vals, p.degree_bound);
    cross_check_formality(p, &ht, &hs, p.degree_bound);
    out.document["cohomology"] = cohomology_section(p, ht, hs);
    out.dot = to_dot(p.graph);
  }
  out.document["quotient"] = quotient_section(q, presentation);

  std::ostringstream os;
  append_assumption_text(os, r, p);
  os << betti_line(q.betti) << "\n";
  for (const QuotientPresentation::Product& prod : presentation.products) {
    os << "x(" << prod.left_degree << "," << prod.left_index << ") * x("
       << prod.right_degree << "," << prod.right_index << ") = ";
    if (!prod.available) {
      os << "beyond degree bound\n";
      continue;
    }
    bool wrote = false;
    for (Eigen::Index t = 0; t < prod.expansion.size(); ++t) {
      if (prod.expansion(t) == 0) continue;
      if (wrote) os << " + ";
      os << rational_to_string(prod.expansion(t)) << "*x("
         << prod.left_degree + prod.right_degree << "," << t << ")";
      wrote = true;
    }
    if (!wrote) os << "0";
    os << "\n";
  }
  out.text = os.str();
  return out;
}

} // namespace

std::optional<Command> command_from_name(const std::string& name) {
  if (name == "validate") return Command::kValidate;
  if (name == "graph") return Command::kGraph;
  if (name == "cohomology") return Command::kCohomology;
  if (name == "quotient") return Command::kQuotient;
  if (name == "report") return Command::kReport;
  return std::nullopt;
}

CommandOutcome run_command(Command command, const JobConfig& config) {
  CommandOutcome out;
  out.document = ordered_json::object();
  out.document["schema_version"] = "1";
  try {
    const Pipeline p = build_pipeline(config);
    out.document["config"] = config_section(config, p);
    CommandOutcome body;
    switch (command) {
      case Command::kValidate:
        body = run_validate(p, config);
        break;
      case Command::kGraph:
        body = run_graph(p);
        break;
      case Command::kCohomology:
        body = run_cohomology(p, config);
        break;
      case Command::kQuotient:
        body = run_quotient(p, config, false);
        break;
      case Command::kReport:
        body = run_quotient(p, config, true);
        break;
    }
    for (auto& [key, value] : body.document.items()) out.document[key] = value;
    out.text = body.text;
    out.dot = body.dot;
    out.exit_code = body.exit_code;
  } catch (const AssumptionError& e) {
    out.exit_code = 3;
    out.text = std::string("assumption failure: ") + e.what() + "\n";
    out.document["error"] = {{"kind", "assumption"}, {"message", e.what()}};
  } catch (const InternalCheckError& e) {
    out.exit_code = 4;
    out.text = std::string("internal inconsistency: ") + e.what() + "\n";
    out.document["error"] = {{"kind", "internal"}, {"message", e.what()}};
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.text = std::string("invalid job: ") + e.what() + "\n";
    out.document["error"] = {{"kind", "invalid_job"}, {"message", e.what()}};
  }
  return out;
}

} // namespace gkm

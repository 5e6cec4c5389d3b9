#include "gkm/config.hpp"

#include <json.hpp>

#include <set>

namespace gkm {

namespace {

using nlohmann::json;

bool get_int(const json& j, const char* key, int& out, std::vector<std::string>& errors) {
  if (!j.at(key).is_number_integer()) {
    errors.push_back(std::string(key) + ": expected an integer");
    return false;
  }
  out = j.at(key).get<int>();
  return true;
}

bool get_int_array(const json& j, const char* key, std::vector<int>& out,
                   std::vector<std::string>& errors) {
  const json& value = j.at(key);
  if (!value.is_array()) {
    errors.push_back(std::string(key) + ": expected an array of integers");
    return false;
  }
  for (const json& item : value) {
    if (!item.is_number_integer()) {
      errors.push_back(std::string(key) + ": expected an array of integers");
      return false;
    }
    out.push_back(item.get<int>());
  }
  return true;
}

} // namespace

ParseOutcome parse_config(const std::string& json_text) {
  ParseOutcome outcome;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    outcome.errors.push_back(std::string("document: ") + e.what());
    return outcome;
  }
  if (!doc.is_object()) {
    outcome.errors.push_back("document: top level must be a JSON object");
    return outcome;
  }

  static const std::set<std::string> known = {"schema_version", "type",  "rank", "lambda",
                                              "w",              "a",     "r0",
                                              "degree_bound"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) outcome.errors.push_back(key + ": unknown key");
  for (const char* key : {"type", "rank", "lambda", "w", "a", "r0"})
    if (!doc.contains(key)) outcome.errors.push_back(std::string(key) + ": missing");
  if (doc.contains("schema_version")) {
    const json& v = doc["schema_version"];
    const bool ok = (v.is_string() && v.get<std::string>() == "1") ||
                    (v.is_number_integer() && v.get<int>() == 1);
    if (!ok) outcome.errors.push_back("schema_version: expected 1");
  }
  if (!outcome.errors.empty()) return outcome;

  JobConfig config;

  if (!doc["type"].is_string() || doc["type"].get<std::string>().size() != 1) {
    outcome.errors.push_back("type: expected a one-letter string (A, B, C or D)");
  } else {
    config.type_letter = doc["type"].get<std::string>()[0];
    if (std::string("ABCD").find(config.type_letter) == std::string::npos)
      outcome.errors.push_back("type: expected one of A, B, C, D");
  }

  bool have_rank = get_int(doc, "rank", config.rank, outcome.errors);
  if (have_rank && config.rank < 1) {
    outcome.errors.push_back("rank: must be a positive integer");
    have_rank = false;
  }

  std::vector<int> lambda;
  if (get_int_array(doc, "lambda", lambda, outcome.errors)) {
    if (have_rank && static_cast<int>(lambda.size()) != config.rank)
      outcome.errors.push_back("lambda: expected " + std::to_string(config.rank) +
                               " fundamental-weight coordinates");
    bool nonzero = false;
    for (int c : lambda) {
      if (c < 0) {
        outcome.errors.push_back("lambda: coordinates must be >= 0");
        break;
      }
      if (c > 0) nonzero = true;
    }
    if (!nonzero) outcome.errors.push_back("lambda: must be nonzero");
    config.lambda_fw = Eigen::Map<const IntVector>(lambda.data(),
                                                   static_cast<Eigen::Index>(lambda.size()));
  }

  std::vector<int> w;
  if (get_int_array(doc, "w", w, outcome.errors)) {
    for (int letter : w)
      if (have_rank && (letter < 1 || letter > config.rank)) {
        outcome.errors.push_back("w: reflection indices must lie in 1.." +
                                 std::to_string(config.rank));
        break;
      }
    for (int letter : w) config.w_word.push_back(letter - 1);
  }

  std::vector<int> a;
  if (get_int_array(doc, "a", a, outcome.errors)) {
    if (have_rank && static_cast<int>(a.size()) != config.rank)
      outcome.errors.push_back("a: expected " + std::to_string(config.rank) +
                               " pairings alpha_j(a)");
    config.a_vals =
        Eigen::Map<const IntVector>(a.data(), static_cast<Eigen::Index>(a.size()));
  }

  const json& r0 = doc["r0"];
  try {
    if (r0.is_number_integer())
      config.r0 = Rational(r0.get<long long>());
    else if (r0.is_string())
      config.r0 = parse_rational(r0.get<std::string>());
    else
      outcome.errors.push_back("r0: expected an integer or a \"p/q\" string");
  } catch (const std::invalid_argument& e) {
    outcome.errors.push_back(std::string("r0: ") + e.what());
  }

  if (doc.contains("degree_bound")) {
    int bound = 0;
    if (get_int(doc, "degree_bound", bound, outcome.errors)) {
      if (bound < 0 || bound % 2 != 0)
        outcome.errors.push_back("degree_bound: must be a non-negative even integer "
                                 "(a cohomological degree)");
      else
        config.degree_bound = bound;
    }
  }

  if (outcome.errors.empty()) outcome.config = std::move(config);
  return outcome;
}

} // namespace gkm

#ifndef GKM_CONFIG_HPP
#define GKM_CONFIG_HPP

#include "gkm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

/**
 * A computation job, as read from a JSON config document.
 *
 * Units and bases: `lambda` is given in fundamental-weight coordinates
 * (non-negative integers, not all zero); `w` is a word in 1-based simple
 * reflection indices; `a` lists the pairings a_j = alpha_j(a) of the circle
 * direction with the simple roots; `r0` is an exact rational, written as an
 * integer or a "p/q" string. `degree_bound` (cohomological, optional)
 * defaults to twice the length of the canonicalised w.
 */
struct JobConfig {
  char type_letter = 'A';
  int rank = 0;
  IntVector lambda_fw;
  std::vector<int> w_word;  // 0-based internally
  IntVector a_vals;
  Rational r0;
  std::optional<int> degree_bound;
};

struct ParseOutcome {
  std::optional<JobConfig> config;          // set iff errors is empty
  std::vector<std::string> errors;          // one entry per offending field
};

/// Parses and validates a config document; all field errors are itemized.
ParseOutcome parse_config(const std::string& json_text);

} // namespace gkm

#endif

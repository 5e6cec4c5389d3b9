#ifndef GKM_WEYL_HPP
#define GKM_WEYL_HPP

#include "gkm/rational.hpp"
#include "gkm/root_datum.hpp"

#include <cstddef>
#include <vector>

namespace gkm {

/**
 * A Weyl group element as a reduced word in simple reflections (0-based
 * generator indices). The word [i0, i1, ..., ik] denotes the composition
 * s_{i0} s_{i1} ... s_{ik}, acting on weights right-to-left.
 */
struct WeylElement {
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
};

/**
 * The full Weyl group of a root datum, enumerated once at construction by
 * orbiting a strictly dominant weight. Elements are indexed 0..size()-1
 * with the identity at index 0; each carries a canonical reduced word.
 * Immutable after construction and safe to share across threads.
 *
 * Construction throws if the group order exceeds order_cap.
 */
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum, std::size_t order_cap = 40320);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return words_.size(); }
  std::size_t identity() const { return 0; }
  int length(std::size_t index) const { return static_cast<int>(words_[index].size()); }
  const std::vector<int>& word(std::size_t index) const { return words_[index]; }

  /// Index of s_gen * w.
  std::size_t left_mult(int gen, std::size_t index) const {
    return left_[static_cast<std::size_t>(gen)][index];
  }

  /// Index of the element with the given (not necessarily reduced) word.
  std::size_t index_of_word(const std::vector<int>& word) const;

  /// w . mu for the element with the given index.
  RationalVector apply(std::size_t index, const RationalVector& mu) const;

  /**
   * Bruhat order u <= w, by the recursive descent criterion: for a left
   * descent s of w, u <= w iff (s u <= s w when s u < u) or (u <= s w
   * otherwise).
   */
  bool bruhat_leq(std::size_t u, std::size_t w) const;

 private:
  RootDatum datum_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::size_t>> left_;  // [gen][index]
};

/// Applies the word to mu, rightmost letter first.
RationalVector apply_word(const RootDatum& datum, const std::vector<int>& word,
                          RationalVector mu);

struct OrbitPoint {
  RationalVector weight;
  WeylElement rep;  // the minimal-length coset representative moving lambda here
};

/**
 * The orbit W.lambda of a dominant nonzero weight, each point paired with
 * its minimal coset representative, ordered by (length, lex word). The
 * orbit size is |W| / |W_lambda|. Throws for non-dominant or zero lambda.
 */
std::vector<OrbitPoint> weyl_orbit(const RootDatum& datum, const RationalVector& lambda,
                                   std::size_t orbit_cap = 40320);

} // namespace gkm

#endif

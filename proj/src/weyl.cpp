#include "gkm/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gkm {

namespace {

std::vector<Rational> weight_key(const RationalVector& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

RationalVector simple_reflect(const RootDatum& datum, const RationalVector& mu, int i) {
  RationalVector out = mu;
  out(i) -= simple_pairing(datum, mu, i);  // subtract mu(alpha_i^vee) * alpha_i
  return out;
}

} // namespace

RationalVector apply_word(const RootDatum& datum, const std::vector<int>& word,
                          RationalVector mu) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= datum.rank)
      throw std::invalid_argument("word contains a generator outside the datum rank");
    mu = simple_reflect(datum, mu, *it);
  }
  return mu;
}

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t order_cap) : datum_(datum) {
  // BFS on the orbit of rho: rho is strictly dominant, so the orbit map
  // w -> w.rho is injective and the BFS depth is the length function.
  RationalVector rho = RationalVector::Zero(datum_.rank);
  for (int i = 0; i < datum_.rank; ++i) rho += fundamental_weight(datum_, i);

  std::map<std::vector<Rational>, std::size_t> index_of;
  std::vector<RationalVector> weights;

  weights.push_back(rho);
  words_.push_back({});
  index_of.emplace(weight_key(rho), 0);
  left_.assign(static_cast<std::size_t>(datum_.rank), {});

  for (std::size_t head = 0; head < weights.size(); ++head) {
    for (int i = 0; i < datum_.rank; ++i) {
      const RationalVector image = simple_reflect(datum_, weights[head], i);
      auto [it, inserted] = index_of.emplace(weight_key(image), weights.size());
      if (inserted) {
        if (weights.size() >= order_cap)
          throw std::invalid_argument(
              "Weyl group order exceeds the cap of " + std::to_string(order_cap));
        weights.push_back(image);
        std::vector<int> w;
        w.reserve(words_[head].size() + 1);
        w.push_back(i);
        w.insert(w.end(), words_[head].begin(), words_[head].end());
        words_.push_back(std::move(w));
      }
      left_[static_cast<std::size_t>(i)].resize(weights.size());
      left_[static_cast<std::size_t>(i)][head] = it->second;
    }
  }
  for (int i = 0; i < datum_.rank; ++i)
    left_[static_cast<std::size_t>(i)].resize(weights.size());
}

std::size_t WeylGroup::index_of_word(const std::vector<int>& word) const {
  std::size_t idx = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= datum_.rank)
      throw std::invalid_argument("word contains a generator outside the datum rank");
    idx = left_mult(*it, idx);
  }
  return idx;
}

RationalVector WeylGroup::apply(std::size_t index, const RationalVector& mu) const {
  return apply_word(datum_, words_[index], mu);
}

bool WeylGroup::bruhat_leq(std::size_t u, std::size_t w) const {
  if (length(u) > length(w)) return false;
  if (u == w || u == identity()) return true;
  int descent = -1;
  for (int i = 0; i < datum_.rank; ++i)
    if (length(left_mult(i, w)) < length(w)) { descent = i; break; }
  // w != e here, so a descent exists.
  const std::size_t sw = left_mult(descent, w);
  const std::size_t su = left_mult(descent, u);
  if (length(su) < length(u)) return bruhat_leq(su, sw);
  return bruhat_leq(u, sw);
}

std::vector<OrbitPoint> weyl_orbit(const RootDatum& datum, const RationalVector& lambda,
                                   std::size_t orbit_cap) {
  if (lambda.size() != datum.rank)
    throw std::invalid_argument("weyl_orbit: weight has wrong dimension");
  if (lambda.isZero())
    throw std::invalid_argument("weyl_orbit: lambda must be nonzero");
  if (!is_dominant(datum, lambda))
    throw std::invalid_argument("weyl_orbit: lambda must be dominant");

  // BFS depth equals the length of the minimal coset representative, and the
  // minimal-length element mapping lambda to a given orbit point is unique.
  std::map<std::vector<Rational>, std::size_t> index_of;
  std::vector<OrbitPoint> points;
  points.push_back({lambda, WeylElement{}});
  index_of.emplace(weight_key(lambda), 0);

  for (std::size_t head = 0; head < points.size(); ++head) {
    const RationalVector current = points[head].weight;
    const WeylElement rep = points[head].rep;
    for (int i = 0; i < datum.rank; ++i) {
      if (simple_pairing(datum, current, i) == 0) continue;
      const RationalVector image = simple_reflect(datum, current, i);
      auto [it, inserted] = index_of.emplace(weight_key(image), points.size());
      if (inserted) {
        if (points.size() >= orbit_cap)
          throw std::invalid_argument("weyl_orbit: orbit exceeds the cap");
        WeylElement w;
        w.word.reserve(rep.word.size() + 1);
        w.word.push_back(i);
        w.word.insert(w.word.end(), rep.word.begin(), rep.word.end());
        points.push_back({image, std::move(w)});
      }
    }
  }
  std::sort(points.begin(), points.end(), [](const OrbitPoint& a, const OrbitPoint& b) {
    if (a.rep.word.size() != b.rep.word.size())
      return a.rep.word.size() < b.rep.word.size();
    return a.rep.word < b.rep.word;
  });
  return points;
}

} // namespace gkm

#include "gkm/root_datum.hpp"

#include "gkm/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

namespace gkm {

namespace {

IntMatrix cartan_matrix(char type, int rank) {
  IntMatrix c = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) {
    c(i, i) = 2;
    if (i + 1 < rank) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  }
  switch (type) {
    case 'A':
      break;
    case 'B':  // alpha_rank short
      c(rank - 1, rank - 2) = -2;
      break;
    case 'C':  // alpha_rank long
      c(rank - 2, rank - 1) = -2;
      break;
    case 'D':  // fork: alpha_rank attached to alpha_{rank-2}
      c(rank - 1, rank - 2) = 0;
      c(rank - 2, rank - 1) = 0;
      c(rank - 1, rank - 3) = -1;
      c(rank - 3, rank - 1) = -1;
      break;
    default:
      throw std::invalid_argument("unsupported type");
  }
  return c;
}

IntVector symmetrizer_for(char type, int rank) {
  IntVector d = IntVector::Ones(rank);
  if (type == 'B') {
    d.setConstant(2);
    d(rank - 1) = 1;
  } else if (type == 'C') {
    d(rank - 1) = 2;
  }
  return d;
}

std::vector<IntVector> enumerate_positive_roots(const IntMatrix& cartan) {
  const int rank = static_cast<int>(cartan.rows());
  std::map<std::vector<int>, IntVector> seen;
  std::vector<IntVector> queue;
  for (int i = 0; i < rank; ++i) {
    IntVector e = IntVector::Zero(rank);
    e(i) = 1;
    seen.emplace(std::vector<int>(e.data(), e.data() + rank), e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const IntVector gamma = queue[head];
    const IntVector pairings = cartan * gamma;
    for (int i = 0; i < rank; ++i) {
      IntVector image = gamma;
      image(i) -= pairings(i);
      if ((image.array() < 0).any()) continue;
      std::vector<int> key(image.data(), image.data() + rank);
      if (seen.emplace(std::move(key), image).second) queue.push_back(image);
    }
  }
  std::vector<IntVector> roots;
  roots.reserve(seen.size());
  for (auto& [key, root] : seen) roots.push_back(root);
  // Height first, then descending lex, so the simple roots come out in the
  // natural order alpha_1, ..., alpha_rank.
  std::sort(roots.begin(), roots.end(), [](const IntVector& a, const IntVector& b) {
    const int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(),
                                        a.data() + a.size());
  });
  return roots;
}

RationalMatrix exact_inverse(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m.cast<Rational>();
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  EchelonForm e = reduced_row_echelon(std::move(aug));
  if (e.rank != n) throw std::logic_error("Cartan matrix not invertible");
  return e.reduced.rightCols(n);
}

} // namespace

RootDatum build_root_datum(char type_letter, int rank, int rank_cap) {
  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
    throw std::invalid_argument(std::string("unsupported type '") + type_letter +
                                "': expected one of A, B, C, D");
  const int min_rank = (type == 'A') ? 1 : (type == 'D') ? 3 : 2;
  if (rank < min_rank)
    throw std::invalid_argument("type " + std::string(1, type) + " requires rank >= " +
                                std::to_string(min_rank));
  if (rank > rank_cap)
    throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the cap of " +
                                std::to_string(rank_cap));

  RootDatum datum;
  datum.type_letter = type;
  datum.rank = rank;
  datum.cartan = cartan_matrix(type, rank);
  datum.symmetrizer = symmetrizer_for(type, rank);
  datum.positive_roots = enumerate_positive_roots(datum.cartan);
  datum.inverse_cartan = exact_inverse(datum.cartan);
  return datum;
}

Rational simple_pairing(const RootDatum& datum, const RationalVector& mu, int i) {
  Rational s = 0;
  for (int j = 0; j < datum.rank; ++j) s += datum.cartan(i, j) * mu(j);
  return s;
}

Rational coroot_pairing(const RootDatum& datum, const RationalVector& mu,
                        const IntVector& gamma) {
  // gamma^vee = sum_i k_i d_i / d_gamma * alpha_i^vee  with
  // d_gamma = (gamma, gamma)/2 taken in the symmetrized form.
  Rational numerator = 0;
  for (int i = 0; i < datum.rank; ++i)
    numerator += Rational(gamma(i)) * datum.symmetrizer(i) * simple_pairing(datum, mu, i);
  Rational norm2 = 0;
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j)
      norm2 += Rational(gamma(i)) * gamma(j) * datum.symmetrizer(i) * datum.cartan(i, j);
  return numerator * 2 / norm2;
}

Rational root_pairing_a(const IntVector& gamma, const IntVector& a_vals) {
  return pairing_a(to_rational(gamma), a_vals);
}

Rational pairing_a(const RationalVector& mu, const IntVector& a_vals) {
  if (mu.size() != a_vals.size())
    throw std::invalid_argument("pairing_a: length mismatch");
  Rational s = 0;
  for (Eigen::Index j = 0; j < mu.size(); ++j) s += mu(j) * a_vals(j);
  return s;
}

RationalVector reflect(const RootDatum& datum, const RationalVector& mu,
                       const IntVector& gamma) {
  if (!is_positive_root(datum, gamma))
    throw std::invalid_argument("reflect: not a positive root of the datum");
  return mu - coroot_pairing(datum, mu, gamma) * to_rational(gamma);
}

RationalVector fundamental_weight(const RootDatum& datum, int i) {
  if (i < 0 || i >= datum.rank)
    throw std::invalid_argument("fundamental weight index out of range");
  return datum.inverse_cartan.col(i);
}

RationalVector weight_from_fundamental(const RootDatum& datum, const IntVector& coeffs) {
  if (coeffs.size() != datum.rank)
    throw std::invalid_argument("fundamental-weight coordinates have wrong length");
  return datum.inverse_cartan * to_rational(coeffs);
}

bool is_dominant(const RootDatum& datum, const RationalVector& mu) {
  for (int i = 0; i < datum.rank; ++i)
    if (simple_pairing(datum, mu, i) < 0) return false;
  return true;
}

bool is_positive_root(const RootDatum& datum, const IntVector& gamma) {
  for (const IntVector& root : datum.positive_roots)
    if (root == gamma) return true;
  return false;
}

} // namespace gkm

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace salg {

/// A permutation of {1, ..., n}. Composition follows (s * p)(i) = s(p(i)).
class Perm {
public:
  /// Identity of degree n.
  explicit Perm(std::size_t n = 0);
  /// From the one-line image sequence (s(1), ..., s(n)), 1-based.
  static Perm from_images(std::vector<int> images);
  static Perm transposition(std::size_t n, int i, int j);
  /// A single cycle (c_1 c_2 ... c_k): c_1 -> c_2 -> ... -> c_k -> c_1.
  static Perm cycle(std::size_t n, std::initializer_list<int> points);
  static Perm cycle(std::size_t n, const std::vector<int>& points);

  std::size_t degree() const { return images_.size(); }
  /// Image of the 1-based point i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Disjoint-cycle notation, e.g. "(1 3 2)"; the identity prints as "()".
  std::string to_string() const;

  /// Parses cycle notation such as "(1 2)(3 4)" or "()".
  static Perm parse(std::size_t n, const std::string& text);

private:
  std::vector<int> images_;
};

/// All elements of the group generated by `generators`, identity first,
/// then in breadth-first order. Supported up to the size of S_7.
std::vector<Perm> enumerate_group(std::size_t n, const std::vector<Perm>& generators);

/// Adjacent transpositions (1 2), (2 3), ..., (n-1 n).
std::vector<Perm> symmetric_generators(std::size_t n);

/// Generators of S_k acting on the letters {1, ..., k} inside S_n.
std::vector<Perm> symmetric_generators(std::size_t n, std::size_t k);

/// A left transversal of G in H (both given as full element lists, G a
/// subgroup of H): one representative per coset sG, in first-seen order.
std::vector<Perm> left_transversal(const std::vector<Perm>& h_elements,
                                   const std::vector<Perm>& g_elements);

/// Left transversal of <S_{n-2}, (n-1 n)> in S_n: for each pair i < j, the
/// permutation sending n-1 -> i, n -> j and order-preserving elsewhere.
/// Pairs are listed lexicographically.
std::vector<Perm> coset_reps_pair_stabilizer(std::size_t n);

/// The permutation sending i -> n-1, j -> n and the other letters
/// increasingly onto {1, ..., n-2}.
Perm move_pair_to_top(std::size_t n, int i, int j);

}  // namespace salg

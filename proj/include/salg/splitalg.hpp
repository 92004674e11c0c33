#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "salg/perm.hpp"
#include "salg/ring.hpp"

namespace salg {

/// Exponent tuple (m_1, ..., m_n) of a monomial tau_1^m_1 ... tau_n^m_n.
/// In the standard basis 0 <= m_i < i, and such tuples biject with
/// [0, n!) through the mixed-radix index sum m_i (i-1)!.
struct ExpVec {
  std::vector<int> exps;

  bool in_range() const;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

std::size_t basis_index(const ExpVec& e);
ExpVec exp_of_index(std::size_t index, std::size_t n);
std::size_t factorial(std::size_t n);

/// Element of the splitting algebra, stored sparsely over the standard
/// basis, keyed by mixed-radix index. Zero coefficients are never stored.
class AlgElem {
public:
  using Terms = std::map<std::size_t, RingElem>;

  AlgElem() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const AlgElem&, const AlgElem&) = default;

private:
  friend class SplitAlg;
  Terms terms_;
};

/// A monomial with unrestricted nonnegative exponents and its coefficient.
using RawTerm = std::pair<std::vector<int>, RingElem>;

using IndexPair = std::pair<int, int>;

/// The splitting algebra A_f of f = t^n + a_1 t^(n-1) + ... + a_n over a
/// finite ring A, built as the tower A = A_n, A_(i-1) = A_i[t]/(f_i).
///
/// f_i is the monic degree-i factor with root tau_i whose coefficients
/// live in A[tau_(i+1), ..., tau_n]. Elements are kept in normal form over
/// the n! standard monomials. Immutable after construction.
class SplitAlg {
public:
  static constexpr std::size_t kMaxDegree = 8;

  /// Builds the chain f_n = f, f_(i-1) = f_i / (t - tau_i) by synthetic
  /// division. `coeffs` is (a_1, ..., a_n).
  static SplitAlg construct(Ring ring, std::vector<RingElem> coeffs);

  const Ring& ring() const { return ring_; }
  std::size_t degree() const { return n_; }
  /// n!, the rank of A_f as a free A-module.
  std::size_t rank() const { return rank_; }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }

  /// Coefficients (b_1, ..., b_i) of f_i = t^i + b_1 t^(i-1) + ... + b_i.
  const std::vector<AlgElem>& chain(std::size_t i) const { return chain_.at(i); }

  AlgElem zero() const { return AlgElem(); }
  AlgElem one() const { return constant(ring_.one()); }
  AlgElem constant(const RingElem& c) const;
  /// tau_i in normal form (tau_1 is not a basis monomial and gets reduced).
  AlgElem root(int i) const;
  AlgElem basis_element(std::size_t index) const;
  /// Element with the given coefficients; the exponents must be in range.
  AlgElem from_terms(const std::vector<std::pair<ExpVec, RingElem>>& terms) const;

  /// Reduces an arbitrary polynomial in tau_1..tau_n to normal form.
  AlgElem normalize(const std::vector<RawTerm>& raw) const;

  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem sub(const AlgElem& x, const AlgElem& y) const;
  AlgElem neg(const AlgElem& x) const;
  AlgElem scale(const RingElem& c, const AlgElem& x) const;
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem pow(const AlgElem& x, unsigned e) const;

  /// The A-algebra automorphism determined by tau_i -> tau_sigma(i).
  AlgElem act(const Perm& sigma, const AlgElem& x) const;
  bool is_fixed_by(const Perm& sigma, const AlgElem& x) const;
  bool is_fixed_by(const std::vector<Perm>& generators, const AlgElem& x) const;

  /// Lift from G-invariants to H-invariants: sum of s x over a left
  /// transversal of G in H. Throws if x is not G-invariant or G is not in H.
  AlgElem orbit_sum(const std::vector<Perm>& g_generators, const std::vector<Perm>& h_generators,
                    const AlgElem& x) const;

  /// Product of (tau_i + tau_j) over the given pairs.
  AlgElem pair_product(const std::vector<IndexPair>& pairs) const;
  /// All pairs 1 <= i < j <= n, lexicographic.
  std::vector<IndexPair> all_pairs() const;
  /// D_f, the product over all pairs; always a constant.
  AlgElem d_f() const { return pair_product(all_pairs()); }

  /// True iff x lies in A[tau_(i+1), ..., tau_n]; for i = n this is x in A.
  bool tail_subalgebra_support(const AlgElem& x, std::size_t i) const;

  /// x = sum_p c_p p over head monomials p in tau_1..tau_i with c_p in
  /// A[tau_(i+1), ..., tau_n]. Keyed by the head's mixed-radix index.
  std::map<std::size_t, AlgElem> coeffs_over_tail(const AlgElem& x, std::size_t i) const;

  /// Image of x under tau_i -> roots[i-1] in A, given that the roots
  /// factor f. Throws if prod (t - roots[i]) differs from f.
  RingElem specialize(const AlgElem& x, const std::vector<RingElem>& roots) const;

  /// Coefficient sequence of length n! over ring factor k.
  std::vector<std::int64_t> dense_row(const AlgElem& x, std::size_t factor) const;
  /// Element whose factor-k coefficients are `row` and other factors zero.
  AlgElem from_dense_row(std::span<const std::int64_t> row, std::size_t factor) const;

  /// Canonical display: terms by index, `c*t2^e2*t3^e3`, unit coefficients
  /// omitted on non-constant terms, " + " between terms, `0` for zero.
  std::string format(const AlgElem& x) const;
  std::string format_polynomial() const;

private:
  using Key = std::uint64_t;
  using WorkMap = std::map<Key, RingElem, std::greater<>>;
  using PackedPoly = std::vector<std::pair<Key, RingElem>>;

  SplitAlg(Ring ring, std::vector<RingElem> coeffs);

  static constexpr unsigned shift_of(std::size_t i) {
    return static_cast<unsigned>(8 * (kMaxDegree - i));
  }
  static int field(Key key, std::size_t i) { return static_cast<int>((key >> shift_of(i)) & 0xFF); }

  Key key_of(std::span<const int> exps) const;
  std::size_t index_of_key(Key key) const;
  void accumulate(WorkMap& work, Key key, const RingElem& c) const;
  AlgElem reduce(WorkMap work) const;

  Ring ring_;
  std::size_t n_;
  std::size_t rank_;
  std::vector<RingElem> coeffs_;
  std::vector<std::size_t> radix_;
  std::vector<Key> basis_keys_;
  // chain_[i] holds f_i's coefficients; packed_chain_[i][k-1] is b_k in
  // packed form, the rewrite data for tau_i^i.
  std::vector<std::vector<AlgElem>> chain_;
  std::vector<std::vector<PackedPoly>> packed_chain_;
};

}  // namespace salg

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace salg {

/// An element of a product of residue rings; residues[k] lives in Z/m_k.
struct RingElem {
  std::vector<std::int64_t> residues;

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// An ideal of Z/m_1 x ... x Z/m_k. Every ideal of Z/m is (d) for a unique
/// divisor d of m, so one divisor per factor is stored. The zero ideal of
/// a factor is stored as d = m.
struct Ideal {
  std::vector<std::int64_t> divisors;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Finite commutative ring Z/m_1 x ... x Z/m_k with componentwise arithmetic.
class Ring {
public:
  static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

  explicit Ring(std::vector<std::int64_t> moduli);

  /// Parses `Z/m` or `Z/m1 x Z/m2 x ...` (whitespace-insensitive).
  static Ring parse(std::string_view spec);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t num_factors() const { return moduli_.size(); }
  std::int64_t modulus(std::size_t k) const { return moduli_[k]; }

  /// Number of elements, saturating at INT64_MAX.
  std::int64_t cardinality() const;

  RingElem zero() const;
  RingElem one() const;
  /// Image of an integer under the diagonal map Z -> R.
  RingElem from_int(std::int64_t value) const;
  /// Builds an element from per-factor integers, reducing each.
  RingElem from_residues(const std::vector<std::int64_t>& residues) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;

  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;
  bool contains(const RingElem& a) const;

  /// Enumerates every element; intended for exhaustive checks on tiny rings.
  std::vector<RingElem> elements() const;

  std::string to_string() const;
  std::string format(const RingElem& a) const;
  std::string format(const Ideal& ideal) const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  std::vector<std::int64_t> moduli_;
};

std::int64_t mod_reduce(std::int64_t value, std::int64_t modulus);

/// Ann_R(a) = {x : x a = 0}; per factor it is generated by m / gcd(a, m).
Ideal ann(const Ring& ring, const RingElem& a);

Ideal ideal_intersect(const Ring& ring, const Ideal& lhs, const Ideal& rhs);

bool ideal_is_zero(const Ring& ring, const Ideal& ideal);

bool ideal_contains(const Ring& ring, const Ideal& ideal, const RingElem& a);

/// Canonical nonzero element: the generator of the first factor whose
/// ideal is nonzero, zeros elsewhere. Empty iff the ideal is zero.
std::optional<RingElem> ideal_pick_nonzero(const Ring& ring, const Ideal& ideal);

}  // namespace salg

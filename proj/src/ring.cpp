#include "salg/ring.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace salg {

std::int64_t mod_reduce(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

Ring::Ring(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty())
    throw std::invalid_argument("ring needs at least one factor");
  for (std::int64_t m : moduli_) {
    if (m < 2 || m > kMaxModulus)
      throw std::invalid_argument("modulus out of range [2, 2^31): " + std::to_string(m));
  }
}

Ring Ring::parse(std::string_view spec) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact.push_back(c);
  }
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  while (true) {
    if (compact.compare(pos, 2, "Z/") != 0)
      throw std::invalid_argument("bad ring spec '" + std::string(spec) + "': expected Z/<m>");
    pos += 2;
    std::size_t start = pos;
    while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
      ++pos;
    if (pos == start || pos - start > 10)
      throw std::invalid_argument("bad ring spec '" + std::string(spec) + "': bad modulus");
    moduli.push_back(std::stoll(compact.substr(start, pos - start)));
    if (pos == compact.size())
      break;
    if (compact[pos] != 'x')
      throw std::invalid_argument("bad ring spec '" + std::string(spec) + "': expected 'x'");
    ++pos;
  }
  return Ring(std::move(moduli));
}

std::int64_t Ring::cardinality() const {
  std::int64_t total = 1;
  for (std::int64_t m : moduli_) {
    if (total > std::numeric_limits<std::int64_t>::max() / m)
      return std::numeric_limits<std::int64_t>::max();
    total *= m;
  }
  return total;
}

RingElem Ring::zero() const { return RingElem{std::vector<std::int64_t>(moduli_.size(), 0)}; }

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(std::int64_t value) const {
  RingElem r;
  r.residues.reserve(moduli_.size());
  for (std::int64_t m : moduli_)
    r.residues.push_back(mod_reduce(value, m));
  return r;
}

RingElem Ring::from_residues(const std::vector<std::int64_t>& residues) const {
  if (residues.size() != moduli_.size())
    throw std::invalid_argument("residue count does not match the number of ring factors");
  RingElem r;
  r.residues.reserve(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    r.residues.push_back(mod_reduce(residues[k], moduli_[k]));
  return r;
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    r.residues[k] += b.residues[k];
    if (r.residues[k] >= moduli_[k])
      r.residues[k] -= moduli_[k];
  }
  return r;
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    r.residues[k] -= b.residues[k];
    if (r.residues[k] < 0)
      r.residues[k] += moduli_[k];
  }
  return r;
}

RingElem Ring::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    r.residues[k] = (a.residues[k] * b.residues[k]) % moduli_[k];
  return r;
}

bool Ring::is_zero(const RingElem& a) const {
  for (std::int64_t v : a.residues) {
    if (v != 0)
      return false;
  }
  return true;
}

bool Ring::is_one(const RingElem& a) const { return a == one(); }

bool Ring::contains(const RingElem& a) const {
  if (a.residues.size() != moduli_.size())
    return false;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    if (a.residues[k] < 0 || a.residues[k] >= moduli_[k])
      return false;
  }
  return true;
}

std::vector<RingElem> Ring::elements() const {
  std::vector<RingElem> out{zero()};
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    std::vector<RingElem> next;
    next.reserve(out.size() * static_cast<std::size_t>(moduli_[k]));
    for (const RingElem& base : out) {
      for (std::int64_t v = 0; v < moduli_[k]; ++v) {
        RingElem e = base;
        e.residues[k] = v;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string Ring::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    if (k)
      s += " x ";
    s += "Z/" + std::to_string(moduli_[k]);
  }
  return s;
}

std::string Ring::format(const RingElem& a) const {
  if (a.residues.size() == 1)
    return std::to_string(a.residues[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < a.residues.size(); ++k) {
    if (k)
      s += ",";
    s += std::to_string(a.residues[k]);
  }
  return s + ")";
}

std::string Ring::format(const Ideal& ideal) const {
  std::string s;
  for (std::size_t k = 0; k < ideal.divisors.size(); ++k) {
    if (k)
      s += "x";
    std::int64_t d = ideal.divisors[k] == moduli_[k] ? 0 : ideal.divisors[k];
    s += "(" + std::to_string(d) + ")";
  }
  return s;
}

Ideal ann(const Ring& ring, const RingElem& a) {
  Ideal out;
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    std::int64_t m = ring.modulus(k);
    out.divisors.push_back(m / std::gcd(a.residues[k], m));
  }
  return out;
}

Ideal ideal_intersect(const Ring& ring, const Ideal& lhs, const Ideal& rhs) {
  if (lhs.divisors.size() != ring.num_factors() || rhs.divisors.size() != ring.num_factors())
    throw std::invalid_argument("ideal does not belong to this ring");
  Ideal out;
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    std::int64_t m = ring.modulus(k);
    out.divisors.push_back(std::gcd(std::lcm(lhs.divisors[k], rhs.divisors[k]), m));
  }
  return out;
}

bool ideal_is_zero(const Ring& ring, const Ideal& ideal) {
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    if (ideal.divisors[k] != ring.modulus(k))
      return false;
  }
  return true;
}

bool ideal_contains(const Ring& ring, const Ideal& ideal, const RingElem& a) {
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    if (a.residues[k] % ideal.divisors[k] != 0)
      return false;
  }
  return true;
}

std::optional<RingElem> ideal_pick_nonzero(const Ring& ring, const Ideal& ideal) {
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    if (ideal.divisors[k] < ring.modulus(k)) {
      RingElem e = ring.zero();
      e.residues[k] = ideal.divisors[k];
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace salg

#include "salg/splitalg.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace salg {

namespace {

// Exponent fields are 8 bits wide; reduction never raises the total degree,
// so inputs of total degree <= kMaxPackedDegree stay representable.
constexpr int kMaxPackedDegree = 255;

}  // namespace

bool ExpVec::in_range() const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > static_cast<int>(i))
      return false;
  }
  return true;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

std::size_t basis_index(const ExpVec& e) {
  if (!e.in_range())
    throw std::invalid_argument("exponent tuple is not a standard basis monomial");
  std::size_t index = 0;
  std::size_t radix = 1;
  for (std::size_t i = 0; i < e.exps.size(); ++i) {
    index += static_cast<std::size_t>(e.exps[i]) * radix;
    radix *= i + 1;
  }
  return index;
}

ExpVec exp_of_index(std::size_t index, std::size_t n) {
  ExpVec e;
  e.exps.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e.exps[i] = static_cast<int>(index % (i + 1));
    index /= i + 1;
  }
  if (index != 0)
    throw std::out_of_range("basis index exceeds n!");
  return e;
}

SplitAlg::SplitAlg(Ring ring, std::vector<RingElem> coeffs)
    : ring_(std::move(ring)), n_(coeffs.size()), rank_(factorial(coeffs.size())), coeffs_(std::move(coeffs)) {}

SplitAlg SplitAlg::construct(Ring ring, std::vector<RingElem> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("polynomial degree must be at least 1");
  if (coeffs.size() > kMaxDegree)
    throw std::invalid_argument("degree above " + std::to_string(kMaxDegree) + " is not supported");
  for (const RingElem& c : coeffs) {
    if (!ring.contains(c))
      throw std::invalid_argument("coefficient is not a reduced element of the base ring");
  }
  SplitAlg s(std::move(ring), std::move(coeffs));
  const std::size_t n = s.n_;

  s.radix_.resize(n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    s.radix_[i] = factorial(i - 1);
  s.basis_keys_.reserve(s.rank_);
  for (std::size_t idx = 0; idx < s.rank_; ++idx)
    s.basis_keys_.push_back(s.key_of(exp_of_index(idx, n).exps));

  s.chain_.assign(n + 1, {});
  s.packed_chain_.assign(n + 1, {});
  auto pack = [&s](std::size_t i) {
    for (const AlgElem& b : s.chain_[i]) {
      PackedPoly p;
      for (const auto& [idx, c] : b.terms())
        p.emplace_back(s.basis_keys_[idx], c);
      s.packed_chain_[i].push_back(std::move(p));
    }
  };

  for (const RingElem& a : s.coeffs_)
    s.chain_[n].push_back(s.constant(a));
  pack(n);
  // f_(i-1) = f_i / (t - tau_i): c_0 = 1, c_k = b_k + tau_i c_(k-1).
  for (std::size_t i = n; i >= 2; --i) {
    const AlgElem tau = s.root(static_cast<int>(i));
    AlgElem prev = s.one();
    for (std::size_t k = 1; k < i; ++k) {
      prev = s.add(s.chain_[i][k - 1], s.mul(tau, prev));
      s.chain_[i - 1].push_back(prev);
    }
    pack(i - 1);
  }
  return s;
}

SplitAlg::Key SplitAlg::key_of(std::span<const int> exps) const {
  Key key = 0;
  for (std::size_t i = 1; i <= exps.size(); ++i)
    key |= static_cast<Key>(exps[i - 1]) << shift_of(i);
  return key;
}

std::size_t SplitAlg::index_of_key(Key key) const {
  std::size_t index = 0;
  for (std::size_t i = 2; i <= n_; ++i)
    index += static_cast<std::size_t>(field(key, i)) * radix_[i];
  return index;
}

void SplitAlg::accumulate(WorkMap& work, Key key, const RingElem& c) const {
  if (ring_.is_zero(c))
    return;
  auto [it, inserted] = work.try_emplace(key, c);
  if (!inserted) {
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second))
      work.erase(it);
  }
}

// Pops the lexicographically largest term (m_1 most significant). Rewriting
// tau_i^m_i at the smallest out-of-range i lowers m_i and only raises
// exponents of tau_j for j > i, so every new term is strictly smaller and
// each key is finalized once all its contributions have arrived.
AlgElem SplitAlg::reduce(WorkMap work) const {
  AlgElem out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Key key = node.key();
    const RingElem& coeff = node.mapped();
    std::size_t bad = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (field(key, i) >= static_cast<int>(i)) {
        bad = i;
        break;
      }
    }
    if (bad == 0) {
      out.terms_.emplace(index_of_key(key), coeff);
      continue;
    }
    // tau_i^i = -(b_1 tau_i^(i-1) + ... + b_i)
    const Key base = key - (static_cast<Key>(bad) << shift_of(bad));
    const RingElem minus = ring_.neg(coeff);
    for (std::size_t k = 1; k <= bad; ++k) {
      const Key lowered = base + (static_cast<Key>(bad - k) << shift_of(bad));
      for (const auto& [tail_key, b] : packed_chain_[bad][k - 1])
        accumulate(work, lowered + tail_key, ring_.mul(minus, b));
    }
  }
  return out;
}

AlgElem SplitAlg::constant(const RingElem& c) const {
  if (!ring_.contains(c))
    throw std::invalid_argument("constant is not an element of the base ring");
  AlgElem x;
  if (!ring_.is_zero(c))
    x.terms_.emplace(0, c);
  return x;
}

AlgElem SplitAlg::root(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > n_)
    throw std::invalid_argument("root index out of range");
  std::vector<int> exps(n_, 0);
  exps[static_cast<std::size_t>(i - 1)] = 1;
  return normalize({{exps, ring_.one()}});
}

AlgElem SplitAlg::basis_element(std::size_t index) const {
  if (index >= rank_)
    throw std::out_of_range("basis index exceeds n!");
  AlgElem x;
  x.terms_.emplace(index, ring_.one());
  return x;
}

AlgElem SplitAlg::from_terms(const std::vector<std::pair<ExpVec, RingElem>>& terms) const {
  AlgElem x;
  for (const auto& [e, c] : terms) {
    if (e.exps.size() != n_)
      throw std::invalid_argument("exponent tuple has wrong length");
    AlgElem term;
    if (!ring_.is_zero(c))
      term.terms_.emplace(basis_index(e), c);
    x = add(x, term);
  }
  return x;
}

AlgElem SplitAlg::normalize(const std::vector<RawTerm>& raw) const {
  WorkMap work;
  AlgElem large;
  for (const auto& [exps, c] : raw) {
    if (exps.size() != n_)
      throw std::invalid_argument("exponent tuple has wrong length");
    int total = 0;
    for (int e : exps) {
      if (e < 0)
        throw std::invalid_argument("negative exponent");
      total += e;
    }
    if (total <= kMaxPackedDegree) {
      accumulate(work, key_of(exps), c);
      continue;
    }
    AlgElem term = constant(c);
    for (std::size_t i = 1; i <= n_; ++i)
      term = mul(term, pow(root(static_cast<int>(i)), static_cast<unsigned>(exps[i - 1])));
    large = add(large, term);
  }
  return add(reduce(std::move(work)), large);
}

AlgElem SplitAlg::add(const AlgElem& x, const AlgElem& y) const {
  AlgElem out = x;
  for (const auto& [idx, c] : y.terms()) {
    auto [it, inserted] = out.terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second))
        out.terms_.erase(it);
    }
  }
  return out;
}

AlgElem SplitAlg::neg(const AlgElem& x) const {
  AlgElem out = x;
  for (auto& [idx, c] : out.terms_)
    c = ring_.neg(c);
  return out;
}

AlgElem SplitAlg::sub(const AlgElem& x, const AlgElem& y) const { return add(x, neg(y)); }

AlgElem SplitAlg::scale(const RingElem& c, const AlgElem& x) const {
  AlgElem out;
  for (const auto& [idx, v] : x.terms()) {
    RingElem p = ring_.mul(c, v);
    if (!ring_.is_zero(p))
      out.terms_.emplace(idx, std::move(p));
  }
  return out;
}

AlgElem SplitAlg::mul(const AlgElem& x, const AlgElem& y) const {
  WorkMap work;
  for (const auto& [ix, cx] : x.terms()) {
    for (const auto& [iy, cy] : y.terms())
      accumulate(work, basis_keys_[ix] + basis_keys_[iy], ring_.mul(cx, cy));
  }
  return reduce(std::move(work));
}

AlgElem SplitAlg::pow(const AlgElem& x, unsigned e) const {
  AlgElem result = one();
  AlgElem base = x;
  while (e) {
    if (e & 1u)
      result = mul(result, base);
    e >>= 1;
    if (e)
      base = mul(base, base);
  }
  return result;
}

AlgElem SplitAlg::act(const Perm& sigma, const AlgElem& x) const {
  if (sigma.degree() != n_)
    throw std::invalid_argument("permutation degree does not match the polynomial degree");
  WorkMap work;
  std::vector<int> moved(n_);
  for (const auto& [idx, c] : x.terms()) {
    const Key key = basis_keys_[idx];
    for (std::size_t i = 1; i <= n_; ++i)
      moved[static_cast<std::size_t>(sigma(static_cast<int>(i)) - 1)] = field(key, i);
    accumulate(work, key_of(moved), c);
  }
  return reduce(std::move(work));
}

bool SplitAlg::is_fixed_by(const Perm& sigma, const AlgElem& x) const { return act(sigma, x) == x; }

bool SplitAlg::is_fixed_by(const std::vector<Perm>& generators, const AlgElem& x) const {
  for (const Perm& g : generators) {
    if (!is_fixed_by(g, x))
      return false;
  }
  return true;
}

AlgElem SplitAlg::orbit_sum(const std::vector<Perm>& g_generators, const std::vector<Perm>& h_generators,
                            const AlgElem& x) const {
  if (!is_fixed_by(g_generators, x))
    throw std::invalid_argument("orbit_sum: element is not invariant under G");
  const std::vector<Perm> h = enumerate_group(n_, h_generators);
  const std::set<Perm> h_set(h.begin(), h.end());
  for (const Perm& g : g_generators) {
    if (!h_set.count(g))
      throw std::invalid_argument("orbit_sum: G is not a subgroup of H");
  }
  AlgElem sum;
  for (const Perm& rep : left_transversal(h, enumerate_group(n_, g_generators)))
    sum = add(sum, act(rep, x));
  return sum;
}

std::vector<IndexPair> SplitAlg::all_pairs() const {
  std::vector<IndexPair> pairs;
  for (int i = 1; i <= static_cast<int>(n_); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n_); ++j)
      pairs.emplace_back(i, j);
  }
  return pairs;
}

AlgElem SplitAlg::pair_product(const std::vector<IndexPair>& pairs) const {
  AlgElem product = one();
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j <= i || j > static_cast<int>(n_))
      throw std::invalid_argument("invalid pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    product = mul(product, add(root(i), root(j)));
  }
  return product;
}

bool SplitAlg::tail_subalgebra_support(const AlgElem& x, std::size_t i) const {
  if (i > n_)
    throw std::invalid_argument("tail index exceeds degree");
  const std::size_t head_size = factorial(i);
  for (const auto& [idx, c] : x.terms()) {
    if (idx % head_size != 0)
      return false;
  }
  return true;
}

std::map<std::size_t, AlgElem> SplitAlg::coeffs_over_tail(const AlgElem& x, std::size_t i) const {
  if (i > n_)
    throw std::invalid_argument("tail index exceeds degree");
  const std::size_t head_size = factorial(i);
  std::map<std::size_t, AlgElem> out;
  for (const auto& [idx, c] : x.terms())
    out[idx % head_size].terms_.emplace(idx - idx % head_size, c);
  return out;
}

RingElem SplitAlg::specialize(const AlgElem& x, const std::vector<RingElem>& roots) const {
  if (roots.size() != n_)
    throw std::invalid_argument("specialize: need exactly n roots");
  // prod (t - nu_i), highest degree first.
  std::vector<RingElem> poly{ring_.one()};
  for (const RingElem& nu : roots) {
    if (!ring_.contains(nu))
      throw std::invalid_argument("specialize: root is not a ring element");
    std::vector<RingElem> next(poly.size() + 1, ring_.zero());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] = ring_.add(next[k], poly[k]);
      next[k + 1] = ring_.sub(next[k + 1], ring_.mul(poly[k], nu));
    }
    poly = std::move(next);
  }
  for (std::size_t k = 0; k < n_; ++k) {
    if (poly[k + 1] != coeffs_[k])
      throw std::invalid_argument("specialize: the given roots do not factor f");
  }
  RingElem value = ring_.zero();
  for (const auto& [idx, c] : x.terms()) {
    const ExpVec e = exp_of_index(idx, n_);
    RingElem term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int p = 0; p < e.exps[i]; ++p)
        term = ring_.mul(term, roots[i]);
    }
    value = ring_.add(value, term);
  }
  return value;
}

std::vector<std::int64_t> SplitAlg::dense_row(const AlgElem& x, std::size_t factor) const {
  std::vector<std::int64_t> row(rank_, 0);
  for (const auto& [idx, c] : x.terms())
    row[idx] = c.residues.at(factor);
  return row;
}

AlgElem SplitAlg::from_dense_row(std::span<const std::int64_t> row, std::size_t factor) const {
  if (row.size() != rank_ || factor >= ring_.num_factors())
    throw std::invalid_argument("from_dense_row: shape mismatch");
  AlgElem x;
  for (std::size_t idx = 0; idx < rank_; ++idx) {
    std::int64_t v = mod_reduce(row[idx], ring_.modulus(factor));
    if (v == 0)
      continue;
    RingElem c = ring_.zero();
    c.residues[factor] = v;
    x.terms_.emplace(idx, std::move(c));
  }
  return x;
}

std::string SplitAlg::format(const AlgElem& x) const {
  if (x.is_zero())
    return "0";
  std::string s;
  for (const auto& [idx, c] : x.terms()) {
    if (!s.empty())
      s += " + ";
    if (idx == 0) {
      s += ring_.format(c);
      continue;
    }
    std::string term = ring_.is_one(c) ? "" : ring_.format(c);
    const ExpVec e = exp_of_index(idx, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (e.exps[i] == 0)
        continue;
      if (!term.empty())
        term += "*";
      term += "t" + std::to_string(i + 1) + "^" + std::to_string(e.exps[i]);
    }
    s += term;
  }
  return s;
}

std::string SplitAlg::format_polynomial() const {
  std::string s = "t^" + std::to_string(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t power = n_ - k - 1;
    s += " + " + ring_.format(coeffs_[k]);
    if (power >= 1)
      s += "*t";
    if (power >= 2)
      s += "^" + std::to_string(power);
  }
  return s;
}

}  // namespace salg

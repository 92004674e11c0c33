#include "salg/invariants.hpp"

#include "salg/errors.hpp"

namespace salg {

namespace {

InvariantModule span_of(const SplitAlg& s, const std::vector<AlgElem>& elements) {
  InvariantModule module;
  for (std::size_t k = 0; k < s.ring().num_factors(); ++k) {
    MatrixOverFactor rows(s.ring().modulus(k), 0, s.rank());
    for (const AlgElem& x : elements)
      rows.append_row(s.dense_row(x, k));
    module.factors.push_back(howell_form(rows));
  }
  return module;
}

bool is_transposition(const Perm& p, int& i, int& j) {
  std::vector<int> moved;
  for (int k = 1; k <= static_cast<int>(p.degree()); ++k) {
    if (p(k) != k)
      moved.push_back(k);
  }
  if (moved.size() != 2)
    return false;
  i = moved[0];
  j = moved[1];
  return true;
}

}  // namespace

InvariantModule invariant_module(const SplitAlg& s, const std::vector<Perm>& generators) {
  const std::size_t rank = s.rank();
  // Images of every basis monomial under each generator, minus the monomial.
  std::vector<std::vector<AlgElem>> columns;
  columns.reserve(generators.size());
  for (const Perm& g : generators) {
    std::vector<AlgElem> images;
    images.reserve(rank);
    for (std::size_t b = 0; b < rank; ++b) {
      const AlgElem basis = s.basis_element(b);
      images.push_back(s.sub(s.act(g, basis), basis));
    }
    columns.push_back(std::move(images));
  }

  InvariantModule module;
  for (std::size_t k = 0; k < s.ring().num_factors(); ++k) {
    const std::int64_t m = s.ring().modulus(k);
    // The stacked system has the same kernel as the Howell form of its rows,
    // which is folded in one generator at a time to keep the matrices small.
    HowellBasis rows(m, rank);
    for (std::size_t gi = 0; gi < columns.size(); ++gi) {
      MatrixOverFactor block(m, rank, rank);
      for (std::size_t b = 0; b < rank; ++b) {
        for (const auto& [r, c] : columns[gi][b].terms())
          block.set(r, b, c.residues[k]);
      }
      rows = module_sum(rows, howell_form(block));
    }
    module.factors.push_back(kernel(MatrixOverFactor(m, rank, rows.rows())));
  }
  return module;
}

InvariantModule symmetric_invariants(const SplitAlg& s) {
  return invariant_module(s, symmetric_generators(s.degree()));
}

InvariantModule constants_module(const SplitAlg& s) { return span_of(s, {s.one()}); }

InvariantModule s2_closed_form(const SplitAlg& s) {
  if (s.degree() != 2)
    throw PreconditionError("s2_closed_form requires degree 2");
  const Ring& ring = s.ring();
  // tau_1 + tau_2 = -a_1
  const Ideal coeff_ideal =
      ideal_intersect(ring, ann(ring, ring.from_int(2)), ann(ring, ring.neg(s.coeffs()[0])));
  InvariantModule module;
  for (std::size_t k = 0; k < ring.num_factors(); ++k) {
    MatrixOverFactor rows(ring.modulus(k), 0, 2);
    rows.append_row({1, 0});
    rows.append_row({0, coeff_ideal.divisors[k]});
    module.factors.push_back(howell_form(rows));
  }
  return module;
}

InvariantModule intersect_with_tail(const SplitAlg& s, const InvariantModule& module, std::size_t i) {
  const std::size_t head = factorial(i);
  InvariantModule out;
  for (std::size_t k = 0; k < s.ring().num_factors(); ++k) {
    MatrixOverFactor coords(s.ring().modulus(k), 0, s.rank());
    for (std::size_t b = 0; b < s.rank(); b += head) {
      Row e(s.rank(), 0);
      e[b] = 1;
      coords.append_row(std::move(e));
    }
    out.factors.push_back(module_intersect(module.factors[k], howell_form(coords)));
  }
  return out;
}

bool module_contains(const SplitAlg& s, const InvariantModule& module, const AlgElem& x) {
  for (std::size_t k = 0; k < s.ring().num_factors(); ++k) {
    if (!in_row_span(s.dense_row(x, k), module.factors[k]))
      return false;
  }
  return true;
}

std::vector<AlgElem> module_generators(const SplitAlg& s, const InvariantModule& module) {
  std::vector<AlgElem> out;
  for (std::size_t k = 0; k < module.factors.size(); ++k) {
    for (const Row& row : module.factors[k].rows())
      out.push_back(s.from_dense_row(row, k));
  }
  return out;
}

InvariantModule trivial_transposition_span(const SplitAlg& s, int i, int j) {
  const int n = static_cast<int>(s.degree());
  if (n < 2 || i < 1 || j <= i || j > n)
    throw PreconditionError("transposition (i j) needs 1 <= i < j <= n and n >= 2");
  // pi = (1 i)(2 j) sends 1 -> i and 2 -> j.
  const Perm id(s.degree());
  const Perm pi = (i == 1 ? id : Perm::transposition(s.degree(), 1, i)) *
                  (j == 2 ? id : Perm::transposition(s.degree(), 2, j));
  std::vector<AlgElem> spanning;
  for (std::size_t b = 0; b < s.rank(); b += 2)
    spanning.push_back(s.act(pi, s.basis_element(b)));
  return span_of(s, spanning);
}

bool trivial_transposition_test(const SplitAlg& s, const AlgElem& x, int i, int j) {
  TrivialityCache cache(s);
  return cache.test(x, i, j);
}

const InvariantModule& TrivialityCache::span(int i, int j) {
  std::lock_guard lock(mutex_);
  auto it = spans_.find({i, j});
  if (it == spans_.end())
    it = spans_.emplace(std::make_pair(i, j), trivial_transposition_span(s_, i, j)).first;
  return it->second;
}

bool TrivialityCache::test(const AlgElem& x, int i, int j) {
  const InvariantModule& module = span(i, j);
  if (!s_.is_fixed_by(Perm::transposition(s_.degree(), i, j), x))
    throw PreconditionError("element is not invariant under the transposition");
  return module_contains(s_, module, x);
}

bool trivial_invariant_test(const SplitAlg& s, const AlgElem& x, const std::vector<Perm>& generators) {
  int i = 0, j = 0;
  if (generators.size() == 1 && is_transposition(generators[0], i, j))
    return trivial_transposition_test(s, x, i, j);
  if (enumerate_group(s.degree(), generators).size() == s.rank()) {
    if (!s.is_fixed_by(generators, x))
      throw PreconditionError("element is not invariant under the group");
    return s.tail_subalgebra_support(x, s.degree());
  }
  throw UnsupportedSubgroup("trivial invariants are only characterized for S_n and single transpositions");
}

RingElem d_f_constant(const SplitAlg& s) {
  const AlgElem d = s.d_f();
  if (!s.tail_subalgebra_support(d, s.degree()))
    throw VerificationFailure("D_f is not a constant: " + s.format(d));
  return d.is_zero() ? s.ring().zero() : d.terms().begin()->second;
}

ConditionStar condition_star(const SplitAlg& s) {
  const Ring& ring = s.ring();
  ConditionStar out;
  out.d_f = d_f_constant(s);
  out.ann2 = ann(ring, ring.from_int(2));
  out.ann_d = ann(ring, out.d_f);
  out.intersection = ideal_intersect(ring, out.ann2, out.ann_d);
  out.holds = ideal_is_zero(ring, out.intersection);
  out.seed = ideal_pick_nonzero(ring, out.intersection);
  return out;
}

StabilityProducts stability_products(const SplitAlg& s, const AlgElem& x) {
  const RingElem d = d_f_constant(s);
  StabilityProducts out;
  out.two_x_in_a = s.tail_subalgebra_support(s.scale(s.ring().from_int(2), x), s.degree());
  out.dfx_in_a = s.tail_subalgebra_support(s.scale(d, x), s.degree());
  return out;
}

}  // namespace salg

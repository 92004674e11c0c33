#include "salg/witness.hpp"

#include "salg/errors.hpp"

namespace salg {

namespace {

bool kills(const SplitAlg& s, const AlgElem& z, IndexPair pair) {
  return s.mul(z, s.add(s.root(pair.first), s.root(pair.second))).is_zero();
}

}  // namespace

DescentResult annihilator_descent(const SplitAlg& s, const RingElem& c) {
  const Ring& ring = s.ring();
  if (ring.is_zero(c) || !ring.is_zero(ring.mul(ring.from_int(2), c)) ||
      !ring.is_zero(ring.mul(d_f_constant(s), c)))
    throw PreconditionError("descent seed must be nonzero and killed by 2 and D_f");

  DescentResult out;
  AlgElem z = s.constant(c);
  for (const IndexPair& pair : s.all_pairs()) {
    AlgElem next = s.mul(z, s.add(s.root(pair.first), s.root(pair.second)));
    out.trail.push_back({pair, next});
    if (next.is_zero()) {
      out.z = std::move(z);
      out.pair = pair;
      return out;
    }
    z = std::move(next);
  }
  throw VerificationFailure("descent never reached zero although c D_f = 0");
}

SigmaInvariant extract_sigma_invariant(const SplitAlg& s, const AlgElem& z, IndexPair pair) {
  const std::size_t n = s.degree();
  const auto [i, j] = pair;
  if (n < 2 || i < 1 || j <= i || j > static_cast<int>(n))
    throw PreconditionError("pair must satisfy 1 <= i < j <= n");
  if (z.is_zero() || !s.scale(s.ring().from_int(2), z).is_zero() || !kills(s, z, pair))
    throw PreconditionError("z must be nonzero and killed by 2 and tau_i + tau_j");

  SigmaInvariant out;
  if (n == 2) {
    // Every coefficient of z lies in Ann 2 n Ann(tau_1 + tau_2).
    out.x = s.scale(z.terms().begin()->second, s.root(2));
    return out;
  }

  const AlgElem moved = s.act(move_pair_to_top(n, i, j), z);
  const auto heads = s.coeffs_over_tail(moved, n - 2);
  out.x = heads.begin()->second;

  const int top = static_cast<int>(n);
  if (!s.is_fixed_by(Perm::transposition(n, top - 1, top), out.x))
    throw VerificationFailure("extracted coefficient is not (n-1 n)-invariant");
  if (trivial_transposition_test(s, out.x, top - 1, top)) {
    out.x = s.mul(s.root(top), out.x);
    out.multiplied_by_tau_n = true;
    if (trivial_transposition_test(s, out.x, top - 1, top))
      throw VerificationFailure("tau_n x is still a trivial (n-1 n)-invariant");
  }
  return out;
}

AlgElem lift_to_full_invariant(const SplitAlg& s, const AlgElem& x) {
  const std::size_t n = s.degree();
  if (n < 2)
    throw PreconditionError("lift requires n >= 2");
  const int top = static_cast<int>(n);
  if (!s.is_fixed_by(Perm::transposition(n, top - 1, top), x) ||
      !s.is_fixed_by(symmetric_generators(n, n - 2), x))
    throw PreconditionError("lift requires an S_(n-2)- and (n-1 n)-invariant element");
  AlgElem y;
  for (const Perm& rep : coset_reps_pair_stabilizer(n))
    y = s.add(y, s.act(rep, x));
  return y;
}

WitnessVerification verify_witness(const SplitAlg& s, const AlgElem& y) {
  WitnessVerification v;
  v.invariant = s.is_fixed_by(symmetric_generators(s.degree()), y);
  v.in_a = s.tail_subalgebra_support(y, s.degree());
  v.stability = stability_products(s, y);
  return v;
}

std::optional<WitnessReport> build_witness(const SplitAlg& s) {
  const ConditionStar cond = condition_star(s);
  if (cond.holds)
    return std::nullopt;

  WitnessReport report;
  report.seed = *cond.seed;
  DescentResult descent = annihilator_descent(s, report.seed);
  report.trail = std::move(descent.trail);
  report.z = descent.z;
  report.pair = descent.pair;
  SigmaInvariant extracted = extract_sigma_invariant(s, descent.z, descent.pair);
  report.sigma_invariant = extracted.x;
  report.multiplied_by_tau_n = extracted.multiplied_by_tau_n;
  report.y = lift_to_full_invariant(s, extracted.x);
  report.verification = verify_witness(s, report.y);
  if (!report.verification.valid())
    throw VerificationFailure("witness failed verification: " + s.format(report.y));
  return report;
}

}  // namespace salg

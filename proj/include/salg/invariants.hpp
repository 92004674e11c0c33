#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "salg/modlinalg.hpp"
#include "salg/splitalg.hpp"

namespace salg {

/// A submodule of A_f given per ring factor by a Howell basis whose rows
/// are coefficient sequences over the standard basis (length n!).
struct InvariantModule {
  std::vector<HowellBasis> factors;

  friend bool operator==(const InvariantModule&, const InvariantModule&) = default;
};

/// A_f^G for G generated by `generators`: the common kernel of the
/// linearized maps act(g, .) - id, computed per ring factor.
InvariantModule invariant_module(const SplitAlg& s, const std::vector<Perm>& generators);

/// A_f^(S_n), presented by adjacent transpositions.
InvariantModule symmetric_invariants(const SplitAlg& s);

/// The constants A inside A_f.
InvariantModule constants_module(const SplitAlg& s);

/// Closed form A_f^(S_2) = A + (Ann 2 n Ann(tau_1 + tau_2)) tau_2 for n = 2.
InvariantModule s2_closed_form(const SplitAlg& s);

/// Intersection with the coordinate subspace A[tau_(i+1), ..., tau_n].
InvariantModule intersect_with_tail(const SplitAlg& s, const InvariantModule& module, std::size_t i);

bool module_contains(const SplitAlg& s, const InvariantModule& module, const AlgElem& x);

/// Rows of every factor basis as algebra elements (zero in other factors).
std::vector<AlgElem> module_generators(const SplitAlg& s, const InvariantModule& module);

/// Decides x in A_f^((i j), tr), the trivial (i j)-invariants. Uses
/// A_f^((1 2), tr) = A[tau_3, ..., tau_n] transported by (1 i)(2 j).
/// Throws PreconditionError unless x is fixed by (i j).
bool trivial_transposition_test(const SplitAlg& s, const AlgElem& x, int i, int j);

/// Trivial-invariant test for a group given by generators. Supported are
/// S_n (trivial invariants are the constants) and single transpositions.
bool trivial_invariant_test(const SplitAlg& s, const AlgElem& x, const std::vector<Perm>& generators);

/// Memoizes the per-pair spanning bases of trivial transposition invariants.
class TrivialityCache {
public:
  explicit TrivialityCache(const SplitAlg& s) : s_(s) {}

  bool test(const AlgElem& x, int i, int j);
  const InvariantModule& span(int i, int j);

private:
  const SplitAlg& s_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, InvariantModule> spans_;
};

/// Module spanned by act((1 i)(2 j), b) over tail monomials b in tau_3..tau_n.
InvariantModule trivial_transposition_span(const SplitAlg& s, int i, int j);

struct ConditionStar {
  bool holds = false;
  RingElem d_f;
  Ideal ann2;
  Ideal ann_d;
  Ideal intersection;
  std::optional<RingElem> seed;
};

/// Evaluates Ann_A 2 n Ann_A D_f = 0.
ConditionStar condition_star(const SplitAlg& s);

/// D_f as a ring element; throws VerificationFailure if it is not constant.
RingElem d_f_constant(const SplitAlg& s);

struct StabilityProducts {
  bool two_x_in_a = false;
  bool dfx_in_a = false;

  friend bool operator==(const StabilityProducts&, const StabilityProducts&) = default;
};

/// Whether 2x and D_f x are constants; true for every S_n-invariant x.
StabilityProducts stability_products(const SplitAlg& s, const AlgElem& x);

}  // namespace salg

#pragma once

#include <optional>
#include <vector>

#include "salg/invariants.hpp"
#include "salg/splitalg.hpp"

namespace salg {

struct DescentStep {
  IndexPair pair;
  /// The running product after multiplying by (tau_i + tau_j).
  AlgElem product;
};

struct DescentResult {
  /// Last nonzero running product; killed by 2 and by tau_i + tau_j.
  AlgElem z;
  IndexPair pair;
  std::vector<DescentStep> trail;
};

/// Multiplies c by (tau_i + tau_j) over pairs in lexicographic order and
/// stops at the first factor that sends the running product to zero.
/// Requires c != 0, 2c = 0 and c D_f = 0.
DescentResult annihilator_descent(const SplitAlg& s, const RingElem& c);

struct SigmaInvariant {
  AlgElem x;
  bool multiplied_by_tau_n = false;
};

/// From z with 2z = 0 and z (tau_i + tau_j) = 0, produces a non-trivial
/// (n-1 n)-invariant in A[tau_(n-1), tau_n].
SigmaInvariant extract_sigma_invariant(const SplitAlg& s, const AlgElem& z, IndexPair pair);

/// Sum of rep x over the left transversal of <S_(n-2), (n-1 n)> in S_n.
AlgElem lift_to_full_invariant(const SplitAlg& s, const AlgElem& x);

struct WitnessVerification {
  bool invariant = false;
  bool in_a = true;
  StabilityProducts stability;

  bool valid() const { return invariant && !in_a && stability.two_x_in_a && stability.dfx_in_a; }
};

WitnessVerification verify_witness(const SplitAlg& s, const AlgElem& y);

struct WitnessReport {
  RingElem seed;
  std::vector<DescentStep> trail;
  AlgElem z;
  IndexPair pair;
  AlgElem sigma_invariant;
  bool multiplied_by_tau_n = false;
  AlgElem y;
  WitnessVerification verification;
};

/// Empty iff Ann_A 2 n Ann_A D_f = 0; otherwise a verified non-trivial
/// S_n-invariant. Throws VerificationFailure if the result fails its checks.
std::optional<WitnessReport> build_witness(const SplitAlg& s);

}  // namespace salg

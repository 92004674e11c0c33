#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "salg/invariants.hpp"
#include "salg/splitalg.hpp"
#include "salg/witness.hpp"

namespace salg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kSizeCap = 3,
  kSelfTestMismatch = 4,
};

/// Runs `salg <command> [options]`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a coefficient list `c1,c2,...`; each entry is an integer mapped
/// diagonally into the ring, or per-factor residues joined by ':'.
std::vector<RingElem> parse_elements(const Ring& ring, const std::string& text);

/// Parses `a..b`, `a` or `a,b,c` into a sorted list of integers.
std::vector<std::int64_t> parse_int_set(const std::string& text);

nlohmann::json to_json(const RingElem& a);
nlohmann::json to_json(const SplitAlg& s, const AlgElem& x);
AlgElem elem_from_json(const SplitAlg& s, const nlohmann::json& j);

nlohmann::json condition_json(const SplitAlg& s, const ConditionStar& cond);
nlohmann::json witness_json(const SplitAlg& s, const WitnessReport& report);

struct SelfTestSummary {
  std::int64_t instances = 0;
  std::int64_t holds = 0;
  std::int64_t mismatches = 0;
};

/// Main-theorem equivalence over every monic polynomial of each degree
/// over each Z/m, plus witness validation wherever the condition fails.
SelfTestSummary self_test_instance(const SplitAlg& s);

}  // namespace salg::cli

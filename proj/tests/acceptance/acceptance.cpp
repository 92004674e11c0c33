// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "salg/invariants.hpp"
#include "salg/modlinalg.hpp"
#include "salg/perm.hpp"
#include "salg/splitalg.hpp"
#include "salg/witness.hpp"

using namespace salg;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetN2 = 10.0;
constexpr double kBudgetN3 = 60.0;

constexpr int kDfInstances = 120;
constexpr int kDfN3Instances = 50;
constexpr int kWitnessSamplesN4 = 100;
constexpr int kLawChecks = 1000;
constexpr std::size_t kMatrixSamples = 2000;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5)
      failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const SplitAlg& s) {
  return s.ring().to_string() + " f = " + s.format_polynomial();
}

/// Calls fn on every monic f of degree n over Z/m.
void for_each_polynomial(std::int64_t m, std::size_t n, const std::function<void(const SplitAlg&)>& fn) {
  const Ring ring({m});
  oracle::for_each_vector(m, n, [&](const oracle::Vec& a) {
    std::vector<RingElem> coeffs;
    for (std::int64_t v : a)
      coeffs.push_back(ring.from_int(v));
    fn(SplitAlg::construct(ring, coeffs));
  });
}

/// Number of S_n-fixed elements of A_f, counted over every element.
std::size_t count_fixed_elements(const SplitAlg& s) {
  const auto gens = symmetric_generators(s.degree());
  std::size_t count = 0;
  for (const AlgElem& x : oracle::all_elements(s))
    count += s.is_fixed_by(gens, x) ? 1 : 0;
  return count;
}

/// Main theorem on every f of degree n over Z/m for m in `moduli`: the
/// Howell module and the enumerated fixed set both say invariants = A
/// exactly when condition (*) holds. Failing instances go to `failing`.
void main_theorem(std::size_t n, const std::vector<std::int64_t>& moduli, Outcome& out,
                  std::vector<SplitAlg>& failing) {
  std::size_t instances = 0, holds = 0;
  for (std::int64_t m : moduli) {
    for_each_polynomial(m, n, [&](const SplitAlg& s) {
      ++instances;
      const bool howell_trivial = symmetric_invariants(s) == constants_module(s);
      const bool enum_trivial = count_fixed_elements(s) == static_cast<std::size_t>(m);
      const bool cond = condition_star(s).holds;
      holds += cond ? 1 : 0;
      if (howell_trivial != enum_trivial || howell_trivial != cond)
        out.fail(describe(s));
      if (!cond)
        failing.push_back(s);
    });
  }
  out.detail = std::to_string(instances) + " instances, " + std::to_string(holds) + " with (*) holding, " +
               std::to_string(out.failures.size()) + " mismatches";
}

Outcome criterion1(std::vector<SplitAlg>& failing) {
  Outcome out;
  const auto start = Clock::now();
  std::vector<std::int64_t> moduli;
  for (std::int64_t m = 2; m <= 12; ++m)
    moduli.push_back(m);
  main_theorem(2, moduli, out, failing);
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(2);
  detail << out.detail << ", " << elapsed << " s (budget " << kBudgetN2 << " s)";
  out.detail = detail.str();
  if (elapsed > kBudgetN2)
    out.fail("over time budget");
  return out;
}

Outcome criterion2(std::vector<SplitAlg>& failing) {
  Outcome out;
  const auto start = Clock::now();
  main_theorem(3, {2, 3, 4}, out, failing);
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(2);
  detail << out.detail << ", " << elapsed << " s (budget " << kBudgetN3 << " s)";
  out.detail = detail.str();
  if (elapsed > kBudgetN3)
    out.fail("over time budget");
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::size_t instances = 0;
  for (std::int64_t m = 2; m <= 12; ++m) {
    for_each_polynomial(m, 2, [&](const SplitAlg& s) {
      ++instances;
      if (!(s2_closed_form(s) == symmetric_invariants(s)))
        out.fail(describe(s));
    });
  }
  out.detail = std::to_string(instances) + " instances with identical Howell bases";
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::mt19937_64 rng(4001);
  std::size_t by_degree[7] = {};
  for (int trial = 0; trial < kDfInstances; ++trial) {
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(2, 16)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const Ring ring({m});
    const SplitAlg s = SplitAlg::construct(ring, oracle::random_coeffs(ring, n, rng));
    ++by_degree[n];
    const AlgElem d = s.d_f();
    if (!s.tail_subalgebra_support(d, n)) {
      out.fail("D_f not constant: " + describe(s));
      continue;
    }
    std::vector<IndexPair> rest = s.all_pairs();
    rest.erase(rest.begin());
    const AlgElem e = s.pair_product(rest);
    if (s.mul(e, s.add(s.root(1), s.root(2))) != d)
      out.fail("E_f (tau_1 + tau_2) != D_f: " + describe(s));
    if (!s.is_fixed_by(Perm::transposition(n, 1, 2), e) || !trivial_transposition_test(s, e, 1, 2))
      out.fail("E_f not a trivial (1 2)-invariant: " + describe(s));
  }
  // n = 3: (t1+t2)(t1+t3)(t2+t3) = e1 e2 - e3 with e1 = -a1, e2 = a2, e3 = -a3.
  for (int trial = 0; trial < kDfN3Instances; ++trial) {
    const Ring ring({std::uniform_int_distribution<std::int64_t>(2, 16)(rng)});
    const auto a = oracle::random_coeffs(ring, 3, rng);
    const SplitAlg s = SplitAlg::construct(ring, a);
    const RingElem expected = ring.sub(a[2], ring.mul(a[0], a[1]));
    if (s.d_f() != s.constant(expected))
      out.fail("D_f != a3 - a1 a2: " + describe(s));
    if (s.mul(s.pair_product({{1, 3}, {2, 3}}), s.add(s.root(1), s.root(2))) != s.d_f())
      out.fail("E_f (tau_1 + tau_2) != D_f: " + describe(s));
  }
  std::ostringstream detail;
  detail << kDfInstances << " random instances (n=2..6:";
  for (std::size_t n = 2; n <= 6; ++n)
    detail << " " << by_degree[n];
  detail << "), plus " << kDfN3Instances << " at n = 3 against a3 - a1 a2";
  out.detail = detail.str();
  return out;
}

void check_witness(const SplitAlg& s, Outcome& out, std::size_t& witnesses) {
  std::optional<WitnessReport> report;
  try {
    report = build_witness(s);
  } catch (const std::exception& e) {
    out.fail(describe(s) + ": " + e.what());
    return;
  }
  if (!report) {
    out.fail("no witness although (*) fails: " + describe(s));
    return;
  }
  ++witnesses;
  const AlgElem& y = report->y;
  const std::size_t n = s.degree();
  for (std::size_t i = 1; i < n; ++i) {
    if (!s.is_fixed_by(Perm::transposition(n, static_cast<int>(i), static_cast<int>(i + 1)), y))
      out.fail("not invariant: " + describe(s));
  }
  if (s.tail_subalgebra_support(y, n))
    out.fail("witness is a constant: " + describe(s));
  if (!module_contains(s, symmetric_invariants(s), y))
    out.fail("outside the invariant module: " + describe(s));
  if (!(stability_products(s, y) == StabilityProducts{true, true}))
    out.fail("stability products: " + describe(s));
}

Outcome criterion5(const std::vector<SplitAlg>& failing) {
  Outcome out;
  std::size_t witnesses = 0;
  for (const SplitAlg& s : failing)
    check_witness(s, out, witnesses);

  std::mt19937_64 rng(5001);
  std::size_t n4_sampled = 0, n4_failing = 0;
  for (std::int64_t m : {2, 4, 6}) {
    const Ring ring({m});
    std::vector<std::vector<RingElem>> polys;
    if (m == 2) {
      oracle::for_each_vector(m, 4, [&](const oracle::Vec& a) {
        std::vector<RingElem> coeffs;
        for (std::int64_t v : a)
          coeffs.push_back(ring.from_int(v));
        polys.push_back(coeffs);
      });
    } else {
      for (int k = 0; k < kWitnessSamplesN4; ++k)
        polys.push_back(oracle::random_coeffs(ring, 4, rng));
    }
    for (const auto& coeffs : polys) {
      const SplitAlg s = SplitAlg::construct(ring, coeffs);
      ++n4_sampled;
      if (condition_star(s).holds) {
        if (build_witness(s).has_value())
          out.fail("witness although (*) holds: " + describe(s));
        continue;
      }
      ++n4_failing;
      check_witness(s, out, witnesses);
    }
  }

  const SplitAlg cube = SplitAlg::construct(Ring({2}), {Ring({2}).zero(), Ring({2}).zero(), Ring({2}).zero()});
  const AlgElem expected = cube.from_terms({{ExpVec{{0, 1, 2}}, Ring({2}).one()}});
  const auto report = build_witness(cube);
  if (!report || report->y != expected)
    out.fail("Z/2, t^3: expected tau_2 tau_3^2, got " + (report ? cube.format(report->y) : std::string("none")));

  out.detail = std::to_string(witnesses) + " witnesses verified (" + std::to_string(failing.size()) +
               " from n = 2, 3; " + std::to_string(n4_failing) + " of " + std::to_string(n4_sampled) +
               " at n = 4); Z/2 t^3 gives " + (report ? cube.format(report->y) : "none");
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::size_t instances = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::int64_t m : {2, 3, 4}) {
      for_each_polynomial(m, n, [&](const SplitAlg& s) {
        ++instances;
        const InvariantModule inv = symmetric_invariants(s);
        const InvariantModule constants = constants_module(s);
        for (std::size_t i = 2; i <= n; ++i) {
          if (!(intersect_with_tail(s, inv, i) == constants))
            out.fail(describe(s) + " at i = " + std::to_string(i));
        }
      });
    }
  }
  out.detail = std::to_string(instances) + " instances, every i >= 2";
  return out;
}

/// A random element of the module: random multiples of each generator.
AlgElem random_member(const SplitAlg& s, const InvariantModule& module, std::mt19937_64& rng) {
  AlgElem x = s.zero();
  for (const AlgElem& g : module_generators(s, module))
    x = s.add(x, s.scale(oracle::random_elem(s.ring(), rng), g));
  return x;
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (std::size_t k = 0; k < n; ++k)
    images[k] = static_cast<int>(k + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_images(images);
}

struct RandomInstance {
  SplitAlg s;
  std::size_t n;
};

RandomInstance random_instance(std::mt19937_64& rng, std::size_t min_n = 1) {
  const Ring ring({std::uniform_int_distribution<std::int64_t>(2, 12)(rng)});
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, 4)(rng);
  return {SplitAlg::construct(ring, oracle::random_coeffs(ring, n, rng)), n};
}

Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(7001);
  for (int k = 0; k < kLawChecks; ++k) {
    const auto [s, n] = random_instance(rng);
    const std::size_t terms = s.rank();
    const AlgElem x = oracle::random_alg_elem(s, terms, rng);
    const AlgElem y = oracle::random_alg_elem(s, terms, rng);
    const AlgElem z = oracle::random_alg_elem(s, terms, rng);
    const bool ok = s.add(x, y) == s.add(y, x) && s.mul(x, y) == s.mul(y, x) &&
                    s.add(s.add(x, y), z) == s.add(x, s.add(y, z)) &&
                    s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)) &&
                    s.mul(x, s.add(y, z)) == s.add(s.mul(x, y), s.mul(x, z)) && s.mul(s.one(), x) == x &&
                    s.add(x, s.neg(x)).is_zero();
    if (!ok)
      out.fail("ring laws: " + describe(s));
  }
  for (int k = 0; k < kLawChecks; ++k) {
    const auto [s, n] = random_instance(rng);
    const AlgElem x = oracle::random_alg_elem(s, s.rank(), rng);
    const AlgElem y = oracle::random_alg_elem(s, s.rank(), rng);
    const Perm sigma = random_perm(n, rng), pi = random_perm(n, rng);
    const AlgElem c = s.constant(oracle::random_elem(s.ring(), rng));
    const bool ok = s.act(sigma, s.mul(x, y)) == s.mul(s.act(sigma, x), s.act(sigma, y)) &&
                    s.act(sigma, s.add(x, y)) == s.add(s.act(sigma, x), s.act(sigma, y)) &&
                    s.act(sigma, c) == c && s.act(sigma * pi, x) == s.act(sigma, s.act(pi, x)) &&
                    s.act(sigma.inverse(), s.act(sigma, x)) == x;
    if (!ok)
      out.fail("act laws: " + describe(s));
  }
  for (int k = 0; k < kLawChecks; ++k) {
    const auto [s, n] = random_instance(rng, 2);
    const std::vector<Perm> g{random_perm(n, rng)};
    const Perm sigma = random_perm(n, rng);
    const std::vector<Perm> conj{sigma * g[0] * sigma.inverse()};
    const AlgElem x = random_member(s, invariant_module(s, g), rng);
    if (!s.is_fixed_by(conj, s.act(sigma, x)))
      out.fail("conjugation: " + describe(s));
    // Reverse inclusion: sigma^-1 maps sigma G sigma^-1 invariants back.
    const AlgElem w = random_member(s, invariant_module(s, conj), rng);
    if (!s.is_fixed_by(g, s.act(sigma.inverse(), w)))
      out.fail("conjugation (reverse): " + describe(s));
  }
  for (int k = 0; k < kLawChecks; ++k) {
    const auto [s, n] = random_instance(rng, 2);
    const std::vector<Perm> g_gens{random_perm(n, rng)};
    const std::vector<Perm> h_gens{g_gens[0], random_perm(n, rng)};
    const AlgElem x = random_member(s, invariant_module(s, g_gens), rng);
    if (!s.is_fixed_by(h_gens, s.orbit_sum(g_gens, h_gens, x)))
      out.fail("orbit sum: " + describe(s));
  }
  for (int k = 0; k < kLawChecks; ++k) {
    const Ring ring({std::uniform_int_distribution<std::int64_t>(2, 12)(rng)});
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto roots = oracle::random_coeffs(ring, n, rng);
    const SplitAlg s = SplitAlg::construct(ring, oracle::coeffs_from_roots(ring, roots));
    const AlgElem x = oracle::random_alg_elem(s, s.rank(), rng);
    const AlgElem y = oracle::random_alg_elem(s, s.rank(), rng);
    const bool ok = s.specialize(s.mul(x, y), roots) == ring.mul(s.specialize(x, roots), s.specialize(y, roots)) &&
                    s.specialize(s.add(x, y), roots) == ring.add(s.specialize(x, roots), s.specialize(y, roots)) &&
                    s.specialize(s.root(static_cast<int>(n)), roots) == roots[n - 1];
    if (!ok)
      out.fail("specialize: " + describe(s));
  }
  out.detail = std::to_string(kLawChecks) +
               " checks each of ring laws, act laws, conjugation, orbit sums, specialization";
  return out;
}

oracle::Vec reduce_rows(std::int64_t m, const oracle::Vec& v) {
  oracle::Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    out[k] = ((v[k] % m) + m) % m;
  return out;
}

void check_matrix(std::int64_t m, std::size_t r, std::size_t c, const oracle::Vec& flat, Outcome& out) {
  std::vector<oracle::Vec> rows(r);
  for (std::size_t i = 0; i < r; ++i)
    rows[i] = oracle::Vec(flat.begin() + static_cast<std::ptrdiff_t>(i * c),
                          flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * c));
  const MatrixOverFactor matrix(m, c, rows);
  const HowellBasis h = howell_form(matrix);
  const std::set<oracle::Vec> expected_span = oracle::span(m, c, rows);
  std::vector<oracle::Vec> h_rows(h.rows().begin(), h.rows().end());
  if (oracle::span(m, c, h_rows) != expected_span)
    out.fail("span mismatch");
  oracle::for_each_vector(m, c, [&](const oracle::Vec& v) {
    if (in_row_span(v, h) != (expected_span.count(v) > 0))
      out.fail("membership mismatch");
  });
  const HowellBasis k = kernel(matrix);
  std::vector<oracle::Vec> k_rows;
  for (const Row& row : k.rows())
    k_rows.push_back(reduce_rows(m, row));
  if (oracle::span(m, c, k_rows) != oracle::kernel(m, c, rows))
    out.fail("kernel mismatch");
}

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(8001);
  std::size_t matrices = 0, exhaustive_shapes = 0, sampled_shapes = 0;
  for (std::int64_t m = 2; m <= 8; ++m) {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (std::size_t c = 1; c <= 3; ++c) {
        const std::size_t entries = r * c;
        double total = 1;
        for (std::size_t e = 0; e < entries; ++e)
          total *= static_cast<double>(m);
        const std::size_t before = out.failures.size();
        if (total <= static_cast<double>(kMatrixSamples)) {
          ++exhaustive_shapes;
          oracle::for_each_vector(m, entries, [&](const oracle::Vec& flat) {
            ++matrices;
            check_matrix(m, r, c, flat, out);
          });
        } else {
          ++sampled_shapes;
          std::uniform_int_distribution<std::int64_t> entry(0, m - 1);
          for (std::size_t k = 0; k < kMatrixSamples; ++k) {
            oracle::Vec flat(entries);
            for (auto& v : flat)
              v = entry(rng);
            ++matrices;
            check_matrix(m, r, c, flat, out);
          }
        }
        if (out.failures.size() != before)
          out.failures.back() += " (m=" + std::to_string(m) + ", " + std::to_string(r) + "x" + std::to_string(c) + ")";
      }
    }
  }
  out.detail = std::to_string(matrices) + " matrices; " + std::to_string(exhaustive_shapes) + " shapes exhaustive, " +
               std::to_string(sampled_shapes) + " sampled";
  return out;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  std::vector<SplitAlg> failing;
  bool all = true;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title << ": " << o.detail
              << " (" << seconds_since(start) << " s)\n";
    for (const std::string& f : o.failures)
      std::cout << "    " << f << "\n";
    std::cout.flush();
  };
  report(1, "n = 2 invariants = A iff (*), m = 2..12", [&] { return criterion1(failing); });
  report(2, "n = 3 invariants = A iff (*), m = 2, 3, 4", [&] { return criterion2(failing); });
  report(3, "n = 2 closed form equals the invariant module", criterion3);
  report(4, "D_f is constant and D_f = E_f (tau_1 + tau_2)", criterion4);
  report(5, "witness soundness", [&] { return criterion5(failing); });
  report(6, "invariants meet the tail subspaces in A", criterion6);
  report(7, "algebraic laws", criterion7);
  report(8, "Howell span, membership and kernel against enumeration", criterion8);
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}

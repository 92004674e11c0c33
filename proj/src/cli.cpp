#include "salg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "salg/errors.hpp"

namespace salg::cli {

using nlohmann::json;

namespace {

constexpr const char* kVerdictHolds = "only invariants are A";
constexpr const char* kVerdictFails = "non-trivial invariants exist";

std::int64_t parse_int(const std::string& token) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + token + "'");
  }
  if (used != token.size())
    throw std::invalid_argument("not an integer: '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

json ideal_json(const Ideal& ideal) { return ideal.divisors; }

json module_json(const SplitAlg& s, const InvariantModule& module) {
  json basis = json::array();
  for (std::size_t k = 0; k < module.factors.size(); ++k) {
    json rows = json::array();
    for (const AlgElem& x : module_generators(s, InvariantModule{{module.factors[k]}}))
      rows.push_back(to_json(s, x));
    basis.push_back({{"modulus", s.ring().modulus(k)}, {"rows", rows}});
  }
  return basis;
}

// The same algebra over the single factor Z/m_k, for per-factor display.
SplitAlg project(const SplitAlg& s, std::size_t k) {
  Ring factor({s.ring().modulus(k)});
  std::vector<RingElem> coeffs;
  for (const RingElem& c : s.coeffs())
    coeffs.push_back(RingElem{{c.residues[k]}});
  return SplitAlg::construct(factor, coeffs);
}

struct Options {
  std::string command;
  std::string ring;
  std::string coeffs;
  std::string format = "text";
  std::string group = "Sn";
  std::string moduli = "2..4";
  std::string degrees = "2";
  std::string roots;
  std::size_t max_degree = 6;
};

SplitAlg load(const Options& opt) {
  if (opt.ring.empty() || opt.coeffs.empty())
    throw std::invalid_argument("--ring and --coeffs are required");
  Ring ring = Ring::parse(opt.ring);
  return SplitAlg::construct(ring, parse_elements(ring, opt.coeffs));
}

std::vector<Perm> parse_group(const SplitAlg& s, const std::string& text) {
  if (text == "Sn" || text == "S_n")
    return symmetric_generators(s.degree());
  std::vector<Perm> gens;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    if (part.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(Perm::parse(s.degree(), part));
  }
  return gens;
}

json header_json(const SplitAlg& s) {
  json coeffs = json::array();
  for (const RingElem& c : s.coeffs())
    coeffs.push_back(to_json(c));
  return {{"ring", s.ring().to_string()}, {"coeffs", coeffs}};
}

void print_header(const SplitAlg& s, std::ostream& out) {
  out << "ring: " << s.ring().to_string() << "\n";
  out << "f: " << s.format_polynomial() << "\n";
}

int cmd_check(const Options& opt, std::ostream& out) {
  const SplitAlg s = load(opt);
  if (!opt.roots.empty()) {
    // Throws invalid_argument when the roots do not factor f.
    s.specialize(s.one(), parse_elements(s.ring(), opt.roots));
  }
  const ConditionStar cond = condition_star(s);
  if (opt.format == "json") {
    json j = header_json(s);
    j.update(condition_json(s, cond));
    if (!opt.roots.empty())
      j["roots_verified"] = true;
    out << j.dump(2) << "\n";
    return kOk;
  }
  const Ring& ring = s.ring();
  print_header(s, out);
  if (!opt.roots.empty())
    out << "roots: verified factorization\n";
  out << "d_f: " << ring.format(cond.d_f) << "\n";
  out << "ann2: " << ring.format(cond.ann2) << "\n";
  out << "annD: " << ring.format(cond.ann_d) << "\n";
  out << "intersection: " << ring.format(cond.intersection) << "\n";
  out << "verdict: " << (cond.holds ? kVerdictHolds : kVerdictFails) << "\n";
  return kOk;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  const SplitAlg s = load(opt);
  if (s.degree() > opt.max_degree)
    return kSizeCap;
  const ConditionStar cond = condition_star(s);
  const std::optional<WitnessReport> report = build_witness(s);
  if (opt.format == "json") {
    json j = header_json(s);
    j.update(condition_json(s, cond));
    j["witness"] = report ? witness_json(s, *report) : json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  print_header(s, out);
  if (!report) {
    out << "condition holds — no witness exists\n";
    return kOk;
  }
  const Ring& ring = s.ring();
  out << "seed: " << ring.format(report->seed) << "\n";
  out << "trail:\n";
  for (const DescentStep& step : report->trail)
    out << "  (" << step.pair.first << "," << step.pair.second << "): " << s.format(step.product) << "\n";
  out << "z: " << s.format(report->z) << "\n";
  out << "pair: (" << report->pair.first << "," << report->pair.second << ")\n";
  out << "x: " << s.format(report->sigma_invariant) << "\n";
  out << "multiplied_by_tau_n: " << (report->multiplied_by_tau_n ? "true" : "false") << "\n";
  out << "y: " << s.format(report->y) << "\n";
  const WitnessVerification& v = report->verification;
  out << std::boolalpha << "verification: invariant=" << v.invariant << " in_A=" << v.in_a
      << " two_x_in_A=" << v.stability.two_x_in_a << " dfx_in_A=" << v.stability.dfx_in_a << "\n";
  return kOk;
}

int cmd_invariants(const Options& opt, std::ostream& out, std::ostream& err) {
  const SplitAlg s = load(opt);
  if (s.degree() > opt.max_degree) {
    err << "error: degree " << s.degree() << " exceeds the size cap " << opt.max_degree << "\n";
    return kSizeCap;
  }
  const InvariantModule module = invariant_module(s, parse_group(s, opt.group));
  if (opt.format == "json") {
    json j = header_json(s);
    j["group"] = opt.group;
    j["basis"] = module_json(s, module);
    json ranks = json::array();
    for (const HowellBasis& b : module.factors)
      ranks.push_back(b.rank());
    j["rank"] = ranks;
    out << j.dump(2) << "\n";
    return kOk;
  }
  print_header(s, out);
  out << "group: " << opt.group << "\n";
  for (std::size_t k = 0; k < module.factors.size(); ++k) {
    const SplitAlg factor = project(s, k);
    const HowellBasis& basis = module.factors[k];
    out << "factor Z/" << s.ring().modulus(k) << ": rank " << basis.rank() << "\n";
    for (const Row& row : basis.rows())
      out << "  " << factor.format(factor.from_dense_row(row, 0)) << "\n";
  }
  return kOk;
}

struct SelfTestJob {
  std::size_t degree;
  std::int64_t modulus;
  SelfTestSummary summary;
};

void run_job(SelfTestJob& job) {
  const Ring ring({job.modulus});
  std::vector<std::int64_t> digits(job.degree, 0);
  while (true) {
    std::vector<RingElem> coeffs;
    for (std::int64_t d : digits)
      coeffs.push_back(ring.from_int(d));
    const SelfTestSummary one = self_test_instance(SplitAlg::construct(ring, coeffs));
    job.summary.instances += one.instances;
    job.summary.holds += one.holds;
    job.summary.mismatches += one.mismatches;
    // Next coefficient tuple in lexicographic order (a_1 most significant).
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == job.modulus)
      digits[--pos] = 0;
    if (pos == 0)
      break;
  }
}

int cmd_selftest(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::vector<std::int64_t> moduli = parse_int_set(opt.moduli);
  const std::vector<std::int64_t> degrees = parse_int_set(opt.degrees);
  std::vector<SelfTestJob> jobs;
  for (std::int64_t d : degrees) {
    if (d < 1)
      throw std::invalid_argument("degrees must be positive");
    if (static_cast<std::size_t>(d) > opt.max_degree) {
      err << "error: degree " << d << " exceeds the size cap " << opt.max_degree << "\n";
      return kSizeCap;
    }
    for (std::int64_t m : moduli) {
      if (m < 2 || m > Ring::kMaxModulus)
        throw std::invalid_argument("modulus out of range: " + std::to_string(m));
      jobs.push_back({static_cast<std::size_t>(d), m, {}});
    }
  }

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> running;
  std::size_t next = 0;
  auto launch = [&] { running.push_back(std::async(std::launch::async, run_job, std::ref(jobs[next++]))); };
  while (next < jobs.size() && running.size() < workers)
    launch();
  for (std::size_t done = 0; done < running.size(); ++done) {
    running[done].get();
    if (next < jobs.size())
      launch();
  }

  SelfTestSummary total;
  json per_job = json::array();
  for (const SelfTestJob& job : jobs) {
    total.instances += job.summary.instances;
    total.holds += job.summary.holds;
    total.mismatches += job.summary.mismatches;
    per_job.push_back({{"degree", job.degree},
                       {"modulus", job.modulus},
                       {"instances", job.summary.instances},
                       {"holds", job.summary.holds},
                       {"mismatches", job.summary.mismatches}});
  }
  if (opt.format == "json") {
    out << json{{"runs", per_job},
                {"instances", total.instances},
                {"holds", total.holds},
                {"mismatches", total.mismatches}}
               .dump(2)
        << "\n";
  } else {
    for (const SelfTestJob& job : jobs) {
      out << "degree " << job.degree << " Z/" << job.modulus << ": instances " << job.summary.instances
          << ", condition holds " << job.summary.holds << ", mismatches " << job.summary.mismatches << "\n";
    }
    out << "instances: " << total.instances << "\n";
    out << "condition holds: " << total.holds << "\n";
    out << "mismatches: " << total.mismatches << "\n";
  }
  return total.mismatches == 0 ? kOk : kSelfTestMismatch;
}

}  // namespace

std::vector<RingElem> parse_elements(const Ring& ring, const std::string& text) {
  std::vector<RingElem> out;
  for (const std::string& token : split(text, ',')) {
    if (token.empty())
      throw std::invalid_argument("empty entry in list '" + text + "'");
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() == 1) {
      out.push_back(ring.from_int(parse_int(parts[0])));
      continue;
    }
    if (parts.size() != ring.num_factors())
      throw std::invalid_argument("entry '" + token + "' does not match the number of ring factors");
    std::vector<std::int64_t> residues;
    for (const std::string& p : parts)
      residues.push_back(parse_int(p));
    out.push_back(ring.from_residues(residues));
  }
  return out;
}

std::vector<std::int64_t> parse_int_set(const std::string& text) {
  std::vector<std::int64_t> out;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const std::int64_t lo = parse_int(text.substr(0, dots));
    const std::int64_t hi = parse_int(text.substr(dots + 2));
    if (hi < lo)
      throw std::invalid_argument("empty range '" + text + "'");
    for (std::int64_t v = lo; v <= hi; ++v)
      out.push_back(v);
  } else {
    for (const std::string& token : split(text, ','))
      out.push_back(parse_int(token));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json to_json(const RingElem& a) { return a.residues; }

json to_json(const SplitAlg& s, const AlgElem& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms())
    terms.push_back({{"exp", exp_of_index(idx, s.degree()).exps}, {"coeff", to_json(c)}});
  return terms;
}

AlgElem elem_from_json(const SplitAlg& s, const json& j) {
  std::vector<std::pair<ExpVec, RingElem>> terms;
  for (const json& t : j)
    terms.emplace_back(ExpVec{t.at("exp").get<std::vector<int>>()},
                       s.ring().from_residues(t.at("coeff").get<std::vector<std::int64_t>>()));
  return s.from_terms(terms);
}

json condition_json(const SplitAlg& s, const ConditionStar& cond) {
  (void)s;
  return {{"d_f", to_json(cond.d_f)},
          {"ann2", ideal_json(cond.ann2)},
          {"annD", ideal_json(cond.ann_d)},
          {"intersection", ideal_json(cond.intersection)},
          {"verdict", cond.holds ? kVerdictHolds : kVerdictFails}};
}

json witness_json(const SplitAlg& s, const WitnessReport& report) {
  json trail = json::array();
  for (const DescentStep& step : report.trail)
    trail.push_back({{"pair", {step.pair.first, step.pair.second}}, {"product", to_json(s, step.product)}});
  const WitnessVerification& v = report.verification;
  return {{"seed", to_json(report.seed)},
          {"trail", trail},
          {"z", to_json(s, report.z)},
          {"pair", {report.pair.first, report.pair.second}},
          {"x", to_json(s, report.sigma_invariant)},
          {"multiplied_by_tau_n", report.multiplied_by_tau_n},
          {"y", to_json(s, report.y)},
          {"verification",
           {{"invariant", v.invariant},
            {"in_A", v.in_a},
            {"two_x_in_A", v.stability.two_x_in_a},
            {"dfx_in_A", v.stability.dfx_in_a}}}};
}

SelfTestSummary self_test_instance(const SplitAlg& s) {
  SelfTestSummary out;
  out.instances = 1;
  const ConditionStar cond = condition_star(s);
  const InvariantModule invariants = symmetric_invariants(s);
  const bool only_constants = invariants == constants_module(s);
  out.holds = cond.holds ? 1 : 0;
  if (only_constants != cond.holds) {
    out.mismatches = 1;
    return out;
  }
  if (!cond.holds) {
    try {
      const std::optional<WitnessReport> report = build_witness(s);
      if (!report || !module_contains(s, invariants, report->y))
        out.mismatches = 1;
    } catch (const VerificationFailure&) {
      out.mismatches = 1;
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Splitting algebras over finite rings: invariants and witnesses", "salg"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool needs_poly) {
    sub->add_option("--ring", opt.ring, "ring spec, e.g. Z/12 or Z/4 x Z/3")->required(needs_poly);
    sub->add_option("--coeffs", opt.coeffs, "a_1,...,a_n of f = t^n + a_1 t^(n-1) + ... + a_n")
        ->required(needs_poly);
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-degree", opt.max_degree, "size cap on the degree n");
  };
  CLI::App* check = app.add_subcommand("check", "decide Ann 2 n Ann D_f = 0");
  add_common(check, true);
  check->add_option("--roots", opt.roots, "claimed roots nu_1,...,nu_n to verify");
  CLI::App* invariants = app.add_subcommand("invariants", "Howell basis of the invariant module");
  add_common(invariants, true);
  invariants->add_option("--group", opt.group, "\"Sn\" or generators like \"(1 2);(1 2 3)\"");
  CLI::App* witness = app.add_subcommand("witness", "construct a non-trivial S_n-invariant");
  add_common(witness, true);
  CLI::App* selftest = app.add_subcommand("selftest", "exhaustive main-theorem equivalence");
  add_common(selftest, false);
  selftest->add_option("--moduli", opt.moduli, "moduli as a..b or a,b,c");
  selftest->add_option("--degrees", opt.degrees, "degrees as d1,d2 or a..b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed())
      return cmd_check(opt, out);
    if (invariants->parsed())
      return cmd_invariants(opt, out, err);
    if (witness->parsed()) {
      int code = cmd_witness(opt, out);
      if (code == kSizeCap)
        err << "error: degree exceeds the size cap " << opt.max_degree << "\n";
      return code;
    }
    return cmd_selftest(opt, out, err);
  } catch (const VerificationFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kSizeCap;
  }
}

}  // namespace salg::cli

#include "freelat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "freelat/ancestor.hpp"
#include "freelat/casebook.hpp"
#include "freelat/errors.hpp"
#include "freelat/finmodel.hpp"
#include "freelat/free_order.hpp"

namespace freelat {

namespace {

struct Config {
  std::string sig_text;
  Signature sig;
  bool json = false;
  std::uint64_t seed = 1;
};

nlohmann::json substitution_json(const VarSubstitution& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& x : m.domain()) j[x] = m(x);
  return j;
}

nlohmann::json derivation_json(const Derivation& d) {
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_json(p));
  return {{"rule", d.rule},
          {"lhs", print_canonical(d.lhs)},
          {"rhs", print_canonical(d.rhs)},
          {"holds", d.holds},
          {"premises", premises}};
}

// ---------------------------------------------------------------- decide

struct DecideArgs {
  std::vector<std::string> leq;
  std::vector<std::string> eq;
  bool trace = false;
};

int run_decide(const Config& cfg, const DecideArgs& a, std::ostream& out, std::ostream& err) {
  if (a.leq.empty() == a.eq.empty()) {
    err << "decide: give exactly one of --leq or --eq\n";
    return exit_code::kUsage;
  }
  const bool is_eq = !a.eq.empty();
  const auto& pair = is_eq ? a.eq : a.leq;
  Term s = parse(pair[0], cfg.sig);
  Term t = parse(pair[1], cfg.sig);

  bool result;
  std::vector<Derivation> traces;
  if (is_eq) {
    auto forward = decide_leq(s, t, a.trace);
    auto backward = decide_leq(t, s, a.trace);
    result = forward.holds && backward.holds;
    if (forward.trace) traces.push_back(*forward.trace);
    if (backward.trace) traces.push_back(*backward.trace);
  } else {
    auto v = decide_leq(s, t, a.trace);
    result = v.holds;
    if (v.trace) traces.push_back(*v.trace);
  }

  if (cfg.json) {
    nlohmann::json j{{"relation", is_eq ? "eq" : "leq"},
                     {"lhs", print_canonical(s)},
                     {"rhs", print_canonical(t)},
                     {"holds", result}};
    if (a.trace) {
      nlohmann::json tr = nlohmann::json::array();
      for (const auto& d : traces) tr.push_back(derivation_json(d));
      j["trace"] = tr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << print_canonical(s) << (is_eq ? " = " : " <= ") << print_canonical(t) << ": "
        << (result ? "holds" : "does not hold") << '\n';
    for (const auto& d : traces) out << format_derivation(d);
  }
  return result ? exit_code::kOk : exit_code::kFalse;
}

// ---------------------------------------------------------------- ancestor

struct AncestorArgs {
  std::string p, q, u, v;
  bool construct_only = false;
  std::string naming = "indexed";
};

int run_ancestor(const Config& cfg, const AncestorArgs& a, std::ostream& out, std::ostream& err) {
  BalancedEquation eq{parse(a.p, cfg.sig), parse(a.q, cfg.sig), parse_substitution(a.u), parse_substitution(a.v)};
  AncestorOptions opts;
  opts.mode = a.construct_only ? AncestorMode::ConstructOnly : AncestorMode::Verify;
  if (a.naming == "indexed")
    opts.naming = ZNaming::Indexed;
  else if (a.naming == "sequential")
    opts.naming = ZNaming::Sequential;
  else if (a.naming == "named")
    opts.naming = ZNaming::Named;
  else {
    err << "ancestor: unknown naming '" << a.naming << "'\n";
    return exit_code::kUsage;
  }

  AncestorInterval r;
  try {
    r = ancestor_interval(eq, opts);
  } catch (const UnbalancedEquation& e) {
    if (cfg.json) out << nlohmann::json{{"error", "UnbalancedEquation"}, {"message", e.what()}}.dump(2) << '\n';
    err << "ancestor: " << e.what() << '\n';
    return exit_code::kUnbalancedEquation;
  } catch (const InvalidEquation& e) {
    if (cfg.json) out << nlohmann::json{{"error", "InvalidEquation"}, {"message", e.what()}}.dump(2) << '\n';
    err << "ancestor: " << e.what() << '\n';
    return exit_code::kInvalidEquation;
  }

  if (cfg.json) {
    nlohmann::json report = nlohmann::json::array();
    for (const auto& c : r.report) report.push_back({{"check", c.name}, {"holds", c.holds}});
    nlohmann::json j{{"z_vars", r.frame.z_vars},
                     {"s0", print_canonical(r.s0)},
                     {"s1", print_canonical(r.s1)},
                     {"sigma", substitution_json(r.sigma)},
                     {"tau", substitution_json(r.tau)},
                     {"gamma", substitution_json(r.gamma)},
                     {"mode", a.construct_only ? "construct-only" : "verify"},
                     {"verified", r.verified},
                     {"report", report}};
    out << j.dump(2) << '\n';
  } else {
    std::string zs;
    for (const auto& z : r.frame.z_vars) zs += (zs.empty() ? "" : ", ") + z;
    out << "Z:     " << zs << '\n'
        << "s0:    " << print_canonical(r.s0) << '\n'
        << "s1:    " << print_canonical(r.s1) << '\n'
        << "sigma: " << format_substitution(r.sigma) << '\n'
        << "tau:   " << format_substitution(r.tau) << '\n'
        << "gamma: " << format_substitution(r.gamma) << '\n'
        << "report:\n";
    for (const auto& c : r.report) out << "  " << c.name << ": " << (c.holds ? "ok" : "FAILED") << '\n';
    if (a.construct_only) out << "(construct-only: order-theoretic checks skipped)\n";
  }
  return r.all_passed() ? exit_code::kOk : exit_code::kFalse;
}

// ---------------------------------------------------------------- refute

struct RefuteArgs {
  std::vector<std::string> leq;
  std::vector<std::string> eq;
  std::size_t max_size = kDefaultSizeCap;
  std::size_t op_trials = 8;
  std::size_t samples = 0;
  std::string lattice_file;
};

int run_refute(const Config& cfg, const RefuteArgs& a, std::ostream& out, std::ostream& err) {
  if (a.leq.empty() == a.eq.empty()) {
    err << "refute: give exactly one of --leq or --eq\n";
    return exit_code::kUsage;
  }
  const bool is_eq = !a.eq.empty();
  const auto& pair = is_eq ? a.eq : a.leq;
  Term s = parse(pair[0], cfg.sig);
  Term t = parse(pair[1], cfg.sig);
  const Relation rel = is_eq ? Relation::Eq : Relation::Leq;

  std::optional<Witness> witness;
  if (!a.lattice_file.empty()) {
    std::ifstream in(a.lattice_file);
    if (!in) {
      err << "refute: cannot open '" << a.lattice_file << "'\n";
      return exit_code::kUsage;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      err << "refute: " << e.what() << '\n';
      return exit_code::kUsage;
    }
    witness = counterexample_in(s, t, rel, lattice_from_json(j));
  } else {
    SearchOptions opts;
    opts.max_size = a.max_size;
    opts.seed = cfg.seed;
    opts.op_trials = a.op_trials;
    opts.samples = a.samples;
    witness = search_counterexample(s, t, rel, opts);
  }

  if (cfg.json) {
    nlohmann::json j{{"relation", is_eq ? "eq" : "leq"}, {"lhs", print_canonical(s)}, {"rhs", print_canonical(t)}};
    j["witness"] = witness ? witness_to_json(*witness) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else if (witness) {
    out << "counterexample in " << (witness->lattice.name().empty() ? "lattice" : witness->lattice.name()) << " (size "
        << witness->lattice.size() << "):";
    for (const auto& [x, e] : witness->assignment) out << ' ' << x << '=' << static_cast<int>(e);
    out << "\n  lhs = " << static_cast<int>(witness->lhs_value) << ", rhs = " << static_cast<int>(witness->rhs_value) << '\n';
  } else {
    out << "no counterexample found up to size " << (a.lattice_file.empty() ? a.max_size : 0) << '\n';
  }
  return witness ? exit_code::kOk : exit_code::kFalse;
}

// ---------------------------------------------------------------- casebook

struct CasebookArgs {
  std::string entry;
  bool list = false;
};

int run_casebook(const Config& cfg, const CasebookArgs& a, std::ostream& out, std::ostream&) {
  if (a.list) {
    for (const auto& n : casebook_entry_names()) out << n << '\n';
    return exit_code::kOk;
  }
  std::vector<std::string> names = a.entry.empty() ? casebook_entry_names() : std::vector<std::string>{a.entry};
  bool all_pass = true;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& name : names) {
    CasebookEntry e = run_entry(name);
    all_pass = all_pass && e.passed();
    if (cfg.json) {
      results.push_back(to_json(e));
      continue;
    }
    out << e.name << ": " << (e.passed() ? "pass" : "FAIL") << "  -- " << e.description << '\n';
    for (const auto& c : e.checks) {
      out << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << ": " << c.actual;
      if (!c.pass) out << "  (expected " << c.expected << ')';
      out << '\n';
    }
  }
  if (cfg.json) out << (names.size() == 1 && !a.entry.empty() ? results[0] : results).dump(2) << '\n';
  return all_pass ? exit_code::kOk : exit_code::kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free lattice engine: order decisions, ancestor intervals, finite counterexamples", "freelat"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--sig", cfg.sig_text, "monotone operators, e.g. \"f/2,g/1\"");
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--seed", cfg.seed, "seed for random operator tables")->capture_default_str();

  DecideArgs decide;
  auto* dec = app.add_subcommand("decide", "decide s <= t or s = t in the free lattice");
  dec->add_option("--leq", decide.leq, "s t")->expected(2);
  dec->add_option("--eq", decide.eq, "s t")->expected(2);
  dec->add_flag("--trace", decide.trace, "print the derivation");

  AncestorArgs anc;
  auto* an = app.add_subcommand("ancestor", "ancestor interval of a balanced equation p(u) ~ q(v)");
  an->add_option("--p", anc.p, "term over dom(u)")->required();
  an->add_option("--q", anc.q, "term over dom(v)")->required();
  an->add_option("--u", anc.u, "substitution \"x1=x, x2=y\"")->required();
  an->add_option("--v", anc.v, "substitution \"y1=x, y2=y\"")->required();
  an->add_flag("--construct-only", anc.construct_only, "build s0/s1 without verification");
  an->add_option("--naming", anc.naming, "pullback variable names: indexed|sequential|named")->capture_default_str();

  RefuteArgs ref;
  auto* rf = app.add_subcommand("refute", "search finite lattices for a counterexample");
  rf->add_option("--leq", ref.leq, "s t")->expected(2);
  rf->add_option("--eq", ref.eq, "s t")->expected(2);
  rf->add_option("--max-size", ref.max_size, "largest lattice size")->capture_default_str()->check(CLI::Range(std::size_t{1}, kHardSizeCap));
  rf->add_option("--op-trials", ref.op_trials, "random operator interpretations per lattice")->capture_default_str();
  rf->add_option("--samples", ref.samples, "random assignments for oversized searches (0 = refuse)")->capture_default_str();
  rf->add_option("--lattice", ref.lattice_file, "check only the lattice in this JSON file");

  CasebookArgs cb;
  auto* cbk = app.add_subcommand("casebook", "run the worked-example casebook");
  cbk->add_option("--entry", cb.entry, "entry name");
  cbk->add_flag("--list", cb.list, "list entry names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_code::kUsage;
  }

  try {
    cfg.sig = Signature::parse(cfg.sig_text);
    if (*dec) return run_decide(cfg, decide, out, err);
    if (*an) return run_ancestor(cfg, anc, out, err);
    if (*rf) return run_refute(cfg, ref, out, err);
    if (*cbk) return run_casebook(cfg, cb, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace freelat

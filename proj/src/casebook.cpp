#include "freelat/casebook.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "freelat/ancestor.hpp"
#include "freelat/errors.hpp"
#include "freelat/finmodel.hpp"
#include "freelat/free_order.hpp"
#include "freelat/substitution.hpp"

namespace freelat {

namespace detail {
extern const char* const kCasebookGoldens;
}

namespace {

std::string pair_var(const std::string& a, const std::string& b) { return "z_" + a + b; }

class EntryBuilder {
 public:
  EntryBuilder(std::string name, std::string description) {
    entry_.name = std::move(name);
    entry_.description = std::move(description);
    goldens_ = &casebook_goldens().at(entry_.name);
  }

  nlohmann::json& inputs() { return entry_.inputs; }

  /// Compares against the stored golden value for `key`.
  void golden(const std::string& key, const std::string& actual) {
    const auto& g = goldens_->at(key);
    const std::string expected = g.at("value").get<std::string>();
    entry_.expected[key] = g;
    entry_.checks.push_back({key, expected, actual, expected == actual});
  }

  /// Golden term: structural equality after parsing the stored text.
  void golden_term(const std::string& key, Term actual, const Signature& sig = {}) {
    const auto& g = goldens_->at(key);
    const std::string expected = g.at("value").get<std::string>();
    entry_.expected[key] = g;
    bool same = parse(expected, sig) == actual;
    entry_.checks.push_back({key, expected, print_canonical(actual), same});
  }

  void expect(const std::string& key, bool expected, bool actual) {
    entry_.checks.push_back({key, expected ? "true" : "false", actual ? "true" : "false", expected == actual});
  }

  CasebookEntry finish() { return std::move(entry_); }

 private:
  CasebookEntry entry_;
  const nlohmann::json* goldens_;
};

std::string join_list(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

bool structurally_identical(Term a, Term b) { return a == b; }

CasebookEntry example_pxxy() {
  EntryBuilder b("example_pxxy", "ancestor of p(x,x,y) ~ q(x,y,y) with p, q uninterpreted ternary operators");
  Signature sig = Signature::parse("p/3,q/3,s/4");
  BalancedEquation eq{parse("p(x1, x2, x3)", sig), parse("q(y1, y2, y3)", sig), parse_substitution("x1=x, x2=x, x3=y"),
                      parse_substitution("y1=x, y2=y, y3=y")};
  b.inputs() = {{"p", print_canonical(eq.p)}, {"q", print_canonical(eq.q)}, {"u", format_substitution(eq.u)},
                {"v", format_substitution(eq.v)}, {"mode", "construct-only"}};

  AncestorOptions opts{AncestorMode::ConstructOnly, ZNaming::Sequential};
  auto interval = ancestor_interval(eq, opts);
  b.golden_term("s0", interval.s0, sig);
  b.golden("s0_text", print_canonical(interval.s0));
  b.golden_term("s1", interval.s1, sig);
  b.golden("z_vars", join_list(interval.frame.z_vars));
  b.golden("z_pairs", join_list(build_frame(eq.u, eq.v, ZNaming::Indexed).z_vars));
  b.expect("structural_checks_pass", true, interval.all_passed());

  // The ancestor read as a quaternary term s(z1, .., z4) and the variable
  // identifications that produce p, q and their common instance.
  Term s = parse("s(z1, z2, z3, z4)", sig);
  auto rename_x = parse_substitution("x1=x, x2=y, x3=z");
  auto rename_y = parse_substitution("y1=x, y2=y, y3=z");
  b.golden_term("p_pattern", apply_substitution(s, compose(rename_x, interval.sigma)), sig);
  b.golden_term("q_pattern", apply_substitution(s, compose(rename_y, interval.tau)), sig);
  b.golden_term("common_instance", apply_substitution(s, interval.gamma), sig);
  b.golden_term("p_instance", apply_substitution(eq.p, eq.u), sig);
  b.golden_term("q_instance", apply_substitution(eq.q, eq.v), sig);
  b.expect("u_after_sigma_is_gamma", true,
           structurally_identical(apply_substitution(apply_substitution(s, interval.sigma), eq.u), apply_substitution(s, interval.gamma)));
  b.expect("v_after_tau_is_gamma", true,
           structurally_identical(apply_substitution(apply_substitution(s, interval.tau), eq.v), apply_substitution(s, interval.gamma)));
  // p(x,y,z) under y:=x, z:=y and q(x,y,z) under z:=y meet in s(x,x,y,y).
  Term p_pattern = apply_substitution(s, compose(rename_x, interval.sigma));
  Term q_pattern = apply_substitution(s, compose(rename_y, interval.tau));
  b.expect("p_pattern_specializes_to_common_instance", true,
           structurally_identical(apply_substitution(p_pattern, parse_substitution("x=x, y=x, z=y")),
                                  apply_substitution(s, interval.gamma)));
  b.expect("q_pattern_specializes_to_common_instance", true,
           structurally_identical(apply_substitution(q_pattern, parse_substitution("x=x, y=y, z=y")),
                                  apply_substitution(s, interval.gamma)));

  // Most general unifier of s(x,y,z,z) and s(x,x,y,z).
  Term left = parse("s(x, y, z, z)", sig);
  Term right = parse("s(x, x, y, z)", sig);
  Term unified_left = apply_substitution(left, parse_substitution("x=x, y=x, z=z"));
  Term unified_right = apply_substitution(right, parse_substitution("x=x, y=z, z=z"));
  b.golden_term("unifier", unified_left, sig);
  b.expect("unifier_agrees", true, structurally_identical(unified_left, unified_right));
  return b.finish();
}

CasebookEntry meet_nonuniqueness() {
  EntryBuilder b("meet_nonuniqueness", "two distinct ancestors of a /\\ b ~ b /\\ a over the pullback of constant maps");
  // t(u1, u2) = u1 /\ u2 with u = (a, b) and v = (b, a); both maps collapse to one point.
  BalancedEquation eq{parse("a /\\ b"), parse("b /\\ a"), parse_substitution("a=w, b=w"), parse_substitution("a=w, b=w")};
  b.inputs() = {{"t", "u1 /\\ u2"}, {"u", "a, b"}, {"v", "b, a"}, {"alpha", format_substitution(eq.u)},
                {"beta", format_substitution(eq.v)}};

  auto frame = build_frame(eq.u, eq.v, ZNaming::Named);
  b.golden("z_vars", join_list(frame.z_vars));

  const std::vector<std::string> us{"a", "b"}, vs{"b", "a"};
  std::vector<Term> diag, cross;
  for (std::size_t i = 0; i < us.size(); ++i) {
    diag.push_back(var(pair_var(us[i], us[i])));
    cross.push_back(var(pair_var(us[i], vs[i])));
  }
  Term c1 = meet(diag);
  Term c2 = meet(cross);
  b.golden_term("candidate_diagonal", c1);
  b.golden_term("candidate_cross", c2);

  b.expect("diagonal_projects_to_p", true, equal(apply_substitution(c1, frame.pi1), eq.p));
  b.expect("diagonal_projects_to_q", true, equal(apply_substitution(c1, frame.pi2), eq.q));
  b.expect("cross_projects_to_p", true, equal(apply_substitution(c2, frame.pi1), eq.p));
  b.expect("cross_projects_to_q", true, equal(apply_substitution(c2, frame.pi2), eq.q));
  b.expect("candidates_equal_in_free_lattice", false, equal(c1, c2));
  auto witness = search_counterexample(c1, c2, Relation::Eq, SearchOptions{5});
  b.expect("candidates_separated_in_finite_lattice", true, witness.has_value());

  auto interval = ancestor_interval(eq, AncestorOptions{AncestorMode::Verify, ZNaming::Named});
  b.expect("interval_verified", true, interval.verified);
  b.expect("diagonal_is_ancestor", true, is_ancestor(c1, eq, interval));
  b.expect("cross_is_ancestor", true, is_ancestor(c2, eq, interval));
  b.expect("interval_is_degenerate", false, equal(interval.s0, interval.s1));
  b.golden_term("s0", interval.s0);
  b.golden_term("s1", interval.s1);
  return b.finish();
}

CasebookEntry concrete_interval() {
  EntryBuilder b("concrete_interval", "verified ancestor interval of a lattice equation collapsing to x");
  BalancedEquation eq{parse("x1 /\\ (x2 \\/ x3)"), parse("y1 /\\ (y1 \\/ y2) /\\ (y1 \\/ y3)"),
                      parse_substitution("x1=x, x2=x, x3=y"), parse_substitution("y1=x, y2=y, y3=y")};
  b.inputs() = {{"p", print_canonical(eq.p)}, {"q", print_canonical(eq.q)}, {"u", format_substitution(eq.u)},
                {"v", format_substitution(eq.v)}, {"mode", "verify"}};
  auto interval = ancestor_interval(eq);
  b.golden("z_vars", join_list(interval.frame.z_vars));
  b.golden_term("s0", interval.s0);
  b.golden_term("s1", interval.s1);
  b.golden("gamma", format_substitution(interval.gamma));
  auto up = apply_substitution(eq.p, eq.u);
  auto vq = apply_substitution(eq.q, eq.v);
  b.golden_term("p_image", up);
  b.golden_term("q_image", vq);
  b.expect("p_image_equals_x", true, equal(up, var("x")));
  b.expect("q_image_equals_x", true, equal(vq, var("x")));
  for (const auto& c : interval.report) b.expect("report:" + c.name, true, c.holds);
  b.expect("verified", true, interval.verified);
  return b.finish();
}

CasebookEntry olsak_renaming() {
  EntryBuilder b("olsak_renaming", "independence steps applied to the six-ary idempotent-variety term, with renaming");
  Signature sig = Signature::parse("t/6,m/2,f/1");
  const std::vector<std::string> u1{"x", "y", "y", "y", "x", "x"}, v1{"y", "x", "y", "x", "y", "x"};
  auto first = independence_step(sig, "t", u1, v1);
  auto rename = parse_substitution("z_xx=x, z_yy=y, z_xy=z, z_yx=u, z_yz=a, z_yu=b, z_xu=c, z_xz=d");
  auto restrict_to = [&](Term t) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& x : variables(t)) pairs.emplace_back(x, rename(x));
    return apply_substitution(t, VarSubstitution(std::move(pairs)));
  };
  b.inputs() = {{"first_u", join_list(u1)}, {"first_v", join_list(v1)}};
  b.golden_term("first_lhs_raw", first.lhs, sig);
  b.golden_term("first_rhs_raw", first.rhs, sig);
  b.golden_term("first_lhs", restrict_to(first.lhs), sig);
  b.golden_term("first_rhs", restrict_to(first.rhs), sig);

  // The third Olsak term pattern equals the first, so it inherits the new right-hand side.
  const std::vector<std::string> u2{"y", "y", "x", "x", "x", "y"}, v2{"z", "u", "y", "u", "z", "x"};
  auto second = independence_step(sig, "t", u2, v2);
  b.golden_term("second_lhs", restrict_to(second.lhs), sig);
  b.golden_term("second_rhs", restrict_to(second.rhs), sig);
  auto rhs_vars = variables(restrict_to(second.rhs));
  b.expect("second_rhs_has_six_distinct_arguments", true, rhs_vars.size() == 6);

  const std::vector<std::string> binary_u{"a", "b"}, binary_v{"b", "a"};
  auto binary = independence_step(sig, "m", binary_u, binary_v);
  b.golden_term("binary_lhs", binary.lhs, sig);
  b.golden_term("binary_rhs", binary.rhs, sig);

  const std::vector<std::string> unary{"a"};
  auto diagonal = independence_step(sig, "f", unary, unary);
  b.golden_term("diagonal", diagonal.lhs, sig);
  b.expect("diagonal_is_identity", true, diagonal.lhs == diagonal.rhs);
  return b.finish();
}

using Runner = std::function<CasebookEntry()>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"example_pxxy", example_pxxy},
      {"meet_nonuniqueness", meet_nonuniqueness},
      {"concrete_interval", concrete_interval},
      {"olsak_renaming", olsak_renaming},
  };
  return r;
}

}  // namespace

bool CasebookEntry::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.pass; });
}

std::vector<std::string> casebook_entry_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

CasebookEntry run_entry(std::string_view name) {
  for (const auto& [n, run] : registry())
    if (n == name) return run();
  throw UnknownEntry("unknown casebook entry '" + std::string(name) + "'");
}

nlohmann::json to_json(const CasebookEntry& entry) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : entry.checks)
    checks.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"name", entry.name},         {"description", entry.description}, {"inputs", entry.inputs},
          {"expected", entry.expected}, {"checks", checks},                 {"verdict", entry.passed() ? "pass" : "fail"}};
}

const nlohmann::json& casebook_goldens() {
  static const nlohmann::json goldens = nlohmann::json::parse(detail::kCasebookGoldens);
  return goldens;
}

IndependenceEquation independence_step(const Signature& sig, std::string_view symbol, std::span<const std::string> u,
                                       std::span<const std::string> v) {
  auto arity = sig.arity(symbol);
  if (!arity) throw SignatureError("undeclared operator '" + std::string(symbol) + "'");
  if (u.size() != *arity || v.size() != *arity)
    throw SignatureError("operator '" + std::string(symbol) + "' has arity " + std::to_string(*arity) + ", got " +
                         std::to_string(u.size()) + " and " + std::to_string(v.size()) + " arguments");
  std::vector<Term> lhs, rhs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    lhs.push_back(var(pair_var(u[i], u[i])));
    rhs.push_back(var(pair_var(u[i], v[i])));
  }
  return {op(sig, symbol, std::move(lhs)), op(sig, symbol, std::move(rhs))};
}

}  // namespace freelat

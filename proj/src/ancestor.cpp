#include "freelat/ancestor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "freelat/errors.hpp"
#include "freelat/free_order.hpp"

namespace freelat {

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

void require_vars_in(Term t, const std::vector<std::string>& domain, const char* what) {
  auto dom = as_set(domain);
  for (const auto& x : variables(t))
    if (!dom.count(x)) throw SubstitutionError(std::string("variable '") + x + "' of " + what + " is not in the domain");
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

PullbackFrame build_frame(const VarSubstitution& u, const VarSubstitution& v, ZNaming naming) {
  if (as_set(u.image()) != as_set(v.image()))
    throw UnbalancedEquation("unbalanced equation: image(u) = {" + join_names(u.image()) + "} but image(v) = {" +
                             join_names(v.image()) + "}");

  std::vector<std::pair<std::string, std::string>> to_x, to_y;
  PullbackFrame frame;
  std::set<std::string> used;
  const auto& xs = u.domain();
  const auto& ys = v.domain();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (u(xs[i]) != v(ys[j])) continue;
      std::string z;
      switch (naming) {
        case ZNaming::Indexed:
          z = "z_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
          break;
        case ZNaming::Sequential:
          z = "z" + std::to_string(frame.z_vars.size() + 1);
          break;
        case ZNaming::Named:
          z = "z_" + xs[i] + ys[j];
          break;
      }
      if (!used.insert(z).second) throw Error("pullback variable name '" + z + "' is ambiguous");
      frame.z_vars.push_back(z);
      to_x.emplace_back(z, xs[i]);
      to_y.emplace_back(z, ys[j]);
    }
  }
  frame.pi1 = VarSubstitution(std::move(to_x), xs);
  frame.pi2 = VarSubstitution(std::move(to_y), ys);
  return frame;
}

IntervalLift::IntervalLift(const VarSubstitution& g) {
  for (const auto& y : g.codomain()) {
    std::vector<Term> pre;
    for (const auto& x : g.preimage(y)) pre.push_back(var(x));
    if (pre.empty()) throw NonSurjective("variable '" + y + "' has an empty preimage");
    hat_.emplace(y, meet(pre));
    check_.emplace(y, join(std::move(pre)));
  }
}

JointPreimage joint_preimage_exists(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2) {
  IntervalLift l1(g1), l2(g2);
  JointPreimage r;
  Term down_to_p = apply_substitution(l2.hat(q), g1);
  Term down_to_q = apply_substitution(l1.hat(p), g2);
  r.first_holds = leq(down_to_p, p);
  r.second_holds = leq(down_to_q, q);
  r.exists = r.first_holds && r.second_holds;
  std::ostringstream diag;
  if (!r.first_holds) diag << "failed: " << print_canonical(down_to_p) << " <= " << print_canonical(p);
  if (!r.second_holds) {
    if (!r.first_holds) diag << "; ";
    diag << "failed: " << print_canonical(down_to_q) << " <= " << print_canonical(q);
  }
  r.diagnostics = diag.str();
  return r;
}

bool joint_preimage_by_bounds(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2) {
  IntervalLift l1(g1), l2(g2);
  return leq(join({l1.hat(p), l2.hat(q)}), meet({l1.check(p), l2.check(q)}));
}

bool joint_preimage_by_cross_bounds(Term p, Term q, const VarSubstitution& g1, const VarSubstitution& g2) {
  IntervalLift l1(g1), l2(g2);
  return leq(l1.hat(p), l2.check(q)) && leq(l2.hat(q), l1.check(p));
}

bool AncestorInterval::all_passed() const {
  return std::all_of(report.begin(), report.end(), [](const Check& c) { return c.holds; });
}

AncestorInterval ancestor_interval(const BalancedEquation& eq, const AncestorOptions& options) {
  require_vars_in(eq.p, eq.u.domain(), "p");
  require_vars_in(eq.q, eq.v.domain(), "q");

  AncestorInterval out;
  out.frame = build_frame(eq.u, eq.v, options.naming);
  const auto& frame = out.frame;

  const bool verify = options.mode == AncestorMode::Verify;
  if (verify && !equal(apply_substitution(eq.p, eq.u), apply_substitution(eq.q, eq.v))) {
    auto jp = joint_preimage_exists(eq.p, eq.q, frame.pi1, frame.pi2);
    throw InvalidEquation("equation does not hold in the free algebra: " + print_canonical(apply_substitution(eq.p, eq.u)) +
                          " != " + print_canonical(apply_substitution(eq.q, eq.v)) +
                          (jp.diagnostics.empty() ? std::string() : "; " + jp.diagnostics));
  }

  IntervalLift l1(frame.pi1), l2(frame.pi2);
  out.s0 = join({l1.hat(eq.p), l2.hat(eq.q)});
  out.s1 = meet({l1.check(eq.p), l2.check(eq.q)});
  out.sigma = frame.pi1;
  out.tau = frame.pi2;
  out.gamma = compose(eq.u, frame.pi1);

  auto& r = out.report;
  r.push_back({"frame_size_bound", frame.z_vars.size() <= eq.u.size() * eq.v.size()});
  r.push_back({"pi1_surjective", frame.pi1.is_surjective()});
  r.push_back({"pi2_surjective", frame.pi2.is_surjective()});
  r.push_back({"gamma_commutes", out.gamma.same_mapping(compose(eq.v, frame.pi2))});

  if (verify) {
    r.push_back({"equation_valid", true});
    r.push_back({"lower_lift_from_q_below_p", leq(apply_substitution(l2.hat(eq.q), frame.pi1), eq.p)});
    r.push_back({"lower_lift_from_p_below_q", leq(apply_substitution(l1.hat(eq.p), frame.pi2), eq.q)});
    r.push_back({"s0_leq_s1", leq(out.s0, out.s1)});
    r.push_back({"sigma_s0_eq_p", equal(apply_substitution(out.s0, out.sigma), eq.p)});
    r.push_back({"tau_s0_eq_q", equal(apply_substitution(out.s0, out.tau), eq.q)});
    r.push_back({"sigma_s1_eq_p", equal(apply_substitution(out.s1, out.sigma), eq.p)});
    r.push_back({"tau_s1_eq_q", equal(apply_substitution(out.s1, out.tau), eq.q)});
    out.verified = out.all_passed();
  }
  return out;
}

bool is_ancestor(Term s, const BalancedEquation& eq, const AncestorInterval& interval) {
  if (!interval.verified) throw Error("membership needs a verified interval");
  require_vars_in(s, interval.frame.z_vars, "the candidate");
  const bool in_bounds = leq(interval.s0, s) && leq(s, interval.s1);
  const bool projects = equal(apply_substitution(s, interval.sigma), eq.p) && equal(apply_substitution(s, interval.tau), eq.q);
  if (in_bounds != projects)
    throw std::logic_error("interval membership and projection identities disagree for " + print_canonical(s));
  return in_bounds;
}

bool is_ancestor(Term s, const BalancedEquation& eq) { return is_ancestor(s, eq, ancestor_interval(eq)); }

}  // namespace freelat

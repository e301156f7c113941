#include "freelat/free_order.hpp"

#include <mutex>
#include <sstream>

namespace freelat {

namespace {

bool is_prime(Term t) { return t.is_variable() || t.is_op(); }

}  // namespace

bool FreeOrder::leq(Term s, Term t) {
  if (s == t) return true;
  const auto key = std::make_pair(s.id(), t.id());
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  bool result = false;
  if (s.is_join()) {
    result = true;
    for (Term si : s.children())
      if (!leq(si, t)) {
        result = false;
        break;
      }
  } else if (t.is_meet()) {
    result = true;
    for (Term ti : t.children())
      if (!leq(s, ti)) {
        result = false;
        break;
      }
  } else if (is_prime(s) && is_prime(t)) {
    if (s.is_op() && t.is_op() && s.name() == t.name() && s.children().size() == t.children().size()) {
      result = true;
      for (std::size_t i = 0; i < s.children().size(); ++i)
        if (!leq(s.children()[i], t.children()[i])) {
          result = false;
          break;
        }
    }
    // distinct variables, variable vs operator, or distinct operators
  } else if (is_prime(s)) {  // t is a join
    for (Term ti : t.children())
      if (leq(s, ti)) {
        result = true;
        break;
      }
  } else if (is_prime(t)) {  // s is a meet
    for (Term si : s.children())
      if (leq(si, t)) {
        result = true;
        break;
      }
  } else {  // meet <= join
    for (Term si : s.children())
      if (leq(si, t)) {
        result = true;
        break;
      }
    if (!result)
      for (Term ti : t.children())
        if (leq(s, ti)) {
          result = true;
          break;
        }
  }

  std::unique_lock lock(mu_);
  memo_.emplace(key, result);
  return result;
}

Derivation FreeOrder::derive(Term s, Term t) {
  Derivation d{"", s, t, false, {}};
  auto all = [&](auto&& goals) {
    d.holds = true;
    for (auto [a, b] : goals) {
      Derivation p = derive(a, b);
      bool ok = p.holds;
      d.premises.push_back(std::move(p));
      if (!ok) {
        d.holds = false;
        break;
      }
    }
  };
  auto any = [&](auto&& goals) {
    d.holds = false;
    for (auto [a, b] : goals) {
      if (leq(a, b)) {
        d.premises.clear();
        d.premises.push_back(derive(a, b));
        d.holds = true;
        return;
      }
      d.premises.push_back(derive(a, b));
    }
  };
  using Goals = std::vector<std::pair<Term, Term>>;

  if (s == t) {
    d.rule = "identical";
    d.holds = true;
  } else if (s.is_join()) {
    d.rule = "join-left";
    Goals g;
    for (Term si : s.children()) g.emplace_back(si, t);
    all(g);
  } else if (t.is_meet()) {
    d.rule = "meet-right";
    Goals g;
    for (Term ti : t.children()) g.emplace_back(s, ti);
    all(g);
  } else if (is_prime(s) && is_prime(t)) {
    if (s.is_op() && t.is_op() && s.name() == t.name() && s.children().size() == t.children().size()) {
      d.rule = "monotone";
      Goals g;
      for (std::size_t i = 0; i < s.children().size(); ++i) g.emplace_back(s.children()[i], t.children()[i]);
      all(g);
    } else {
      d.rule = s.is_variable() && t.is_variable() ? "generator" : "mismatch";
      d.holds = false;
    }
  } else if (is_prime(s)) {
    d.rule = "join-prime";
    Goals g;
    for (Term ti : t.children()) g.emplace_back(s, ti);
    any(g);
  } else if (is_prime(t)) {
    d.rule = "meet-prime";
    Goals g;
    for (Term si : s.children()) g.emplace_back(si, t);
    any(g);
  } else {
    d.rule = "whitman";
    Goals g;
    for (Term si : s.children()) g.emplace_back(si, t);
    for (Term ti : t.children()) g.emplace_back(s, ti);
    any(g);
  }
  return d;
}

OrderVerdict FreeOrder::decide(Term s, Term t, bool with_trace) {
  OrderVerdict v;
  v.holds = leq(s, t);
  if (with_trace) v.trace = derive(s, t);
  return v;
}

std::size_t FreeOrder::cache_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

void FreeOrder::clear() {
  std::unique_lock lock(mu_);
  memo_.clear();
}

FreeOrder& shared_free_order() {
  static FreeOrder instance;
  return instance;
}

static void format_into(std::ostringstream& out, const Derivation& d, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << d.rule << (d.holds ? " [holds] " : " [fails] ")
      << print_canonical(d.lhs) << " <= " << print_canonical(d.rhs) << '\n';
  for (const auto& p : d.premises) format_into(out, p, depth + 1);
}

std::string format_derivation(const Derivation& d) {
  std::ostringstream out;
  format_into(out, d, 0);
  return out.str();
}

bool derivation_is_well_formed(const Derivation& d) {
  const Term s = d.lhs;
  const Term t = d.rhs;
  for (const auto& p : d.premises)
    if (!derivation_is_well_formed(p)) return false;

  auto premise_goals_match = [&](const std::vector<std::pair<Term, Term>>& allowed) {
    for (const auto& p : d.premises) {
      bool found = false;
      for (auto [a, b] : allowed) found = found || (p.lhs == a && p.rhs == b);
      if (!found) return false;
    }
    return true;
  };
  auto conj_ok = [&](std::size_t n_goals) {
    bool any_failed = false;
    for (const auto& p : d.premises) any_failed = any_failed || !p.holds;
    if (d.holds) return !any_failed && d.premises.size() == n_goals;
    return any_failed;
  };
  auto disj_ok = [&](std::size_t n_goals) {
    bool any_held = false;
    for (const auto& p : d.premises) any_held = any_held || p.holds;
    if (d.holds) return any_held;
    return !any_held && d.premises.size() == n_goals;
  };
  std::vector<std::pair<Term, Term>> goals;

  if (d.rule == "identical") return s == t && d.holds && d.premises.empty();
  if (d.rule == "join-left") {
    if (!s.is_join()) return false;
    for (Term si : s.children()) goals.emplace_back(si, t);
    return premise_goals_match(goals) && conj_ok(goals.size());
  }
  if (d.rule == "meet-right") {
    if (!t.is_meet() || s.is_join()) return false;
    for (Term ti : t.children()) goals.emplace_back(s, ti);
    return premise_goals_match(goals) && conj_ok(goals.size());
  }
  if (d.rule == "monotone") {
    if (!s.is_op() || !t.is_op() || s.name() != t.name()) return false;
    for (std::size_t i = 0; i < s.children().size(); ++i) goals.emplace_back(s.children()[i], t.children()[i]);
    return premise_goals_match(goals) && conj_ok(goals.size());
  }
  if (d.rule == "generator") return s.is_variable() && t.is_variable() && s != t && !d.holds && d.premises.empty();
  if (d.rule == "mismatch")
    return is_prime(s) && is_prime(t) && !(s.is_variable() && t.is_variable()) &&
           !(s.is_op() && t.is_op() && s.name() == t.name()) && !d.holds && d.premises.empty();
  if (d.rule == "join-prime") {
    if (!is_prime(s) || !t.is_join()) return false;
    for (Term ti : t.children()) goals.emplace_back(s, ti);
    return premise_goals_match(goals) && disj_ok(goals.size());
  }
  if (d.rule == "meet-prime") {
    if (!s.is_meet() || !is_prime(t)) return false;
    for (Term si : s.children()) goals.emplace_back(si, t);
    return premise_goals_match(goals) && disj_ok(goals.size());
  }
  if (d.rule == "whitman") {
    if (!s.is_meet() || !t.is_join()) return false;
    for (Term si : s.children()) goals.emplace_back(si, t);
    for (Term ti : t.children()) goals.emplace_back(s, ti);
    return premise_goals_match(goals) && disj_ok(goals.size());
  }
  return false;
}

}  // namespace freelat

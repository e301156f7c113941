#pragma once

// Random inputs shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freelat/ancestor.hpp"
#include "freelat/substitution.hpp"
#include "freelat/term.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::string> names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

struct OpSpec {
  std::string symbol;
  std::size_t arity;
};

// Builds a tree with at most `budget` nodes before canonicalization.
inline freelat::Term random_term(Rng& rng, const std::vector<std::string>& vars, std::size_t budget,
                                 const std::vector<OpSpec>& ops = {}) {
  if (budget <= 2) return freelat::var(vars[uniform(rng, 0, vars.size() - 1)]);
  std::size_t choice = uniform(rng, 1, ops.empty() ? 2 : 3);
  if (choice == 3) {
    const auto& o = ops[uniform(rng, 0, ops.size() - 1)];
    if (budget - 1 >= o.arity) {
      std::vector<freelat::Term> args;
      std::size_t left = budget - 1;
      for (std::size_t i = 0; i < o.arity; ++i) {
        std::size_t share = std::max<std::size_t>(1, left / (o.arity - i));
        share = uniform(rng, 1, share);
        args.push_back(random_term(rng, vars, share, ops));
        left -= share;
      }
      return freelat::op(o.symbol, std::move(args));
    }
    return freelat::var(vars[uniform(rng, 0, vars.size() - 1)]);
  }
  std::size_t left = budget - 1;
  std::size_t a = uniform(rng, std::max<std::size_t>(1, left / 4), std::max<std::size_t>(1, left - left / 4 - 1));
  auto l = random_term(rng, vars, a, ops);
  auto r = random_term(rng, vars, left - a, ops);
  return choice == 1 ? freelat::meet({l, r}) : freelat::join({l, r});
}

// A random surjection from `from` onto `onto`; requires |from| >= |onto|.
inline freelat::VarSubstitution random_surjection(Rng& rng, const std::vector<std::string>& from,
                                                  const std::vector<std::string>& onto) {
  std::vector<std::size_t> target(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) target[i] = i < onto.size() ? i : uniform(rng, 0, onto.size() - 1);
  std::shuffle(target.begin(), target.end(), rng);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from[i], onto[target[i]]);
  return freelat::VarSubstitution(std::move(pairs), onto);
}

struct GeneratedEquation {
  freelat::BalancedEquation eq;
  freelat::Term s;  // the term over Z both sides were projected from
};

// Random s over the pullback of random surjections u: X ->> W, v: Y ->> W,
// projected along both legs. Valid and balanced by construction.
inline GeneratedEquation random_balanced_equation(Rng& rng, std::size_t max_vars = 4, std::size_t max_size = 12) {
  auto xs = names("x", uniform(rng, 1, max_vars));
  auto ys = names("y", uniform(rng, 1, max_vars));
  auto ws = names("w", uniform(rng, 1, std::min(xs.size(), ys.size())));
  auto u = random_surjection(rng, xs, ws);
  auto v = random_surjection(rng, ys, ws);
  auto frame = freelat::build_frame(u, v);
  auto s = random_term(rng, frame.z_vars, uniform(rng, std::min<std::size_t>(5, max_size), max_size));
  freelat::BalancedEquation eq{freelat::apply_substitution(s, frame.pi1), freelat::apply_substitution(s, frame.pi2),
                               u, v};
  return {eq, s};
}

}  // namespace testgen

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "freelat/term.hpp"

namespace freelat {

/// One step of a derivation of s <= t (or of its failure).
struct Derivation {
  std::string rule;
  Term lhs;
  Term rhs;
  bool holds = false;
  std::vector<Derivation> premises;
};

struct OrderVerdict {
  bool holds = false;
  std::optional<Derivation> trace;

  explicit operator bool() const noexcept { return holds; }
};

/// Decides the order of the free lattice over a set of generators, extended by
/// freely adjoined monotone operators.
///
/// The rules, tried in this order:
///   identical terms              s <= s
///   join-left    (s1 v .. v sj) <= t    iff every si <= t
///   meet-right   s <= (t1 ^ .. ^ tj)    iff s <= every ti
///   generator    x <= y                 iff x = y (variables)
///   monotone     f(a..) <= f(b..)       iff ai <= bi for all i
///   mismatch     different heads among variables / operators: false
///   join-prime   x <= (t1 v .. v tj)    iff x <= some ti (x a variable or operator term)
///   meet-prime   (s1 ^ .. ^ sj) <= y    iff some si <= y (y a variable or operator term)
///   whitman      (s1 ^ ..) <= (t1 v ..) iff some si <= t or s <= some ti
///
/// Results are memoized on interned term pairs. The memo is a cache guarded by
/// a shared mutex: concurrent callers may duplicate work but never disagree.
class FreeOrder {
 public:
  bool leq(Term s, Term t);
  bool equal(Term s, Term t) { return s == t || (leq(s, t) && leq(t, s)); }
  OrderVerdict decide(Term s, Term t, bool with_trace = false);

  std::size_t cache_size() const;
  void clear();

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
      return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
  };

  Derivation derive(Term s, Term t);

  mutable std::shared_mutex mu_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, PairHash> memo_;
};

/// Process-wide instance backing the free functions below.
FreeOrder& shared_free_order();

inline bool leq(Term s, Term t) { return shared_free_order().leq(s, t); }
inline bool equal(Term s, Term t) { return shared_free_order().equal(s, t); }
inline OrderVerdict decide_leq(Term s, Term t, bool with_trace = false) {
  return shared_free_order().decide(s, t, with_trace);
}

/// Indented text, one goal per line: "<rule> [holds|fails] lhs <= rhs".
std::string format_derivation(const Derivation& d);

/// Checks that each node's rule matches the head shapes of its goal and that
/// its verdict follows from its premises.
bool derivation_is_well_formed(const Derivation& d);

}  // namespace freelat

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freelat {

// Terms are hash-consed: two structurally identical terms always share one
// node, so equality and hashing are O(1). The intern table is guarded by a
// mutex and may be used from several threads; nodes are never freed.

enum class TermKind : std::uint8_t { Variable = 0, OpApp = 1, Meet = 2, Join = 3 };

namespace detail {
struct TermNode;
}

class Term {
 public:
  Term() = default;

  bool valid() const noexcept { return node_ != nullptr; }
  TermKind kind() const noexcept;
  /// Variable name or operator symbol; empty for meets and joins.
  const std::string& name() const noexcept;
  std::span<const Term> children() const noexcept;
  /// Number of nodes in the tree (shared subterms counted once per occurrence).
  std::size_t size() const noexcept;
  std::uint64_t id() const noexcept;

  bool is_variable() const noexcept { return kind() == TermKind::Variable; }
  bool is_op() const noexcept { return kind() == TermKind::OpApp; }
  bool is_meet() const noexcept { return kind() == TermKind::Meet; }
  bool is_join() const noexcept { return kind() == TermKind::Join; }

  friend bool operator==(Term a, Term b) noexcept { return a.node_ == b.node_; }

 private:
  friend struct TermFactory;
  explicit Term(const detail::TermNode* node) : node_(node) {}
  const detail::TermNode* node_ = nullptr;
};

struct TermHash {
  std::size_t operator()(Term t) const noexcept { return static_cast<std::size_t>(t.id()); }
};

/// Structural total order: Variable < OpApp < Meet < Join, then by name,
/// then lexicographically on children.
int compare(Term a, Term b);

struct StructuralLess {
  bool operator()(Term a, Term b) const { return compare(a, b) < 0; }
};

/// Monotone operator symbols with fixed positive arity.
class Signature {
 public:
  Signature() = default;

  /// Parses "f/2,g/1". Whitespace around items is ignored.
  static Signature parse(std::string_view text);

  void add(std::string name, std::size_t arity);
  std::optional<std::size_t> arity(std::string_view name) const;
  bool contains(std::string_view name) const { return arity(name).has_value(); }
  bool empty() const noexcept { return ops_.empty(); }
  const std::map<std::string, std::size_t, std::less<>>& operators() const noexcept { return ops_; }

  /// Throws SignatureError if t uses an undeclared symbol or a wrong arity.
  void validate(Term t) const;

  static bool is_reserved(std::string_view name);

 private:
  std::map<std::string, std::size_t, std::less<>> ops_;
};

Term var(std::string_view name);
/// Builds the canonical meet: flattened, sorted, deduplicated; a single
/// remaining child is returned as is. Throws on an empty list.
Term meet(std::vector<Term> children);
Term join(std::vector<Term> children);
/// Operator application. Arity is checked only against a Signature.
Term op(std::string_view symbol, std::vector<Term> args);
Term op(const Signature& sig, std::string_view symbol, std::vector<Term> args);

/// Rebuilds t bottom-up through the canonical constructors.
Term canonicalize(Term t);

/// Variables occurring in t.
std::set<std::string> variables(Term t);
/// Operator symbols occurring in t with their arities.
std::map<std::string, std::size_t> operator_symbols(Term t);

std::string print_canonical(Term t);

/// Grammar:
///   term    := join
///   join    := meet ( ("\/" | "∨" | "v") meet )*
///   meet    := primary ( ("/\" | "∧" | "^") primary )*
///   primary := ident | ident "(" term ("," term)* ")" | "(" term ")"
Term parse(std::string_view text, const Signature& sig = {});

}  // namespace freelat

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "freelat/term.hpp"

namespace freelat {

using Element = std::uint8_t;

/// Full table of a monotone operation; entry for (a1..ak) at sum ai * n^(k-i).
struct OpTable {
  std::size_t arity = 0;
  std::vector<Element> values;
};

/// A lattice on {0, .., n-1} given by its order relation; meet and join
/// tables are derived on construction.
class FiniteLattice {
 public:
  /// `order` is the row-major n x n relation, order[a*n+b] iff a <= b.
  /// Throws ModelError unless it is a partial order with all binary meets and joins.
  FiniteLattice(std::size_t n, std::vector<bool> order, std::string name = {});

  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  bool leq(Element a, Element b) const { return order_[a * n_ + b]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  const std::vector<bool>& order() const noexcept { return order_; }

  /// Throws ModelError if the table has the wrong shape or is not monotone.
  void set_op(std::string symbol, OpTable table);
  const OpTable* op(std::string_view symbol) const;
  const std::map<std::string, OpTable, std::less<>>& ops() const noexcept { return ops_; }
  void clear_ops() { ops_.clear(); }

  bool is_monotone(const OpTable& table) const;

 private:
  std::size_t n_;
  std::string name_;
  std::vector<bool> order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::map<std::string, OpTable, std::less<>> ops_;
};

/// chain_1 .. chain_6, B2, M3, N5.
FiniteLattice named_lattice(std::string_view name);
std::vector<std::string> named_lattice_names();

inline constexpr std::size_t kDefaultSizeCap = 7;
inline constexpr std::size_t kHardSizeCap = 8;

/// Pairwise non-isomorphic lattices with exactly n elements, n <= kHardSizeCap,
/// labelled along a linear extension (0 is the bottom, n-1 the top).
/// Computed once per size and cached.
const std::vector<FiniteLattice>& enumerate_lattices(std::size_t n);
/// Number of pairwise non-isomorphic partial orders on n elements.
std::size_t count_posets(std::size_t n);

/// Least monotone table above a random sample: each entry becomes the join of
/// the sampled values at all argument tuples below it.
OpTable random_monotone_table(const FiniteLattice& lattice, std::size_t arity, std::mt19937_64& rng);

using Assignment = std::map<std::string, Element, std::less<>>;

/// Throws ModelError on a missing variable or operator table.
Element eval_term(Term t, const FiniteLattice& lattice, const Assignment& assignment);

enum class Relation { Leq, Eq };

inline constexpr std::uint64_t kAssignmentLimit = 10'000'000;

/// Whether the relation holds under every assignment of the variables of s
/// and t. Throws ModelError when size^vars exceeds kAssignmentLimit.
bool holds(Term s, Term t, Relation relation, const FiniteLattice& lattice);

struct SearchOptions {
  std::size_t max_size = kDefaultSizeCap;
  std::uint64_t seed = 1;
  /// Random interpretations tried per lattice when the terms use operators.
  std::size_t op_trials = 8;
  /// When nonzero, lattices with too many assignments are probed with this
  /// many random assignments instead of being refused.
  std::size_t samples = 0;
};

struct Witness {
  FiniteLattice lattice;
  Assignment assignment;
  Element lhs_value;
  Element rhs_value;
};

/// First failing assignment in the given lattice (with its current op tables).
std::optional<Witness> counterexample_in(Term s, Term t, Relation relation, const FiniteLattice& lattice);

/// First counterexample in a fixed order: the named lattices up to max_size,
/// then every enumerated lattice by increasing size; assignments in
/// lexicographic order of the sorted variable list.
std::optional<Witness> search_counterexample(Term s, Term t, Relation relation, const SearchOptions& options = {});

/// {"size": n, "leq": [[bool..]..]} with optional "name".
FiniteLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const FiniteLattice& lattice);
nlohmann::json witness_to_json(const Witness& w);

}  // namespace freelat

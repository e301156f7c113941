#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freelat/term.hpp"

namespace freelat {

/// A finite map between variable sets. The domain keeps its declaration order;
/// the codomain defaults to the image. Immutable after construction.
class VarSubstitution {
 public:
  VarSubstitution() = default;
  explicit VarSubstitution(std::vector<std::pair<std::string, std::string>> pairs,
                           std::vector<std::string> codomain = {});

  static VarSubstitution identity(const std::vector<std::string>& vars);

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::vector<std::string>& codomain() const noexcept { return codomain_; }
  /// Image in order of first appearance along the domain.
  std::vector<std::string> image() const;
  std::vector<std::string> preimage(std::string_view y) const;

  bool contains(std::string_view x) const { return map_.find(x) != map_.end(); }
  /// Throws SubstitutionError when x is not in the domain.
  const std::string& operator()(std::string_view x) const;

  bool is_surjective() const;
  std::size_t size() const noexcept { return domain_.size(); }

  friend bool operator==(const VarSubstitution& a, const VarSubstitution& b) {
    return a.map_ == b.map_ && std::multiset<std::string>(a.codomain_.begin(), a.codomain_.end()) ==
                                   std::multiset<std::string>(b.codomain_.begin(), b.codomain_.end());
  }

  /// Pointwise equality on a common domain, ignoring declared codomains.
  bool same_mapping(const VarSubstitution& other) const { return map_ == other.map_; }

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> codomain_;
  std::map<std::string, std::string, std::less<>> map_;
};

/// outer ∘ inner. The codomain is outer's codomain.
VarSubstitution compose(const VarSubstitution& outer, const VarSubstitution& inner);

/// "x1=x, x2=x, x3=y"
VarSubstitution parse_substitution(std::string_view text);
std::string format_substitution(const VarSubstitution& m);

/// Variable-to-term assignment; its homomorphic extension is apply_term_map.
using TermMap = std::map<std::string, Term, std::less<>>;

/// Homomorphic extension of a variable map, re-canonicalized on the way up.
/// Throws SubstitutionError on a variable outside the map.
Term apply_term_map(Term t, const TermMap& m);
Term apply_substitution(Term t, const VarSubstitution& m);

}  // namespace freelat

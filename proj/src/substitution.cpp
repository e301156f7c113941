#include "freelat/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

#include "freelat/errors.hpp"

namespace freelat {

VarSubstitution::VarSubstitution(std::vector<std::pair<std::string, std::string>> pairs,
                                 std::vector<std::string> codomain) {
  for (auto& [x, y] : pairs) {
    if (!map_.emplace(x, y).second) throw SubstitutionError("variable '" + x + "' mapped twice");
    domain_.push_back(x);
  }
  if (codomain.empty()) {
    codomain_ = image();
  } else {
    std::set<std::string> declared(codomain.begin(), codomain.end());
    if (declared.size() != codomain.size()) throw SubstitutionError("codomain lists a variable twice");
    for (const auto& [x, y] : map_)
      if (!declared.count(y)) throw SubstitutionError("image '" + y + "' of '" + x + "' outside the codomain");
    codomain_ = std::move(codomain);
  }
}

VarSubstitution VarSubstitution::identity(const std::vector<std::string>& vars) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& x : vars) pairs.emplace_back(x, x);
  return VarSubstitution(std::move(pairs));
}

std::vector<std::string> VarSubstitution::image() const {
  std::vector<std::string> out;
  std::set<std::string_view> seen;
  for (const auto& x : domain_) {
    const auto& y = map_.find(x)->second;
    if (seen.insert(y).second) out.push_back(y);
  }
  return out;
}

std::vector<std::string> VarSubstitution::preimage(std::string_view y) const {
  std::vector<std::string> out;
  for (const auto& x : domain_)
    if (map_.find(x)->second == y) out.push_back(x);
  return out;
}

const std::string& VarSubstitution::operator()(std::string_view x) const {
  auto it = map_.find(x);
  if (it == map_.end()) throw SubstitutionError("unmapped variable '" + std::string(x) + "'");
  return it->second;
}

bool VarSubstitution::is_surjective() const { return image().size() == codomain_.size(); }

VarSubstitution compose(const VarSubstitution& outer, const VarSubstitution& inner) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& x : inner.domain()) pairs.emplace_back(x, outer(inner(x)));
  return VarSubstitution(std::move(pairs), outer.codomain());
}

VarSubstitution parse_substitution(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto valid = [](std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'x=y' in substitution", pos);
    auto lhs = trim(item.substr(0, eq));
    auto rhs = trim(item.substr(eq + 1));
    if (!valid(lhs) || !valid(rhs)) throw ParseError("invalid variable name in '" + std::string(item) + "'", pos);
    pairs.emplace_back(std::string(lhs), std::string(rhs));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return VarSubstitution(std::move(pairs));
}

std::string format_substitution(const VarSubstitution& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : m.domain()) {
    if (!first) out << ", ";
    first = false;
    out << x << '=' << m(x);
  }
  return out.str();
}

namespace {

class Rewriter {
 public:
  explicit Rewriter(const TermMap& m) : map_(m) {}

  Term operator()(Term t) {
    if (auto it = done_.find(t); it != done_.end()) return it->second;
    Term out;
    if (t.is_variable()) {
      auto it = map_.find(t.name());
      if (it == map_.end()) throw SubstitutionError("unmapped variable '" + t.name() + "'");
      out = it->second;
    } else {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (Term c : t.children()) kids.push_back((*this)(c));
      if (t.is_op())
        out = op(t.name(), std::move(kids));
      else
        out = t.is_meet() ? meet(std::move(kids)) : join(std::move(kids));
    }
    done_.emplace(t, out);
    return out;
  }

 private:
  const TermMap& map_;
  std::unordered_map<Term, Term, TermHash> done_;
};

}  // namespace

Term apply_term_map(Term t, const TermMap& m) { return Rewriter(m)(t); }

Term apply_substitution(Term t, const VarSubstitution& m) {
  TermMap tm;
  for (const auto& x : m.domain()) tm.emplace(x, var(m(x)));
  return apply_term_map(t, tm);
}

}  // namespace freelat

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "freelat/term.hpp"

namespace freelat {

struct CaseCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CasebookEntry {
  std::string name;
  std::string description;
  nlohmann::json inputs;
  nlohmann::json expected;
  std::vector<CaseCheck> checks;

  bool passed() const;
};

std::vector<std::string> casebook_entry_names();

/// Throws UnknownEntry for an unregistered name.
CasebookEntry run_entry(std::string_view name);

nlohmann::json to_json(const CasebookEntry& entry);

/// Golden values: entry -> key -> {"value", "origin"}.
const nlohmann::json& casebook_goldens();

struct IndependenceEquation {
  Term lhs;
  Term rhs;
};

/// t(z_{u1,u1}, .., z_{un,un}) ~ t(z_{u1,v1}, .., z_{un,vn}) with z_{a,b}
/// spelled "z_ab". Purely syntactic. Throws SignatureError on an arity mismatch.
IndependenceEquation independence_step(const Signature& sig, std::string_view symbol, std::span<const std::string> u,
                                       std::span<const std::string> v);

}  // namespace freelat

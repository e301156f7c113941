#include "freelat/term.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "freelat/errors.hpp"

namespace freelat {

namespace detail {

struct TermNode {
  TermKind kind;
  std::string name;
  std::vector<Term> children;
  std::uint64_t id;
  std::size_t size;
};

}  // namespace detail

namespace {

struct NodeKey {
  TermKind kind;
  std::string name;
  std::vector<std::uint64_t> children;

  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.name) ^ (static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL);
    for (auto c : k.children) h ^= std::hash<std::uint64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class InternTable {
 public:
  const detail::TermNode* intern(TermKind kind, std::string name, std::vector<Term> children) {
    NodeKey key{kind, name, {}};
    key.children.reserve(children.size());
    for (Term c : children) key.children.push_back(c.id());

    std::lock_guard lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    std::size_t size = 1;
    for (Term c : children) size += c.size();
    auto& node = nodes_.emplace_back(detail::TermNode{kind, std::move(name), std::move(children), nodes_.size(), size});
    index_.emplace(std::move(key), &node);
    return &node;
  }

 private:
  std::mutex mu_;
  std::deque<detail::TermNode> nodes_;
  std::unordered_map<NodeKey, const detail::TermNode*, NodeKeyHash> index_;
};

InternTable& table() {
  static InternTable t;
  return t;
}

const std::string& empty_name() {
  static const std::string s;
  return s;
}

}  // namespace

struct TermFactory {
  static Term make(TermKind kind, std::string name, std::vector<Term> children) {
    return Term(table().intern(kind, std::move(name), std::move(children)));
  }
};

TermKind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_ ? node_->name : empty_name(); }
std::span<const Term> Term::children() const noexcept {
  return node_ ? std::span<const Term>(node_->children) : std::span<const Term>();
}
std::size_t Term::size() const noexcept { return node_ ? node_->size : 0; }
std::uint64_t Term::id() const noexcept { return node_ ? node_->id : ~std::uint64_t{0}; }

int compare(Term a, Term b) {
  if (a == b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  auto ca = a.children();
  auto cb = b.children();
  std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- Signature

bool Signature::is_reserved(std::string_view name) { return name == "v"; }

static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

static bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

void Signature::add(std::string name, std::size_t arity) {
  if (!is_identifier(name)) throw SignatureError("invalid operator name '" + name + "'");
  if (is_reserved(name)) throw SignatureError("operator name '" + name + "' is reserved");
  if (arity == 0) throw SignatureError("operator '" + name + "' must have arity >= 1");
  if (contains(name)) throw SignatureError("operator '" + name + "' declared twice");
  ops_.emplace(std::move(name), arity);
}

std::optional<std::size_t> Signature::arity(std::string_view name) const {
  if (auto it = ops_.find(name); it != ops_.end()) return it->second;
  return std::nullopt;
}

Signature Signature::parse(std::string_view text) {
  Signature sig;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (!item.empty()) {
      auto slash = item.find('/');
      if (slash == std::string_view::npos) throw SignatureError("expected name/arity in '" + std::string(item) + "'");
      auto name = trim(item.substr(0, slash));
      auto digits = trim(item.substr(slash + 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw SignatureError("invalid arity in '" + std::string(item) + "'");
      sig.add(std::string(name), std::stoul(std::string(digits)));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return sig;
}

void Signature::validate(Term t) const {
  for (const auto& [name, arity] : operator_symbols(t)) {
    auto declared = this->arity(name);
    if (!declared) throw SignatureError("undeclared operator '" + name + "'");
    if (*declared != arity)
      throw SignatureError("operator '" + name + "' has arity " + std::to_string(*declared) + ", used with " +
                           std::to_string(arity));
  }
}

// ---------------------------------------------------------------- builders

Term var(std::string_view name) {
  if (!is_identifier(name)) throw Error("invalid variable name '" + std::string(name) + "'");
  return TermFactory::make(TermKind::Variable, std::string(name), {});
}

static Term lattice_node(TermKind kind, std::vector<Term> children) {
  if (children.empty()) throw Error(kind == TermKind::Meet ? "empty meet" : "empty join");
  std::vector<Term> flat;
  flat.reserve(children.size());
  for (Term c : children) {
    if (c.kind() == kind) {
      auto grand = c.children();
      flat.insert(flat.end(), grand.begin(), grand.end());
    } else {
      flat.push_back(c);
    }
  }
  std::sort(flat.begin(), flat.end(), StructuralLess{});
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat.front();
  return TermFactory::make(kind, {}, std::move(flat));
}

Term meet(std::vector<Term> children) { return lattice_node(TermKind::Meet, std::move(children)); }
Term join(std::vector<Term> children) { return lattice_node(TermKind::Join, std::move(children)); }

Term op(std::string_view symbol, std::vector<Term> args) {
  if (!is_identifier(symbol) || Signature::is_reserved(symbol))
    throw SignatureError("invalid operator name '" + std::string(symbol) + "'");
  if (args.empty()) throw SignatureError("operator '" + std::string(symbol) + "' applied to no arguments");
  return TermFactory::make(TermKind::OpApp, std::string(symbol), std::move(args));
}

Term op(const Signature& sig, std::string_view symbol, std::vector<Term> args) {
  auto arity = sig.arity(symbol);
  if (!arity) throw SignatureError("undeclared operator '" + std::string(symbol) + "'");
  if (*arity != args.size())
    throw SignatureError("operator '" + std::string(symbol) + "' expects " + std::to_string(*arity) +
                         " arguments, got " + std::to_string(args.size()));
  return op(symbol, std::move(args));
}

Term canonicalize(Term t) {
  switch (t.kind()) {
    case TermKind::Variable:
      return var(t.name());
    case TermKind::OpApp:
    case TermKind::Meet:
    case TermKind::Join: {
      std::vector<Term> kids;
      for (Term c : t.children()) kids.push_back(canonicalize(c));
      if (t.is_op()) return op(t.name(), std::move(kids));
      return t.is_meet() ? meet(std::move(kids)) : join(std::move(kids));
    }
  }
  return t;
}

static void collect(Term t, std::set<std::string>& vars, std::map<std::string, std::size_t>* ops) {
  if (t.is_variable()) {
    vars.insert(t.name());
    return;
  }
  if (ops && t.is_op()) ops->emplace(t.name(), t.children().size());
  for (Term c : t.children()) collect(c, vars, ops);
}

std::set<std::string> variables(Term t) {
  std::set<std::string> out;
  collect(t, out, nullptr);
  return out;
}

std::map<std::string, std::size_t> operator_symbols(Term t) {
  std::set<std::string> vars;
  std::map<std::string, std::size_t> ops;
  collect(t, vars, &ops);
  if (ops.size() > 0) {
    // Conflicting arities for one symbol are reported by validate().
    std::function<void(Term)> check = [&](Term s) {
      if (s.is_op() && ops.at(s.name()) != s.children().size())
        throw SignatureError("operator '" + s.name() + "' used with inconsistent arities");
      for (Term c : s.children()) check(c);
    };
    check(t);
  }
  return ops;
}

// ---------------------------------------------------------------- printing

static void print_to(std::ostringstream& out, Term t, bool parenthesize) {
  switch (t.kind()) {
    case TermKind::Variable:
      out << t.name();
      return;
    case TermKind::OpApp: {
      out << t.name() << '(';
      bool first = true;
      for (Term c : t.children()) {
        if (!first) out << ", ";
        first = false;
        print_to(out, c, false);
      }
      out << ')';
      return;
    }
    case TermKind::Meet:
    case TermKind::Join: {
      const char* sep = t.is_meet() ? " /\\ " : " \\/ ";
      if (parenthesize) out << '(';
      bool first = true;
      for (Term c : t.children()) {
        if (!first) out << sep;
        first = false;
        print_to(out, c, c.is_meet() || c.is_join());
      }
      if (parenthesize) out << ')';
      return;
    }
  }
}

std::string print_canonical(Term t) {
  std::ostringstream out;
  print_to(out, t, false);
  return out.str();
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Meet, Join, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && is_ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", i++});
    } else if (c == '^') {
      out.push_back({Tok::Meet, "^", i++});
    } else if (s.substr(i, 2) == "/\\") {
      out.push_back({Tok::Meet, "/\\", i});
      i += 2;
    } else if (s.substr(i, 2) == "\\/") {
      out.push_back({Tok::Join, "\\/", i});
      i += 2;
    } else if (s.substr(i, 3) == "∧") {
      out.push_back({Tok::Meet, "∧", i});
      i += 3;
    } else if (s.substr(i, 3) == "∨") {
      out.push_back({Tok::Join, "∨", i});
      i += 3;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig) : toks_(std::move(tokens)), sig_(sig) {}

  Term parse_all() {
    Term t = parse_join();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool at_join() const {
    // A bare "v" after a complete operand is the ASCII join token.
    return peek().kind == Tok::Join || (peek().kind == Tok::Ident && peek().text == "v");
  }

  Term parse_join() {
    std::vector<Term> parts{parse_meet()};
    while (at_join()) {
      next();
      parts.push_back(parse_meet());
    }
    return parts.size() == 1 ? parts.front() : join(std::move(parts));
  }

  Term parse_meet() {
    std::vector<Term> parts{parse_primary()};
    while (peek().kind == Tok::Meet) {
      next();
      parts.push_back(parse_primary());
    }
    return parts.size() == 1 ? parts.front() : meet(std::move(parts));
  }

  Term parse_primary() {
    const Token& tok = next();
    if (tok.kind == Tok::LParen) {
      if (peek().kind == Tok::RParen) throw ParseError("empty parentheses", peek().pos);
      Term inner = parse_join();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (tok.kind != Tok::Ident) {
      if (tok.kind == Tok::End) throw ParseError("unexpected end of input", tok.pos);
      throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
    auto arity = sig_.arity(tok.text);
    if (peek().kind == Tok::LParen) {
      if (!arity) throw ParseError("undeclared operator '" + tok.text + "'", tok.pos);
      next();
      if (peek().kind == Tok::RParen) throw ParseError("operator '" + tok.text + "' applied to no arguments", peek().pos);
      std::vector<Term> args{parse_join()};
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(parse_join());
      }
      expect(Tok::RParen, "')' or ','");
      if (args.size() != *arity)
        throw ParseError("operator '" + tok.text + "' expects " + std::to_string(*arity) + " arguments, got " +
                             std::to_string(args.size()),
                         tok.pos);
      return op(tok.text, std::move(args));
    }
    if (arity) throw ParseError("operator '" + tok.text + "' used without arguments", tok.pos);
    return var(tok.text);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"),
                       peek().pos);
    }
    next();
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view text, const Signature& sig) { return Parser(tokenize(text), sig).parse_all(); }

}  // namespace freelat

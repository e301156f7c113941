#include "freelat/finmodel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "freelat/errors.hpp"

namespace freelat {

// ---------------------------------------------------------------- FiniteLattice

FiniteLattice::FiniteLattice(std::size_t n, std::vector<bool> order, std::string name)
    : n_(n), name_(std::move(name)), order_(std::move(order)) {
  if (n == 0) throw ModelError("a lattice needs at least one element");
  if (n > 255) throw ModelError("lattice too large");
  if (order_.size() != n * n) throw ModelError("order matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (!order_[a * n + a]) throw ModelError("order is not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && order_[a * n + b] && order_[b * n + a]) throw ModelError("order is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c)
        if (order_[a * n + b] && order_[b * n + c] && !order_[a * n + c]) throw ModelError("order is not transitive");
    }
  }
  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t m = 0; m < n; ++m) {
        if (order_[m * n + a] && order_[m * n + b]) {
          bool greatest = true;
          for (std::size_t l = 0; l < n && greatest; ++l)
            if (order_[l * n + a] && order_[l * n + b] && !order_[l * n + m]) greatest = false;
          if (greatest) glb = m;
        }
        if (order_[a * n + m] && order_[b * n + m]) {
          bool least = true;
          for (std::size_t l = 0; l < n && least; ++l)
            if (order_[a * n + l] && order_[b * n + l] && !order_[m * n + l]) least = false;
          if (least) lub = m;
        }
      }
      if (!glb || !lub)
        throw ModelError("elements " + std::to_string(a) + " and " + std::to_string(b) + " have no " + (glb ? "join" : "meet"));
      meet_[a * n + b] = static_cast<Element>(*glb);
      join_[a * n + b] = static_cast<Element>(*lub);
    }
  }
  Element bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = meet(bot, static_cast<Element>(a));
    top = join(top, static_cast<Element>(a));
  }
  bottom_ = bot;
  top_ = top;
}

namespace {

std::size_t table_size(std::size_t n, std::size_t arity) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    s *= n;
    if (s > 50'000'000) throw ModelError("operation table too large");
  }
  return s;
}

// Decodes a flat table index into its argument tuple (most significant first).
void decode(std::size_t index, std::size_t n, std::span<Element> args) {
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<Element>(index % n);
    index /= n;
  }
}

std::size_t encode(std::span<const Element> args, std::size_t n) {
  std::size_t index = 0;
  for (Element a : args) index = index * n + a;
  return index;
}

}  // namespace

bool FiniteLattice::is_monotone(const OpTable& table) const {
  std::vector<Element> args(table.arity), moved(table.arity);
  for (std::size_t idx = 0; idx < table.values.size(); ++idx) {
    decode(idx, n_, args);
    for (std::size_t i = 0; i < table.arity; ++i) {
      moved = args;
      for (std::size_t b = 0; b < n_; ++b) {
        if (!leq(args[i], static_cast<Element>(b))) continue;
        moved[i] = static_cast<Element>(b);
        if (!leq(table.values[idx], table.values[encode(moved, n_)])) return false;
      }
    }
  }
  return true;
}

void FiniteLattice::set_op(std::string symbol, OpTable table) {
  if (table.arity == 0) throw ModelError("operation '" + symbol + "' needs arity >= 1");
  if (table.values.size() != table_size(n_, table.arity))
    throw ModelError("operation '" + symbol + "' table has the wrong number of entries");
  for (Element v : table.values)
    if (v >= n_) throw ModelError("operation '" + symbol + "' has a value outside the lattice");
  if (!is_monotone(table)) throw ModelError("operation '" + symbol + "' is not monotone");
  ops_.insert_or_assign(std::move(symbol), std::move(table));
}

const OpTable* FiniteLattice::op(std::string_view symbol) const {
  auto it = ops_.find(symbol);
  return it == ops_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------- named lattices

namespace {

FiniteLattice from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers, std::string name) {
  std::vector<bool> order(n * n, false);
  for (std::size_t a = 0; a < n; ++a) order[a * n + a] = true;
  for (auto [a, b] : covers) order[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (order[a * n + k] && order[k * n + b]) order[a * n + b] = true;
  return FiniteLattice(n, std::move(order), std::move(name));
}

}  // namespace

std::vector<std::string> named_lattice_names() {
  return {"chain_1", "chain_2", "chain_3", "chain_4", "chain_5", "chain_6", "B2", "M3", "N5"};
}

FiniteLattice named_lattice(std::string_view name) {
  if (name.size() == 7 && name.substr(0, 6) == "chain_" && name[6] >= '1' && name[6] <= '6') {
    std::size_t n = static_cast<std::size_t>(name[6] - '0');
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return from_covers(n, covers, std::string(name));
  }
  // 0 is the bottom and n-1 the top throughout.
  if (name == "B2") return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, "B2");
  if (name == "M3") return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, "M3");
  // 0 < 1 < 2 < 4 and 0 < 3 < 4
  if (name == "N5") return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, "N5");
  throw ModelError("unknown lattice '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- enumeration

namespace {

// A labelled poset on at most 8 points: down[i] has bit j set iff j <= i.
using DownSets = std::vector<std::uint16_t>;

std::uint64_t code_of(const DownSets& down, std::span<const int> label) {
  const std::size_t n = down.size();
  std::uint64_t code = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (down[static_cast<std::size_t>(label[q])] >> label[p] & 1U) code |= std::uint64_t{1} << (p * n + q);
  return code;
}

DownSets decode_poset(std::uint64_t code, std::size_t n) {
  DownSets down(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (code >> (p * n + q) & 1U) down[q] |= static_cast<std::uint16_t>(1U << p);
  return down;
}

// Isomorphism-invariant colouring by iterated refinement of (down-degree,
// up-degree) with the colour multisets of strict lower and upper sets.
std::vector<int> refine_colours(const DownSets& down) {
  const std::size_t n = down.size();
  std::vector<std::uint16_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (down[i] >> j & 1U) up[j] |= static_cast<std::uint16_t>(1U << i);

  std::vector<int> colour(n);
  for (std::size_t i = 0; i < n; ++i) colour[i] = std::popcount(down[i]) * 16 + std::popcount(up[i]);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> lower, upper;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (down[i] >> j & 1U) lower.push_back(colour[j]);
        if (up[i] >> j & 1U) upper.push_back(colour[j]);
      }
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      sig[i].push_back(colour[i]);
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), lower.begin(), lower.end());
      sig[i].push_back(-2);
      sig[i].insert(sig[i].end(), upper.begin(), upper.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (std::size_t i = 0; i < n; ++i)
      next[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    std::size_t before = std::set<int>(colour.begin(), colour.end()).size();
    colour = next;
    if (distinct.size() == before) break;
  }
  return colour;
}

// Minimum code over all labellings that list colour classes in colour order.
std::uint64_t canonical_code(const DownSets& down) {
  const std::size_t n = down.size();
  auto colour = refine_colours(down);
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::stable_sort(label.begin(), label.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[label[j]] == colour[label[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, code_of(down, label));
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(label.begin() + static_cast<std::ptrdiff_t>(lo), label.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, b + 1);
    } while (std::next_permutation(label.begin() + static_cast<std::ptrdiff_t>(lo), label.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  return best;
}

bool is_lattice(const DownSets& down) {
  const std::size_t n = down.size();
  if (n == 0) return false;
  std::vector<std::uint16_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (down[i] >> j & 1U) up[j] |= static_cast<std::uint16_t>(1U << i);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint16_t lower = down[a] & down[b];
      std::uint16_t upper = up[a] & up[b];
      bool has_meet = false, has_join = false;
      for (std::size_t m = 0; m < n; ++m) {
        has_meet = has_meet || ((lower >> m & 1U) && down[m] == lower);
        has_join = has_join || ((upper >> m & 1U) && up[m] == upper);
      }
      if (!has_meet || !has_join) return false;
    }
  }
  return true;
}

class PosetCatalogue {
 public:
  const std::vector<std::uint64_t>& codes(std::size_t n) {
    std::lock_guard lock(mu_);
    return codes_locked(n);
  }

  const std::vector<FiniteLattice>& lattices(std::size_t n) {
    std::lock_guard lock(mu_);
    if (auto it = lattices_.find(n); it != lattices_.end()) return it->second;
    std::vector<FiniteLattice> out;
    std::size_t k = 0;
    for (std::uint64_t code : codes_locked(n)) {
      DownSets down = decode_poset(code, n);
      if (!is_lattice(down)) continue;
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return std::popcount(down[a]) < std::popcount(down[b]); });
      std::vector<bool> rel(n * n, false);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) rel[p * n + q] = down[order[q]] >> order[p] & 1U;
      out.emplace_back(n, std::move(rel), "L" + std::to_string(n) + "_" + std::to_string(++k));
    }
    return lattices_.emplace(n, std::move(out)).first->second;
  }

 private:
  const std::vector<std::uint64_t>& codes_locked(std::size_t n) {
    if (auto it = codes_.find(n); it != codes_.end()) return it->second;
    std::vector<std::uint64_t> result;
    if (n == 0) {
      result.push_back(0);
    } else {
      // Every poset on n points arises from one on n-1 points by adding a
      // maximal element above some down-set.
      std::set<std::uint64_t> seen;
      for (std::uint64_t code : codes_locked(n - 1)) {
        DownSets base = decode_poset(code, n - 1);
        for (std::uint32_t subset = 0; subset < (1U << (n - 1)); ++subset) {
          bool closed = true;
          for (std::size_t i = 0; i < n - 1 && closed; ++i)
            if ((subset >> i & 1U) && (base[i] & ~subset)) closed = false;
          if (!closed) continue;
          DownSets ext = base;
          ext.push_back(static_cast<std::uint16_t>(subset | (1U << (n - 1))));
          seen.insert(canonical_code(ext));
        }
      }
      result.assign(seen.begin(), seen.end());
    }
    return codes_.emplace(n, std::move(result)).first->second;
  }

  std::mutex mu_;
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> codes_;
  std::unordered_map<std::size_t, std::vector<FiniteLattice>> lattices_;
};

PosetCatalogue& catalogue() {
  static PosetCatalogue c;
  return c;
}

}  // namespace

const std::vector<FiniteLattice>& enumerate_lattices(std::size_t n) {
  if (n == 0 || n > kHardSizeCap) throw ModelError("lattice size must be in 1.." + std::to_string(kHardSizeCap));
  return catalogue().lattices(n);
}

std::size_t count_posets(std::size_t n) {
  if (n > kHardSizeCap) throw ModelError("poset size must be at most " + std::to_string(kHardSizeCap));
  return catalogue().codes(n).size();
}

// ---------------------------------------------------------------- operations

OpTable random_monotone_table(const FiniteLattice& lattice, std::size_t arity, std::mt19937_64& rng) {
  const std::size_t n = lattice.size();
  OpTable table{arity, std::vector<Element>(table_size(n, arity))};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  for (auto& v : table.values) v = static_cast<Element>(pick(rng));

  std::vector<Element> args(arity), lower(arity);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t idx = 0; idx < table.values.size(); ++idx) {
      decode(idx, n, args);
      for (std::size_t i = 0; i < arity; ++i) {
        lower = args;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == args[i] || !lattice.leq(static_cast<Element>(c), args[i])) continue;
          lower[i] = static_cast<Element>(c);
          Element joined = lattice.join(table.values[idx], table.values[encode(lower, n)]);
          if (joined != table.values[idx]) {
            table.values[idx] = joined;
            changed = true;
          }
        }
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------- evaluation

namespace {

// Terms flattened to straight-line code over a shared DAG.
class Program {
 public:
  Program(std::span<const Term> roots, std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (Term r : roots) roots_.push_back(emit(r));
  }

  const std::vector<std::string>& vars() const noexcept { return vars_; }

  void bind(const FiniteLattice& lattice) {
    for (auto& ins : code_) {
      if (ins.kind != TermKind::OpApp) continue;
      ins.table = lattice.op(ins.symbol);
      if (!ins.table) throw ModelError("no table for operator '" + ins.symbol + "'");
      if (ins.table->arity != ins.args.size()) throw ModelError("table for '" + ins.symbol + "' has the wrong arity");
    }
  }

  // values[0..vars) are the assignment; returns the value of each root.
  void run(const FiniteLattice& lattice, std::span<const Element> assignment, std::vector<Element>& slots) const {
    slots.resize(code_.size());
    const std::size_t n = lattice.size();
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const auto& ins = code_[i];
      switch (ins.kind) {
        case TermKind::Variable:
          slots[i] = assignment[ins.var];
          break;
        case TermKind::Meet: {
          Element acc = slots[ins.args[0]];
          for (std::size_t k = 1; k < ins.args.size(); ++k) acc = lattice.meet(acc, slots[ins.args[k]]);
          slots[i] = acc;
          break;
        }
        case TermKind::Join: {
          Element acc = slots[ins.args[0]];
          for (std::size_t k = 1; k < ins.args.size(); ++k) acc = lattice.join(acc, slots[ins.args[k]]);
          slots[i] = acc;
          break;
        }
        case TermKind::OpApp: {
          std::size_t idx = 0;
          for (std::size_t a : ins.args) idx = idx * n + slots[a];
          slots[i] = ins.table->values[idx];
          break;
        }
      }
    }
  }

  std::size_t root(std::size_t k) const { return roots_[k]; }

 private:
  struct Instr {
    TermKind kind;
    std::size_t var = 0;
    std::vector<std::size_t> args;
    std::string symbol;
    const OpTable* table = nullptr;
  };

  std::size_t emit(Term t) {
    if (auto it = index_.find(t); it != index_.end()) return it->second;
    Instr ins;
    ins.kind = t.kind();
    if (t.is_variable()) {
      auto it = std::find(vars_.begin(), vars_.end(), t.name());
      if (it == vars_.end()) throw ModelError("variable '" + t.name() + "' is not assigned");
      ins.var = static_cast<std::size_t>(it - vars_.begin());
    } else {
      for (Term c : t.children()) ins.args.push_back(emit(c));
      if (t.is_op()) ins.symbol = t.name();
    }
    code_.push_back(std::move(ins));
    index_.emplace(t, code_.size() - 1);
    return code_.size() - 1;
  }

  std::vector<std::string> vars_;
  std::vector<Instr> code_;
  std::vector<std::size_t> roots_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
};

std::vector<std::string> union_vars(Term s, Term t) {
  auto a = variables(s);
  auto b = variables(t);
  a.insert(b.begin(), b.end());
  return {a.begin(), a.end()};
}

bool related(const FiniteLattice& l, Relation r, Element a, Element b) {
  return r == Relation::Leq ? l.leq(a, b) : a == b;
}

std::uint64_t assignment_count(std::size_t n, std::size_t vars) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    count *= n;
    if (count > kAssignmentLimit) return kAssignmentLimit + 1;
  }
  return count;
}

// First failing assignment, exhaustively or by sampling.
std::optional<std::vector<Element>> find_failure(Program& prog, const FiniteLattice& lattice, Relation relation,
                                                 std::size_t samples, std::mt19937_64* rng) {
  prog.bind(lattice);
  const std::size_t v = prog.vars().size();
  const std::size_t n = lattice.size();
  std::vector<Element> assign(v, 0), slots;
  auto fails = [&] {
    prog.run(lattice, assign, slots);
    return !related(lattice, relation, slots[prog.root(0)], slots[prog.root(1)]);
  };
  if (assignment_count(n, v) > kAssignmentLimit) {
    if (samples == 0 || !rng)
      throw ModelError("too many assignments (" + std::to_string(n) + "^" + std::to_string(v) +
                       "); use a smaller lattice or enable sampling");
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& a : assign) a = static_cast<Element>(pick(*rng));
      if (fails()) return assign;
    }
    return std::nullopt;
  }
  while (true) {
    if (fails()) return assign;
    std::size_t k = v;
    while (k > 0) {
      --k;
      if (++assign[k] < n) break;
      assign[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (v == 0) return std::nullopt;
  }
}

}  // namespace

Element eval_term(Term t, const FiniteLattice& lattice, const Assignment& assignment) {
  auto vs = variables(t);
  std::vector<std::string> vars(vs.begin(), vs.end());
  std::vector<Element> values;
  for (const auto& x : vars) {
    auto it = assignment.find(x);
    if (it == assignment.end()) throw ModelError("variable '" + x + "' is not assigned");
    if (it->second >= lattice.size()) throw ModelError("value of '" + x + "' is outside the lattice");
    values.push_back(it->second);
  }
  Term roots[] = {t};
  Program prog(roots, vars);
  prog.bind(lattice);
  std::vector<Element> slots;
  prog.run(lattice, values, slots);
  return slots[prog.root(0)];
}

bool holds(Term s, Term t, Relation relation, const FiniteLattice& lattice) {
  Term roots[] = {s, t};
  Program prog(roots, union_vars(s, t));
  return !find_failure(prog, lattice, relation, 0, nullptr).has_value();
}

static Witness make_witness(Term s, Term t, const FiniteLattice& lattice, const std::vector<std::string>& vars,
                            const std::vector<Element>& values) {
  Witness w{lattice, {}, 0, 0};
  for (std::size_t k = 0; k < vars.size(); ++k) w.assignment.emplace(vars[k], values[k]);
  w.lhs_value = eval_term(s, lattice, w.assignment);
  w.rhs_value = eval_term(t, lattice, w.assignment);
  return w;
}

std::optional<Witness> counterexample_in(Term s, Term t, Relation relation, const FiniteLattice& lattice) {
  Term roots[] = {s, t};
  Program prog(roots, union_vars(s, t));
  if (auto bad = find_failure(prog, lattice, relation, 0, nullptr)) return make_witness(s, t, lattice, prog.vars(), *bad);
  return std::nullopt;
}

std::optional<Witness> search_counterexample(Term s, Term t, Relation relation, const SearchOptions& options) {
  if (options.max_size > kHardSizeCap) throw ModelError("max size exceeds the hard cap of " + std::to_string(kHardSizeCap));
  auto ops = operator_symbols(s);
  for (const auto& [name, arity] : operator_symbols(t)) {
    auto [it, fresh] = ops.emplace(name, arity);
    if (!fresh && it->second != arity) throw ModelError("operator '" + name + "' used with two arities");
  }

  std::vector<FiniteLattice> candidates;
  for (const auto& name : named_lattice_names()) {
    auto l = named_lattice(name);
    if (l.size() <= options.max_size) candidates.push_back(std::move(l));
  }
  for (std::size_t n = 1; n <= options.max_size; ++n)
    for (const auto& l : enumerate_lattices(n)) candidates.push_back(l);

  Term roots[] = {s, t};
  Program prog(roots, union_vars(s, t));
  const std::size_t trials = ops.empty() ? 1 : std::max<std::size_t>(options.op_trials, 1);
  for (std::size_t li = 0; li < candidates.size(); ++li) {
    FiniteLattice& lattice = candidates[li];
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(li), static_cast<std::uint64_t>(trial)};
      std::mt19937_64 rng(seq);
      if (!ops.empty()) {
        lattice.clear_ops();
        for (const auto& [name, arity] : ops) lattice.set_op(name, random_monotone_table(lattice, arity, rng));
      }
      if (auto bad = find_failure(prog, lattice, relation, options.samples, &rng))
        return make_witness(s, t, lattice, prog.vars(), *bad);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- JSON

FiniteLattice lattice_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("size").get<std::size_t>();
    const auto& rows = j.contains("leq") ? j.at("leq") : j.at("leq_matrix");
    if (!rows.is_array() || rows.size() != n) throw ModelError("'leq' must have " + std::to_string(n) + " rows");
    std::vector<bool> order;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw ModelError("every 'leq' row must have " + std::to_string(n) + " entries");
      for (const auto& cell : row) {
        if (cell.is_boolean())
          order.push_back(cell.get<bool>());
        else if (cell.is_number_integer())
          order.push_back(cell.get<int>() != 0);
        else
          throw ModelError("'leq' entries must be booleans");
      }
    }
    FiniteLattice l(n, std::move(order), j.value("name", std::string{}));
    if (j.contains("ops")) {
      for (const auto& [name, spec] : j.at("ops").items()) {
        OpTable table{spec.at("arity").get<std::size_t>(), {}};
        for (const auto& v : spec.at("values")) table.values.push_back(v.get<Element>());
        l.set_op(name, std::move(table));
      }
    }
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed lattice JSON: ") + e.what());
  }
}

nlohmann::json lattice_to_json(const FiniteLattice& l) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < l.size(); ++b) row.push_back(l.leq(static_cast<Element>(a), static_cast<Element>(b)));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"size", l.size()}, {"leq", rows}};
  if (!l.name().empty()) j["name"] = l.name();
  if (!l.ops().empty()) {
    nlohmann::json ops = nlohmann::json::object();
    for (const auto& [name, table] : l.ops()) ops[name] = {{"arity", table.arity}, {"values", table.values}};
    j["ops"] = std::move(ops);
  }
  return j;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json lattice = lattice_to_json(w.lattice);
  lattice["leq_matrix"] = lattice["leq"];
  lattice.erase("leq");
  nlohmann::json assignment = nlohmann::json::object();
  for (const auto& [x, e] : w.assignment) assignment[x] = e;
  return {{"lattice", lattice}, {"assignment", assignment}, {"lhs_value", w.lhs_value}, {"rhs_value", w.rhs_value}};
}

}  // namespace freelat

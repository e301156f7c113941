#pragma once

// Brute-force count of lattices up to isomorphism. Shares no code with the
// library enumerator: every order on {0..n-1} refining the natural order is
// tried (any poset has a linear extension, so each class appears), and
// isomorphism is decided by minimizing the relation over all permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline bool is_lattice_order(int n, const std::vector<bool>& le) {
  auto at = [&](int a, int b) { return bool(le[a * n + b]); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(a, b) && at(b, c) && !at(a, c)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // least upper bound and greatest lower bound
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (at(a, c) && at(b, c)) {
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (at(a, d) && at(b, d) && !at(c, d)) least = false;
          if (least) lub = c;
        }
        if (at(c, a) && at(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (at(d, a) && at(d, b) && !at(d, c)) greatest = false;
          if (greatest) glb = c;
        }
      }
      if (lub < 0 || glb < 0) return false;
    }
  return true;
}

inline std::uint64_t relation_code(int n, const std::vector<bool>& le, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) code = (code << 1) | (le[perm[a] * n + perm[b]] ? 1u : 0u);
  return code;
}

inline std::size_t count_lattices(int n) {
  if (n <= 0) return 0;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::set<std::uint64_t> classes;
  std::vector<bool> le(n * n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::fill(le.begin(), le.end(), false);
    for (int a = 0; a < n; ++a) le[a * n + a] = true;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) le[slots[k].first * n + slots[k].second] = true;
    if (!is_lattice_order(n, le)) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, relation_code(n, le, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace oracle

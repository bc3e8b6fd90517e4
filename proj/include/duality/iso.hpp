#pragma once

#include <optional>
#include <vector>

#include "duality/dual_space.hpp"
#include "duality/ominus_algebra.hpp"

namespace duality {

namespace detail {

/// Backtracking extension of a partial bijection a -> b over elements in
/// ascending index order; `compatible` vetoes assignments, `complete` checks
/// the finished map. Deterministic search order, first hit wins.
template <typename Compatible, typename Complete>
std::optional<std::vector<int>> find_bijection(int n, Compatible compatible,
                                               Complete complete) {
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  int pos = 0;
  std::vector<int> choice(n, -1);
  while (pos >= 0) {
    if (pos == n) {
      if (complete(map)) return map;
      --pos;
      continue;
    }
    int start = choice[pos] + 1;
    if (choice[pos] >= 0) {
      used[choice[pos]] = false;
      map[pos] = -1;
      choice[pos] = -1;
    }
    bool advanced = false;
    for (int cand = start; cand < n; ++cand) {
      if (used[cand] || !compatible(map, pos, cand)) continue;
      choice[pos] = cand;
      map[pos] = cand;
      used[cand] = true;
      ++pos;
      advanced = true;
      break;
    }
    if (!advanced) --pos;
  }
  return std::nullopt;
}

}  // namespace detail

/// Isomorphism search between algebras by backtracking order-embedding
/// extension with the operation checked on the completed assignments.
/// Deterministic order; capped at 64 elements.
inline std::optional<std::vector<int>> find_algebra_isomorphism(
    const OminusAlgebra& a, const OminusAlgebra& b) {
  const int n = a.n();
  if (n != b.n()) return std::nullopt;
  if (n > 64) throw SizeCapError("isomorphism search capped at 64 elements");
  auto compatible = [&](const std::vector<int>& map, int e, int cand) {
    for (int f = 0; f < e; ++f) {
      if (a.lattice.leq(e, f) != b.lattice.leq(cand, map[f])) return false;
      if (a.lattice.leq(f, e) != b.lattice.leq(map[f], cand)) return false;
      // operation entries whose operands and result are all placed
      for (int g = 0; g <= e; ++g) {
        const int x = (g == e) ? cand : map[g];
        const int efg = a.sub(e, g), gfe = a.sub(g, e);
        if (map[efg] >= 0 || efg == e)
          if (b.sub(cand, x) != (efg == e ? cand : map[efg])) return false;
        if (map[gfe] >= 0 || gfe == e)
          if (b.sub(x, cand) != (gfe == e ? cand : map[gfe])) return false;
      }
    }
    return true;
  };
  auto complete = [&](const std::vector<int>& map) {
    for (int e = 0; e < n; ++e)
      for (int f = 0; f < n; ++f)
        if (map[a.sub(e, f)] != b.sub(map[e], map[f])) return false;
    return true;
  };
  return detail::find_bijection(n, compatible, complete);
}

/// Isomorphism of spaces as tuples (X, i, +, *): an order isomorphism that
/// transports i and both partial operations, domains included.
inline std::optional<std::vector<int>> find_space_isomorphism(
    const OminusSpace& s1, const OminusSpace& s2) {
  const int n = s1.n();
  if (n != s2.n()) return std::nullopt;
  auto compatible = [&](const std::vector<int>& map, int x, int cand) {
    for (int y = 0; y < x; ++y) {
      if (s1.x.leq(x, y) != s2.x.leq(cand, map[y])) return false;
      if (s1.x.leq(y, x) != s2.x.leq(map[y], cand)) return false;
    }
    return true;
  };
  auto complete = [&](const std::vector<int>& map) {
    for (int x = 0; x < n; ++x) {
      if (map[s1.i[x]] != s2.i[map[x]]) return false;
      for (int y = 0; y < n; ++y) {
        if (s1.plus.defined(x, y) != s2.plus.defined(map[x], map[y]))
          return false;
        if (s1.plus.defined(x, y) &&
            map[s1.plus.at(x, y)] != s2.plus.at(map[x], map[y]))
          return false;
        if (s1.star.defined(x, y) != s2.star.defined(map[x], map[y]))
          return false;
        if (s1.star.defined(x, y) &&
            map[s1.star.at(x, y)] != s2.star.at(map[x], map[y]))
          return false;
      }
    }
    return true;
  };
  return detail::find_bijection(n, compatible, complete);
}

}  // namespace duality

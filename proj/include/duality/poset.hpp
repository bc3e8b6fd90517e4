#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality/report.hpp"

namespace duality {

/// Subsets of a carrier with at most 64 elements, as bit masks.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Lowest set bit index, or -1 for the empty mask.
inline int first_bit(Mask m) { return m == 0 ? -1 : std::countr_zero(m); }

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalInvariantBroken : std::logic_error {
  using std::logic_error::logic_error;
};

/// A finite poset on elements 0..n-1. The relation is stored as bit rows:
/// up[a] is the set of b with a <= b. Labels are optional display names.
struct Poset {
  int n = 0;
  std::vector<Mask> up;
  std::vector<std::string> labels;

  bool leq(int a, int b) const { return has_bit(up[a], b); }
  Mask upset(int a) const { return up[a]; }

  Mask downset(int a) const {
    Mask d = 0;
    for (int b = 0; b < n; ++b)
      if (leq(b, a)) d |= bit(b);
    return d;
  }

  bool is_downclosed(Mask s) const {
    for (int a = 0; a < n; ++a)
      if (has_bit(s, a) && (downset(a) & ~s)) return false;
    return true;
  }

  /// b covers a: a < b with nothing strictly between.
  bool covers(int a, int b) const {
    if (a == b || !leq(a, b)) return false;
    for (int c = 0; c < n; ++c)
      if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
  }

  std::string label(int a) const {
    return labels.empty() ? std::to_string(a) : labels[a];
  }
};

inline Poset chain_poset(int n) {
  Poset p;
  p.n = n;
  p.up.resize(n);
  for (int a = 0; a < n; ++a) p.up[a] = full_mask(n) & ~(bit(a) - 1);
  return p;
}

inline Poset antichain_poset(int n) {
  Poset p;
  p.n = n;
  p.up.resize(n);
  for (int a = 0; a < n; ++a) p.up[a] = bit(a);
  return p;
}

/// Builds a poset from an explicit relation given as pairs (a, b) meaning
/// a <= b. The relation is taken as given; use validate_poset to check it.
inline Poset poset_from_pairs(int n,
                              const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0 || n > 64) throw SizeCapError("poset size must be in 0..64");
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::out_of_range("relation pair out of range");
    p.up[a] |= bit(b);
  }
  return p;
}

/// Checks that leq is a partial order and that labels, if present, are
/// distinct and of the right length. Report-style: never throws.
inline Report validate_poset(const Poset& p) {
  Report r;
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.n && ok; ++a)
      if (!p.leq(a, a)) {
        ok = false;
        w = "element " + std::to_string(a);
      }
    r.record("reflexivity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.n && ok; ++a)
      for (int b = 0; b < p.n && ok; ++b)
        if (a != b && p.leq(a, b) && p.leq(b, a)) {
          ok = false;
          w = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
    r.record("antisymmetry", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.n && ok; ++a)
      for (int b = 0; b < p.n && ok; ++b)
        for (int c = 0; c < p.n && ok; ++c)
          if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c)) {
            ok = false;
            w = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")";
          }
    r.record("transitivity", ok, w);
  }
  if (!p.labels.empty()) {
    bool ok = static_cast<int>(p.labels.size()) == p.n;
    std::string w = ok ? "" : "label count != size";
    for (size_t i = 0; ok && i < p.labels.size(); ++i)
      for (size_t j = i + 1; ok && j < p.labels.size(); ++j)
        if (p.labels[i] == p.labels[j]) {
          ok = false;
          w = "duplicate label \"" + p.labels[i] + "\"";
        }
    r.record("labels", ok, w);
  }
  return r;
}

/// All down-sets of p as masks, in ascending numeric order.
/// Materializes 2^n candidates; capped at 20 points.
inline std::vector<Mask> all_downsets(const Poset& p) {
  if (p.n > 20) throw SizeCapError("down-set lattice capped at 20 points");
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(p.n); ++s) {
    if (p.n == 0 && s > 0) break;
    if (p.is_downclosed(s)) out.push_back(s);
    if (s == full_mask(p.n)) break;
  }
  return out;
}

}  // namespace duality

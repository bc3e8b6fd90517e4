#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "duality/lattice.hpp"
#include "duality/ominus_algebra.hpp"
#include "duality/poset.hpp"

namespace duality {

inline DistLattice chain_lattice(int n) { return make_lattice(chain_poset(n)); }

/// Powerset lattice on `atoms` atoms; element index equals its atom mask.
inline DistLattice boolean_lattice(int atoms) {
  const int n = 1 << atoms;
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & ~b) == 0) p.up[a] |= bit(b);
  return make_lattice(p);
}

/// Boolean set difference a \ b on the powerset of `atoms` atoms.
inline OminusAlgebra boolean_difference(int atoms, int max_elems = 32) {
  if (atoms < 0 || (1 << atoms) > max_elems)
    throw SizeCapError("boolean_difference: size cap exceeded");
  OminusAlgebra a;
  a.lattice = boolean_lattice(atoms);
  const int n = a.lattice.n();
  a.ominus = BinaryOp::zeros(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.ominus.at(x, y) = x & ~y;
  return a;
}

/// The n-element Lukasiewicz chain 0 < 1/(n-1) < ... < 1 with the truncated
/// difference max(a-b, 0).
inline OminusAlgebra mv_chain(int n, int max_elems = 64) {
  if (n < 2) throw std::invalid_argument("mv_chain needs at least 2 elements");
  if (n > max_elems) throw SizeCapError("mv_chain: size cap exceeded");
  OminusAlgebra a;
  a.lattice = chain_lattice(n);
  a.ominus = BinaryOp::zeros(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.ominus.at(x, y) = std::max(x - y, 0);
  return a;
}

namespace detail {

/// Elements of the rotation of a k-element Godel chain, bottom-up:
/// indices 0..k-1 are (0, 0), (0, -1), .., (0, -(k-1)) and indices
/// k..2k-1 are (1, -(k-1)), .., (1, -1), (1, 0).
struct RotationElement {
  int sign;   // 0 or 1
  int value;  // non-positive; 0 is the top of the chain payload
};

inline RotationElement rotation_decode(int k, int e) {
  return e < k ? RotationElement{0, -e} : RotationElement{1, -(2 * k - 1 - e)};
}

inline int rotation_encode(int k, RotationElement r) {
  return r.sign == 0 ? -r.value : 2 * k - 1 + r.value;
}

/// Godel implication on the non-positive chain.
inline int godel_imp(int a, int b) { return a <= b ? 0 : b; }

inline RotationElement rotation_mul(RotationElement x, RotationElement y) {
  if (x.sign == 1 && y.sign == 1)
    return {1, std::min(x.value, y.value)};  // (1, a /\ b)
  if (x.sign == 0 && y.sign == 0) return {0, 0};
  if (y.sign < x.sign) return {0, godel_imp(x.value, y.value)};
  return {0, godel_imp(y.value, x.value)};
}

}  // namespace detail

/// The disconnected rotation of the k-element Godel chain: a 2k-element
/// chain with x (-) y = x . not y, where . is the rotated monoid operation
/// and not flips the sign component. For k >= 2 this yields a nilpotent
/// minimum chain that is not an MV-algebra.
inline OminusAlgebra disconnected_rotation(int k, int max_elems = 64) {
  if (k < 1) throw std::invalid_argument("disconnected_rotation needs k >= 1");
  if (2 * k > max_elems)
    throw SizeCapError("disconnected_rotation: size cap exceeded");
  const int n = 2 * k;
  OminusAlgebra a;
  a.lattice = chain_lattice(n);
  a.ominus = BinaryOp::zeros(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto xe = detail::rotation_decode(k, x);
      auto ye = detail::rotation_decode(k, y);
      auto neg_y = detail::RotationElement{1 - ye.sign, ye.value};
      a.ominus.at(x, y) =
          detail::rotation_encode(k, detail::rotation_mul(xe, neg_y));
    }
  return a;
}

/// Display form of a rotation element, e.g. "(1,-2)".
inline std::string rotation_label(int k, int e) {
  auto r = detail::rotation_decode(k, e);
  return "(" + std::to_string(r.sign) + "," + std::to_string(r.value) + ")";
}

/// Every valid (-)-structure on L, in lexicographic order of the flattened
/// operation table. Candidates are seeded by choosing values on J x M and
/// extending by  a (-) b = join{ j(-)m : j in J, j <= a, m in M, b <= m },
/// then filtered by full validation; duplicates from distinct seeds are
/// merged. Hard size cap of 8 elements.
inline std::vector<OminusAlgebra> enumerate_ominus(const DistLattice& l) {
  if (l.n() > 8) throw SizeCapError("enumerate_ominus: hard cap is 8 elements");
  const int n = l.n();
  const auto js = join_irreducibles(l);
  const auto ms = meet_irreducibles(l);
  const int cells = static_cast<int>(js.size() * ms.size());

  std::set<std::vector<int>> tables;
  std::vector<int> seed(cells, 0);
  while (true) {
    BinaryOp op = BinaryOp::zeros(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = l.bottom;
        for (size_t ji = 0; ji < js.size(); ++ji)
          for (size_t mi = 0; mi < ms.size(); ++mi)
            if (l.leq(js[ji], a) && l.leq(b, ms[mi]))
              v = l.join(v, seed[ji * ms.size() + mi]);
        op.at(a, b) = v;
      }
    if (validate_ominus_algebra(l, op).ok()) tables.insert(op.tab);

    int c = cells - 1;
    while (c >= 0 && seed[c] == n - 1) seed[c--] = 0;
    if (c < 0) break;
    ++seed[c];
  }

  std::vector<OminusAlgebra> out;
  out.reserve(tables.size());
  for (const auto& tab : tables) out.push_back({l, BinaryOp{n, tab}});
  return out;
}

}  // namespace duality

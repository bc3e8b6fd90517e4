#pragma once

#include <string>
#include <vector>

#include "duality/complex_algebra.hpp"
#include "duality/dual_space.hpp"
#include "duality/report.hpp"

namespace duality {

/// An order-preserving point map between candidate spaces. Whether it is a
/// genuine space morphism is decided by validate_space_morphism.
struct SpaceMorphism {
  OminusSpace source;
  OminusSpace target;
  std::vector<int> f;
};

/// An element map between algebras; validation is a separate operation so
/// that arbitrary candidates can be tested.
struct AlgebraHom {
  OminusAlgebra source;
  OminusAlgebra target;
  std::vector<int> h;
};

/// All order-preserving maps `from -> to`, in lexicographic order of the
/// image tuple.
inline std::vector<std::vector<int>> order_preserving_maps(const Poset& from,
                                                           const Poset& to) {
  std::vector<std::vector<int>> out;
  if (from.n == 0) {
    out.push_back({});
    return out;
  }
  if (to.n == 0) return out;  // nonempty source, empty target: no maps
  std::vector<int> f(from.n, 0);
  while (true) {
    bool mono = true;
    for (int a = 0; a < from.n && mono; ++a)
      for (int b = 0; b < from.n && mono; ++b)
        if (from.leq(a, b) && !to.leq(f[a], f[b])) mono = false;
    if (mono) out.push_back(f);
    int k = from.n - 1;
    while (k >= 0 && f[k] == to.n - 1) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

/// The three defining conditions of a space morphism, after checking that f
/// is order-preserving:
///   1. f(i1(x)) = i2(f(x))
///   2. f(x) +2 f(y) <= f(x +1 y) whenever (x,y) in dom(+1)
///   3. whenever (f(x),z) in dom(+2) there is w' with (x,w') in dom(+1),
///      z <= f(w') and f(x +1 w') = f(x) +2 z.
inline Report validate_space_morphism(const SpaceMorphism& m) {
  Report r;
  const OminusSpace& s1 = m.source;
  const OminusSpace& s2 = m.target;
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < s1.n() && ok; ++a)
      for (int b = 0; b < s1.n() && ok; ++b)
        if (s1.x.leq(a, b) && !s2.x.leq(m.f[a], m.f[b])) {
          ok = false;
          w = detail::point_pair(a, b);
        }
    r.record("order-preserving", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < s1.n() && ok; ++x)
      if (m.f[s1.i[x]] != s2.i[m.f[x]]) {
        ok = false;
        w = "x=" + std::to_string(x);
      }
    r.record("i-equivariance", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < s1.n() && ok; ++x)
      for (int y = 0; y < s1.n() && ok; ++y)
        if (s1.plus.defined(x, y)) {
          if (!s2.plus.defined(m.f[x], m.f[y]) ||
              !s2.x.leq(s2.plus.at(m.f[x], m.f[y]), m.f[s1.plus.at(x, y)])) {
            ok = false;
            w = detail::point_pair(x, y);
          }
        }
    r.record("plus-forth", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < s1.n() && ok; ++x)
      for (int z = 0; z < s2.n() && ok; ++z) {
        if (!s2.plus.defined(m.f[x], z)) continue;
        bool found = false;
        for (int wp = 0; wp < s1.n() && !found; ++wp)
          if (s1.plus.defined(x, wp) && s2.x.leq(z, m.f[wp]) &&
              m.f[s1.plus.at(x, wp)] == s2.plus.at(m.f[x], z))
            found = true;
        if (!found) {
          ok = false;
          w = "x=" + std::to_string(x) + " z=" + std::to_string(z);
        }
      }
    r.record("plus-back", ok, w);
  }
  return r;
}

/// The inverse image map h(U) = f^-1(U) between the dual algebras, defined
/// for any order-preserving f so that the duality check below is a genuine
/// biconditional rather than vacuous.
inline AlgebraHom dual_hom(const SpaceMorphism& m) {
  AlgebraHom h;
  h.source = dual_algebra(m.target);
  h.target = dual_algebra(m.source);
  const DownsetLattice dl_src = downset_lattice(m.target.x);
  const DownsetLattice dl_dst = downset_lattice(m.source.x);
  h.h.resize(h.source.n());
  for (int u = 0; u < h.source.n(); ++u) {
    Mask pre = 0;
    for (int x = 0; x < m.source.n(); ++x)
      if (has_bit(dl_src.sets[u], m.f[x])) pre |= bit(x);
    h.h[u] = dl_dst.index_of(pre);
  }
  return h;
}

/// Checks preservation of 0, 1, join, meet and the operation.
inline Report validate_algebra_hom(const AlgebraHom& hom) {
  Report r;
  const OminusAlgebra& a = hom.source;
  const OminusAlgebra& b = hom.target;
  r.record("bounds",
           hom.h[a.lattice.bottom] == b.lattice.bottom &&
               hom.h[a.lattice.top] == b.lattice.top,
           "");
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < a.n() && ok; ++x)
      for (int y = 0; y < a.n() && ok; ++y) {
        if (hom.h[a.lattice.join(x, y)] != b.lattice.join(hom.h[x], hom.h[y]) ||
            hom.h[a.lattice.meet(x, y)] != b.lattice.meet(hom.h[x], hom.h[y])) {
          ok = false;
          w = detail::point_pair(x, y);
        }
      }
    r.record("lattice-ops", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < a.n() && ok; ++x)
      for (int y = 0; y < a.n() && ok; ++y)
        if (hom.h[a.sub(x, y)] != b.sub(hom.h[x], hom.h[y])) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("ominus-preserved", ok, w);
  }
  return r;
}

struct MorphismDualityVerdict {
  bool space_ok = false;
  bool algebra_ok = false;
  bool agree() const { return space_ok == algebra_ok; }
};

/// Computes both sides of the morphism duality independently. Disagreement
/// is a library bug and is surfaced loudly by the caller (exit code 3 in the
/// CLI, hard failure in tests).
inline MorphismDualityVerdict check_morphism_duality(const SpaceMorphism& m) {
  MorphismDualityVerdict v;
  v.space_ok = validate_space_morphism(m).ok();
  v.algebra_ok = validate_algebra_hom(dual_hom(m)).ok();
  return v;
}

/// Subspace special case: for an inclusion X1 into X2 (f an order-embedding)
/// the morphism conditions reduce to i and + agreeing on the image.
inline Report check_inclusion_morphism(const SpaceMorphism& m) {
  Report r;
  const OminusSpace& s1 = m.source;
  const OminusSpace& s2 = m.target;
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < s1.n() && ok; ++a)
      for (int b = 0; b < s1.n() && ok; ++b)
        if (s1.x.leq(a, b) != s2.x.leq(m.f[a], m.f[b]) ||
            (a != b && m.f[a] == m.f[b])) {
          ok = false;
          w = detail::point_pair(a, b);
        }
    r.record("order-embedding", ok, w);
    if (!ok) return r;
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < s1.n() && ok; ++x)
      if (m.f[s1.i[x]] != s2.i[m.f[x]]) {
        ok = false;
        w = "x=" + std::to_string(x);
      }
    r.record("i-agrees", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < s1.n() && ok; ++x)
      for (int y = 0; y < s1.n() && ok; ++y)
        if (s1.plus.defined(x, y) &&
            (!s2.plus.defined(m.f[x], m.f[y]) ||
             m.f[s1.plus.at(x, y)] != s2.plus.at(m.f[x], m.f[y]))) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("plus-agrees", ok, w);
  }
  return r;
}

}  // namespace duality

#pragma once

#include <string>
#include <vector>

#include "duality/dual_space.hpp"
#include "duality/lattice.hpp"
#include "duality/ominus_algebra.hpp"
#include "duality/report.hpp"

namespace duality {

struct SpaceInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The complex algebra of a space: the lattice C of down-sets of X with the
/// total operations
///   f_plus(u,v) = {x : exists w not in v with (x,w) in dom(+), x+w in u}
///   f_star(u,v) = {x : for all y in v, (x,y) in dom(*) and x*y in u}.
/// In the finite case every down-set is clopen, so the clopen sublattice B
/// is all of C; `clopen` keeps that restriction in the data model.
struct ComplexAlgebra {
  DownsetLattice c;
  BinaryOp f_plus;
  BinaryOp f_star;
  std::vector<bool> clopen;  // always all-true on finite spaces

  int n() const { return c.lattice.n(); }
};

inline ComplexAlgebra complex_algebra(const OminusSpace& s) {
  ComplexAlgebra ca;
  ca.c = downset_lattice(s.x);
  const int n = ca.n();
  ca.f_plus = BinaryOp::zeros(n);
  ca.f_star = BinaryOp::zeros(n);
  ca.clopen.assign(n, true);
  for (int ui = 0; ui < n; ++ui)
    for (int vi = 0; vi < n; ++vi) {
      const Mask u = ca.c.sets[ui], v = ca.c.sets[vi];
      Mask plus = 0, star = 0;
      for (int x = 0; x < s.n(); ++x) {
        bool in_plus = false;
        for (int w = 0; w < s.n() && !in_plus; ++w)
          if (!has_bit(v, w) && s.plus.defined(x, w) &&
              has_bit(u, s.plus.at(x, w)))
            in_plus = true;
        if (in_plus) plus |= bit(x);
        bool in_star = true;
        for (int y = 0; y < s.n() && in_star; ++y)
          if (has_bit(v, y) &&
              !(s.star.defined(x, y) && has_bit(u, s.star.at(x, y))))
            in_star = false;
        if (in_star) star |= bit(x);
      }
      if (!s.x.is_downclosed(plus) || !s.x.is_downclosed(star))
        throw SpaceInvalid("complex algebra value is not a down-set");
      ca.f_plus.at(ui, vi) = ca.c.index_of(plus);
      ca.f_star.at(ui, vi) = ca.c.index_of(star);
    }
  return ca;
}

/// The dual algebra (B, f_plus) of a space; B = C in the finite case.
inline OminusAlgebra dual_algebra(const OminusSpace& s) {
  ComplexAlgebra ca = complex_algebra(s);
  OminusAlgebra a;
  a.lattice = std::move(ca.c.lattice);
  a.ominus = std::move(ca.f_plus);
  return a;
}

/// Structural properties of (C, f_plus, f_star): preservation laws in both
/// coordinates, f_plus <= f_star, the contraction law, the right unit, and
/// agreement of the two operations away from the empty second argument.
inline Report verify_complex_properties(const OminusSpace& s) {
  const ComplexAlgebra ca = complex_algebra(s);
  const DistLattice& c = ca.c.lattice;
  const int n = c.n();
  Report r;
  auto w2 = [](int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };
  {
    // f_plus: join-preserving (with empty join) in coordinate 1,
    // meets-to-joins (with empty meet) in coordinate 2
    bool ok = true;
    std::string w;
    for (int v = 0; v < n && ok; ++v)
      if (ca.f_plus.at(c.bottom, v) != c.bottom ||
          ca.f_plus.at(v, c.top) != c.bottom) {
        ok = false;
        w = "empty case at " + std::to_string(v);
      }
    for (int u1 = 0; u1 < n && ok; ++u1)
      for (int u2 = 0; u2 < n && ok; ++u2)
        for (int v = 0; v < n && ok; ++v) {
          if (ca.f_plus.at(c.join(u1, u2), v) !=
              c.join(ca.f_plus.at(u1, v), ca.f_plus.at(u2, v))) {
            ok = false;
            w = "coord1 " + w2(u1, u2) + " v=" + std::to_string(v);
          } else if (ca.f_plus.at(v, c.meet(u1, u2)) !=
                     c.join(ca.f_plus.at(v, u1), ca.f_plus.at(v, u2))) {
            ok = false;
            w = "coord2 " + w2(u1, u2) + " u=" + std::to_string(v);
          }
        }
    r.record("fplus-preservation", ok, w);
  }
  {
    // f_star: preserves non-empty meets in coordinate 1 (the empty meet is
    // genuinely not preserved: f_star(top, v) collects only the points whose
    // star is total on v), joins-to-meets including the empty join in coord 2
    bool ok = true;
    std::string w;
    for (int v = 0; v < n && ok; ++v)
      if (ca.f_star.at(v, c.bottom) != c.top) {
        ok = false;
        w = "empty case at " + std::to_string(v);
      }
    for (int u1 = 0; u1 < n && ok; ++u1)
      for (int u2 = 0; u2 < n && ok; ++u2)
        for (int v = 0; v < n && ok; ++v) {
          if (ca.f_star.at(c.meet(u1, u2), v) !=
              c.meet(ca.f_star.at(u1, v), ca.f_star.at(u2, v))) {
            ok = false;
            w = "coord1 " + w2(u1, u2) + " v=" + std::to_string(v);
          } else if (ca.f_star.at(v, c.join(u1, u2)) !=
                     c.meet(ca.f_star.at(v, u1), ca.f_star.at(v, u2))) {
            ok = false;
            w = "coord2 " + w2(u1, u2) + " u=" + std::to_string(v);
          }
        }
    r.record("fstar-preservation", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (!c.leq(ca.f_plus.at(u, v), ca.f_star.at(u, v))) {
          ok = false;
          w = w2(u, v);
        }
    r.record("fplus-below-fstar", ok, w);
  }
  {
    // f_plus(u,v1) /\ f_plus(u,v2) = f_plus(u, v1 \/ v2)
    bool ok = true;
    std::string w;
    for (int u = 0; u < n && ok; ++u)
      for (int v1 = 0; v1 < n && ok; ++v1)
        for (int v2 = 0; v2 < n && ok; ++v2)
          if (c.meet(ca.f_plus.at(u, v1), ca.f_plus.at(u, v2)) !=
              ca.f_plus.at(u, c.join(v1, v2))) {
            ok = false;
            w = "u=" + std::to_string(u) + " " + w2(v1, v2);
          }
    r.record("fplus-contraction", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int u = 0; u < n && ok; ++u)
      if (ca.f_plus.at(u, c.bottom) != u) {
        ok = false;
        w = "u=" + std::to_string(u);
      }
    r.record("fplus-unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (v != c.bottom && ca.f_plus.at(u, v) != ca.f_star.at(u, v)) {
          ok = false;
          w = w2(u, v);
        }
    r.record("fplus-equals-fstar-nonzero", ok, w);
  }
  return r;
}

struct DoubleDualResult {
  bool ok = true;
  std::vector<int> map;  // a -> index of hat(a) in C
  std::string witness;
};

/// The Stone-Priestley map a -> hat(a) from A onto the dual algebra of its
/// extended dual, checked to be a bijective bounded-lattice isomorphism with
/// (a (-) b)^ = f_plus(a^, b^), together with the generator-level equation
/// f_plus(down(x), complement-of-up(y)) = (nu(x) (-) mu(y))^.
inline DoubleDualResult double_dual_isomorphism(const OminusAlgebra& a) {
  DoubleDualResult res;
  const OminusSpace s = extended_dual(a);
  const ComplexAlgebra ca = complex_algebra(s);
  const auto pts = dual_points(a.lattice);
  const int n = a.n();
  auto fail = [&](std::string w) {
    res.ok = false;
    if (res.witness.empty()) res.witness = std::move(w);
  };
  if (ca.n() != n) fail("size mismatch |C| != |A|");
  res.map.assign(n, -1);
  for (int e = 0; e < n && res.ok; ++e)
    res.map[e] = ca.c.index_of(hat(a.lattice, e, pts));
  for (int e = 0; e < n && res.ok; ++e)
    for (int f = 0; f < n && res.ok; ++f) {
      if (e != f && res.map[e] == res.map[f]) fail("hat is not injective");
      if (!res.ok) break;
      const DistLattice& c = ca.c.lattice;
      if (res.map[a.lattice.join(e, f)] != c.join(res.map[e], res.map[f]))
        fail("join not preserved at (" + std::to_string(e) + "," +
             std::to_string(f) + ")");
      else if (res.map[a.lattice.meet(e, f)] != c.meet(res.map[e], res.map[f]))
        fail("meet not preserved at (" + std::to_string(e) + "," +
             std::to_string(f) + ")");
      else if (res.map[a.sub(e, f)] != ca.f_plus.at(res.map[e], res.map[f]))
        fail("ominus not preserved at (" + std::to_string(e) + "," +
             std::to_string(f) + ")");
    }
  if (res.ok && (res.map[a.lattice.bottom] != ca.c.lattice.bottom ||
                 res.map[a.lattice.top] != ca.c.lattice.top))
    fail("bounds not preserved");
  // generator-level form of the sigma-extension agreement
  for (int x = 0; x < s.n() && res.ok; ++x)
    for (int y = 0; y < s.n() && res.ok; ++y) {
      const int down_x = ca.c.index_of(s.x.downset(x));
      const int co_up_y = ca.c.index_of(full_mask(s.n()) & ~s.x.upset(y));
      const int lhs = ca.f_plus.at(down_x, co_up_y);
      const int rhs = res.map[a.sub(pts[x].nu, pts[y].mu)];
      if (lhs != rhs)
        fail("generator equation fails at (x=" + std::to_string(x) +
             ",y=" + std::to_string(y) + ")");
    }
  return res;
}

}  // namespace duality

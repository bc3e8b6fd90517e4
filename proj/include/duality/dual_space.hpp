#pragma once

#include <optional>
#include <string>
#include <vector>

#include "duality/lattice.hpp"
#include "duality/ominus_algebra.hpp"
#include "duality/report.hpp"

namespace duality {

/// A partial binary operation on points 0..n-1. The domain is explicit and
/// authoritative; val entries are meaningful only where the domain bit is
/// set. Domains are part of the first-order language here, so they are never
/// encoded through sentinel values.
struct PartialOp {
  std::vector<Mask> dom;              // dom[x] = set of y with (x,y) defined
  std::vector<std::vector<int>> val;  // val[x][y]

  bool defined(int x, int y) const { return has_bit(dom[x], y); }

  int at(int x, int y) const {
    if (!defined(x, y)) throw DomainError("partial operation undefined here");
    return val[x][y];
  }

  static PartialOp empty(int n) {
    return PartialOp{std::vector<Mask>(n, 0),
                     std::vector<std::vector<int>>(n, std::vector<int>(n, -1))};
  }

  void set(int x, int y, int v) {
    dom[x] |= bit(y);
    val[x][y] = v;
  }
};

/// Candidate extended dual space (X, i, +, *).
struct OminusSpace {
  Poset x;
  std::vector<int> i;  // order-reversing involution candidate
  PartialOp plus;
  PartialOp star;

  int n() const { return x.n; }
};

namespace detail {

inline std::string point_pair(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Index of the dual point whose prime filter equals f, or -1.
inline int point_with_filter(const std::vector<DualPoint>& pts, Mask f) {
  for (const auto& p : pts)
    if (p.filter == f) return p.index;
  return -1;
}

}  // namespace detail

/// Constructs the extended dual (X, i, +, *) of a valid algebra. X is the
/// set of meet-irreducibles with the induced order (so mu is the identity
/// translation and nu is kappa^-1); i, + and * are computed from the prime
/// filter formulas:
///   F_i(x)   = {a : not a in I_x}
///   F_{x+y}  = {a : for all b in I_y, a-b in F_x}      on  y <= i(x)
///   F_{x*y}  = {a : exists b in F_y with a-b in F_x}   on  i(x) not<= y
/// Every computed set must be the filter of a point; anything else means the
/// input was not a valid algebra and raises InternalInvariantBroken.
inline OminusSpace extended_dual(const OminusAlgebra& a) {
  const DistLattice& l = a.lattice;
  const auto pts = dual_points(l);
  const int nx = static_cast<int>(pts.size());

  OminusSpace s;
  s.x = dual_poset(l);
  s.i.resize(nx);
  s.plus = PartialOp::empty(nx);
  s.star = PartialOp::empty(nx);

  for (int x = 0; x < nx; ++x) {
    Mask f = 0;
    for (int e = 0; e < l.n(); ++e)
      if (has_bit(pts[x].ideal, negation(a, e))) f |= bit(e);
    const int ix = detail::point_with_filter(pts, f);
    if (ix < 0)
      throw InternalInvariantBroken("negation image is not a prime filter");
    s.i[x] = ix;
  }

  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y) {
      if (s.x.leq(y, s.i[x])) {
        Mask f = 0;
        for (int e = 0; e < l.n(); ++e) {
          bool in = true;
          for (int b = 0; in && b < l.n(); ++b)
            if (has_bit(pts[y].ideal, b) && !has_bit(pts[x].filter, a.sub(e, b)))
              in = false;
          if (in) f |= bit(e);
        }
        const int v = detail::point_with_filter(pts, f);
        if (v < 0)
          throw InternalInvariantBroken("computed F_{x+y} is not a prime filter");
        s.plus.set(x, y, v);
      }
      if (!s.x.leq(s.i[x], y)) {
        Mask f = 0;
        for (int e = 0; e < l.n(); ++e) {
          bool in = false;
          for (int b = 0; !in && b < l.n(); ++b)
            if (has_bit(pts[y].filter, b) && has_bit(pts[x].filter, a.sub(e, b)))
              in = true;
          if (in) f |= bit(e);
        }
        const int v = detail::point_with_filter(pts, f);
        if (v < 0)
          throw InternalInvariantBroken("computed F_{x*y} is not a prime filter");
        s.star.set(x, y, v);
      }
    }
  return s;
}

/// Structural sanity of the tuple itself: map sizes, table shapes, values in
/// range, operations total on their declared domains.
inline Report validate_space_structure(const OminusSpace& s) {
  Report r;
  const int n = s.n();
  bool ok = static_cast<int>(s.i.size()) == n &&
            static_cast<int>(s.plus.dom.size()) == n &&
            static_cast<int>(s.star.dom.size()) == n &&
            static_cast<int>(s.plus.val.size()) == n &&
            static_cast<int>(s.star.val.size()) == n;
  std::string w = ok ? "" : "component size mismatch";
  for (int x = 0; ok && x < n; ++x) {
    if (s.i[x] < 0 || s.i[x] >= n) {
      ok = false;
      w = "i out of range at " + std::to_string(x);
      break;
    }
    for (const PartialOp* op : {&s.plus, &s.star}) {
      if (static_cast<int>(op->val[x].size()) != n) {
        ok = false;
        w = "table row size at " + std::to_string(x);
        break;
      }
      for (int y = 0; y < n; ++y)
        if (op->defined(x, y) && (op->val[x][y] < 0 || op->val[x][y] >= n)) {
          ok = false;
          w = "value out of range at " + detail::point_pair(x, y);
        }
    }
  }
  r.record("structure", ok, w);
  return r;
}

/// Greatest lower bound in the poset of the set of points in mask s,
/// if it exists.
inline std::optional<int> poset_inf(const Poset& p, Mask s) {
  Mask lower = full_mask(p.n);
  for (int a = 0; a < p.n; ++a)
    if (has_bit(s, a)) lower &= p.downset(a);
  for (int a = 0; a < p.n; ++a)
    if (has_bit(lower, a) && (lower & ~p.downset(a)) == 0) return a;
  return std::nullopt;
}

inline std::optional<int> poset_sup(const Poset& p, Mask s) {
  Mask upper = full_mask(p.n);
  for (int a = 0; a < p.n; ++a)
    if (has_bit(s, a)) upper &= p.upset(a);
  for (int a = 0; a < p.n; ++a)
    if (has_bit(upper, a) && (upper & ~p.upset(a)) == 0) return a;
  return std::nullopt;
}

/// The full first-order axiom suite for candidate spaces:
///   i order-reversing; the two domains exactly as derived from i and
///   down-closed in X^2; both operations monotone (in the mixed sense that
///   matches their domains); the (*+) law with existence of the infimum;
///   and for each x a totally ordered L_x image with a solvable adjunction.
inline Report validate_ominus_space(const OminusSpace& s) {
  Report r = validate_space_structure(s);
  if (!r.ok()) return r;
  const int n = s.n();

  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.x.leq(x, y) && !s.x.leq(s.i[y], s.i[x])) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("i-order-reversing", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.plus.defined(x, y) != s.x.leq(y, s.i[x])) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("plus-domain", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.star.defined(x, y) != !s.x.leq(s.i[x], y)) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("star-domain", ok, w);
  }
  for (const auto& [name, op] :
       {std::pair{"plus-domain-downset", &s.plus},
        std::pair{"star-domain-downset", &s.star}}) {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (op->defined(x, y))
          for (int x2 = 0; x2 < n && ok; ++x2)
            for (int y2 = 0; y2 < n && ok; ++y2)
              if (s.x.leq(x2, x) && s.x.leq(y2, y) && !op->defined(x2, y2)) {
                ok = false;
                w = detail::point_pair(x, y) + " vs " +
                    detail::point_pair(x2, y2);
              }
    r.record(name, ok, w);
  }
  {
    // x' <= x, y' <= y  ==>  x'+y' <= x+y
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.plus.defined(x, y))
          for (int x2 = 0; x2 < n && ok; ++x2)
            for (int y2 = 0; y2 < n && ok; ++y2)
              if (s.x.leq(x2, x) && s.x.leq(y2, y) && s.plus.defined(x2, y2) &&
                  !s.x.leq(s.plus.at(x2, y2), s.plus.at(x, y))) {
                ok = false;
                w = detail::point_pair(x, y) + " vs " +
                    detail::point_pair(x2, y2);
              }
    r.record("plus-monotone", ok, w);
  }
  {
    // x <= x', y <= y'  ==>  x*y <= x'*y'  (where both sides are defined)
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.star.defined(x, y))
          for (int x2 = 0; x2 < n && ok; ++x2)
            for (int y2 = 0; y2 < n && ok; ++y2)
              if (s.x.leq(x, x2) && s.x.leq(y, y2) && s.star.defined(x2, y2) &&
                  !s.x.leq(s.star.at(x, y), s.star.at(x2, y2))) {
                ok = false;
                w = detail::point_pair(x, y) + " vs " +
                    detail::point_pair(x2, y2);
              }
    r.record("star-monotone", ok, w);
  }
  {
    // (*+): x*y is the greatest lower bound of {x+w : (x,w) defined, w </= y}
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.star.defined(x, y)) {
          Mask values = 0;
          for (int w0 = 0; w0 < n; ++w0)
            if (s.plus.defined(x, w0) && !s.x.leq(w0, y))
              values |= bit(s.plus.at(x, w0));
          auto inf = poset_inf(s.x, values);
          if (!inf || *inf != s.star.at(x, y)) {
            ok = false;
            w = detail::point_pair(x, y) +
                (inf ? " inf=" + std::to_string(*inf) : " no infimum");
          }
        }
    r.record("star-plus-law", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      const Mask dom = s.plus.dom[x];
      for (int y1 = 0; y1 < n && ok; ++y1)
        for (int y2 = 0; y2 < n && ok; ++y2)
          if (has_bit(dom, y1) && has_bit(dom, y2)) {
            const int a = s.plus.at(x, y1), b = s.plus.at(x, y2);
            if (!s.x.leq(a, b) && !s.x.leq(b, a)) {
              ok = false;
              w = "x=" + std::to_string(x) + " images of " +
                  std::to_string(y1) + "," + std::to_string(y2);
            }
          }
    }
    r.record("lx-image-chain", ok, w);
  }
  {
    // For each x and z >= x there must be k <= i(x) with
    //   x+y <= z  iff  y <= k   for all y in dom(L_x).
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int z = 0; z < n && ok; ++z) {
        if (!s.x.leq(x, z)) continue;
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
          if (!has_bit(s.plus.dom[x], k)) continue;
          bool good = true;
          for (int y = 0; y < n && good; ++y)
            if (has_bit(s.plus.dom[x], y) &&
                s.x.leq(s.plus.at(x, y), z) != s.x.leq(y, k))
              good = false;
          found = good;
        }
        if (!found) {
          ok = false;
          w = "x=" + std::to_string(x) + " z=" + std::to_string(z);
        }
      }
    r.record("lx-upper-adjoint", ok, w);
  }
  return r;
}

/// + is expanding (x <= x+y on its domain) and has local units: for each x
/// some y_x with x + y_x = x. Witnesses are the least such y in index order.
inline Report check_expansion_and_unit(const OminusSpace& s) {
  Report r;
  const int n = s.n();
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.plus.defined(x, y) && !s.x.leq(x, s.plus.at(x, y))) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("plus-expanding", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      bool unit = false;
      for (int y = 0; y < n && !unit; ++y)
        if (s.plus.defined(x, y) && s.plus.at(x, y) == x) unit = true;
      if (!unit) {
        ok = false;
        w = "x=" + std::to_string(x);
      }
    }
    r.record("plus-unit", ok, w);
  }
  return r;
}

/// The least y with x + y = x, when one exists.
inline std::optional<int> unit_witness(const OminusSpace& s, int x) {
  for (int y = 0; y < s.n(); ++y)
    if (s.plus.defined(x, y) && s.plus.at(x, y) == x) return y;
  return std::nullopt;
}

/// For all x, w1, w2 with (x,w1), (x,w2) defined, there is w0 >= w1, w2 with
/// (x,w0) defined and x+w0 equal to x+w1 or x+w2.
inline Report check_rdop(const OminusSpace& s) {
  Report r;
  const int n = s.n();
  bool ok = true;
  std::string w;
  for (int x = 0; x < n && ok; ++x)
    for (int w1 = 0; w1 < n && ok; ++w1)
      for (int w2 = 0; w2 < n && ok; ++w2) {
        if (!s.plus.defined(x, w1) || !s.plus.defined(x, w2)) continue;
        bool found = false;
        for (int w0 = 0; w0 < n && !found; ++w0)
          if (s.plus.defined(x, w0) && s.x.leq(w1, w0) && s.x.leq(w2, w0) &&
              (s.plus.at(x, w0) == s.plus.at(x, w1) ||
               s.plus.at(x, w0) == s.plus.at(x, w2)))
            found = true;
        if (!found) {
          ok = false;
          w = "(" + std::to_string(x) + "," + std::to_string(w1) + "," +
              std::to_string(w2) + ")";
        }
      }
  r.record("rdop", ok, w);
  return r;
}

struct NoWitness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// k(x,z) = sup{y <= i(x) : x+y <= z}, the value of the upper adjoint of the
/// left translation L_x at z in the up-set of x. Requires x <= z.
inline int lx_upper_adjoint(const OminusSpace& s, int x, int z) {
  if (!s.x.leq(x, z))
    throw PreconditionViolated("lx_upper_adjoint: z must be above x");
  Mask set = 0;
  for (int y = 0; y < s.n(); ++y)
    if (s.plus.defined(x, y) && s.x.leq(s.plus.at(x, y), z)) set |= bit(y);
  auto k = poset_sup(s.x, set);
  if (!k || set == 0)
    throw NoWitness("lx_upper_adjoint: adjoint set empty or without supremum");
  return *k;
}

/// How the associativity antecedent in the dual supervariety check reads.
/// Subterms: all four applications occurring in x+(y+z) = (x+y)+z must be
/// defined. Literal: the antecedent quadruple as printed in the source
/// characterization, which mentions (x, y+x) in place of (x, y+z); both are
/// exposed because the printed form looks inconsistent with its conclusion.
enum class AssocReading { Subterms, Literal };

/// Dual supervariety conditions (i)-(iv): i is an involution, + is
/// commutative and associative where defined, and the i-flip law
/// i(x)+y <= i(z) iff z+y <= x.
inline Report check_dual_supervariety(
    const OminusSpace& s, AssocReading reading = AssocReading::Subterms) {
  Report r;
  const int n = s.n();
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      if (s.i[s.i[x]] != x) {
        ok = false;
        w = "x=" + std::to_string(x);
      }
    r.record("dual-sv-i", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (s.plus.defined(x, y) && s.plus.defined(y, x) &&
            s.plus.at(x, y) != s.plus.at(y, x)) {
          ok = false;
          w = detail::point_pair(x, y);
        }
    r.record("dual-sv-ii", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          bool antecedent;
          if (reading == AssocReading::Subterms) {
            antecedent = s.plus.defined(y, z) && s.plus.defined(x, y) &&
                         s.plus.defined(x, s.plus.at(y, z)) &&
                         s.plus.defined(s.plus.at(x, y), z);
          } else {
            antecedent = s.plus.defined(x, y) && s.plus.defined(y, z) &&
                         s.plus.defined(y, x) &&
                         s.plus.defined(x, s.plus.at(y, x)) &&
                         s.plus.defined(s.plus.at(x, y), z) &&
                         s.plus.defined(x, s.plus.at(y, z));
          }
          if (antecedent &&
              s.plus.at(x, s.plus.at(y, z)) !=
                  s.plus.at(s.plus.at(x, y), z)) {
            ok = false;
            w = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                std::to_string(z) + ")";
          }
        }
    r.record("dual-sv-iii", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (s.plus.defined(s.i[x], y) && s.plus.defined(z, y) &&
              s.x.leq(s.plus.at(s.i[x], y), s.i[z]) !=
                  s.x.leq(s.plus.at(z, y), x)) {
            ok = false;
            w = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                std::to_string(z) + ")";
          }
    r.record("dual-sv-iv", ok, w);
  }
  return r;
}

/// Dual of the characteristic MV identity: if (x,y) is in dom(*) and some
/// w not<= y has x' + w <= x * y, then x' <= x. The witness, if any, is the
/// first quadruple (x, x', y, w) in lexicographic order.
inline Report check_mv6_dual(const OminusSpace& s) {
  Report r;
  const int n = s.n();
  bool ok = true;
  std::string witness;
  for (int x = 0; x < n && ok; ++x)
    for (int xp = 0; xp < n && ok; ++xp)
      for (int y = 0; y < n && ok; ++y) {
        if (!s.star.defined(x, y) || s.x.leq(xp, x)) continue;
        for (int w = 0; w < n && ok; ++w)
          if (!s.x.leq(w, y) && s.plus.defined(xp, w) &&
              s.x.leq(s.plus.at(xp, w), s.star.at(x, y))) {
            ok = false;
            witness = "(x=" + std::to_string(x) + ",x'=" + std::to_string(xp) +
                      ",y=" + std::to_string(y) + ",w=" + std::to_string(w) +
                      ")";
          }
      }
  r.record("dual-mv-v", ok, witness);
  return r;
}

struct MvSpaceVerdict {
  bool is_mv = false;
  Report supervariety;  // dual-sv-i..iv
  Report mv6;           // dual-mv-v; the certificate on failure
};

/// Dual MV membership: the conjunction of the dual supervariety conditions
/// and the dual of the characteristic identity. Assumes the space already
/// passes validate_ominus_space.
inline MvSpaceVerdict is_mv_space(const OminusSpace& s) {
  MvSpaceVerdict v;
  v.supervariety = check_dual_supervariety(s);
  v.mv6 = check_mv6_dual(s);
  v.is_mv = v.supervariety.ok() && v.mv6.ok();
  return v;
}

}  // namespace duality

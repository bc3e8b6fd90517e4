#pragma once

#include <string>

#include "duality/lattice.hpp"
#include "duality/report.hpp"
#include "duality/residuation.hpp"

namespace duality {

/// A bounded distributive lattice with a normal (1,op) double quasioperator
/// satisfying a (-) 0 = a.
struct OminusAlgebra {
  DistLattice lattice;
  BinaryOp ominus;

  int n() const { return lattice.n(); }
  int sub(int a, int b) const { return ominus.at(a, b); }
};

namespace detail {
inline std::string pair_w(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
inline std::string triple_w(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}
}  // namespace detail

/// Axiom checker: the four distribution laws, normality (0 (-) a = 0 and
/// a (-) 1 = 0), and the right unit a (-) 0 = a.
inline Report validate_ominus_algebra(const DistLattice& l, const BinaryOp& op) {
  Report r = validate_dqo_1op(l, op);
  const int n = l.n();
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (op.at(l.bottom, a) != l.bottom || op.at(a, l.top) != l.bottom) {
        ok = false;
        w = "element " + std::to_string(a);
      }
    r.record("normality", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (op.at(a, l.bottom) != a) {
        ok = false;
        w = "element " + std::to_string(a);
      }
    r.record("right-unit", ok, w);
  }
  return r;
}

inline Report validate_ominus_algebra(const OminusAlgebra& a) {
  return validate_ominus_algebra(a.lattice, a.ominus);
}

/// The associated negation, not a = 1 (-) a.
inline int negation(const OminusAlgebra& a, int x) {
  return a.sub(a.lattice.top, x);
}

/// a (+) b = not(not a (-) b).
inline int oplus(const OminusAlgebra& a, int x, int y) {
  return negation(a, a.sub(negation(a, x), y));
}

/// The three equations carving MV-algebras out of the supervariety:
///   (i)   (a-b)-c = a - not(not b - c)
///   (ii)  not a - b = not b - a
///   (iii) a /\ b = a - (a - b)
inline Report check_mv_equations(const OminusAlgebra& a) {
  Report r;
  const int n = a.n();
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (a.sub(a.sub(x, y), z) !=
              a.sub(x, negation(a, a.sub(negation(a, y), z)))) {
            ok = false;
            w = detail::triple_w(x, y, z);
          }
    r.record("mv-i", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (a.sub(negation(a, x), y) != a.sub(negation(a, y), x)) {
          ok = false;
          w = detail::pair_w(x, y);
        }
    r.record("mv-ii", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (a.lattice.meet(x, y) != a.sub(x, a.sub(x, y))) {
          ok = false;
          w = detail::pair_w(x, y);
        }
    r.record("mv-iii", ok, w);
  }
  return r;
}

/// The supervariety conditions: involution, commutativity and associativity
/// of the derived (+), and (-) being the right co-residual of (+). The last
/// is checked as the raw biconditional  x <= y (+) z  iff  x (-) z <= y  over
/// all triples, so it stays meaningful when (+) is not residuated.
inline Report check_supervariety(const OminusAlgebra& a) {
  Report r;
  const int n = a.n();
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      if (negation(a, negation(a, x)) != x) {
        ok = false;
        w = "element " + std::to_string(x);
      }
    r.record("sv-i", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (oplus(a, x, y) != oplus(a, y, x)) {
          ok = false;
          w = detail::pair_w(x, y);
        }
    r.record("sv-ii", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (oplus(a, oplus(a, x, y), z) != oplus(a, x, oplus(a, y, z))) {
            ok = false;
            w = detail::triple_w(x, y, z);
          }
    r.record("sv-iii", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (a.lattice.leq(x, oplus(a, y, z)) !=
              a.lattice.leq(a.sub(x, z), y)) {
            ok = false;
            w = detail::triple_w(x, y, z);
          }
    r.record("sv-iv", ok, w);
  }
  return r;
}

struct MvAlgebraVerdict {
  bool is_mv = false;
  Report equations;     // mv-i..mv-iii; the certificate on failure
  Report supervariety;  // must all pass whenever is_mv is true
};

/// Equational MV membership. When positive, the supervariety conditions are
/// also required to hold; a valid algebra violating that would indicate a
/// library bug.
inline MvAlgebraVerdict is_mv_algebra(const OminusAlgebra& a) {
  MvAlgebraVerdict v;
  v.equations = check_mv_equations(a);
  v.supervariety = check_supervariety(a);
  v.is_mv = v.equations.ok();
  if (v.is_mv && !v.supervariety.ok())
    throw InternalInvariantBroken(
        "MV equations hold but a supervariety condition fails");
  return v;
}

}  // namespace duality

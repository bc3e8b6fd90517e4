#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "duality/lattice.hpp"
#include "duality/report.hpp"

namespace duality {

/// A total binary operation on a lattice, as an n*n element-index table.
struct BinaryOp {
  int n = 0;
  std::vector<int> tab;  // tab[a*n + b]

  int at(int a, int b) const { return tab[a * n + b]; }
  int& at(int a, int b) { return tab[a * n + b]; }

  static BinaryOp zeros(int n) { return BinaryOp{n, std::vector<int>(n * n, 0)}; }
};

struct NotJoinPreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMeetPreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Thrown when a guarded partial operation is queried outside its domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Upper adjoint of a join-preserving map f : L1 -> L2, i.e. the g with
/// f(x) <= y iff x <= g(y). Computed as g(y) = join{x : f(x) <= y}.
/// Throws NotJoinPreserving (with a witness) if f fails the precondition,
/// including the empty join f(0) = 0.
inline std::vector<int> upper_adjoint(const DistLattice& l1,
                                      const DistLattice& l2,
                                      const std::vector<int>& f) {
  if (f[l1.bottom] != l2.bottom)
    throw NotJoinPreserving("empty join: f(bottom) != bottom");
  for (int x = 0; x < l1.n(); ++x)
    for (int y = 0; y < l1.n(); ++y)
      if (f[l1.join(x, y)] != l2.join(f[x], f[y]))
        throw NotJoinPreserving("witness pair (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
  std::vector<int> g(l2.n());
  for (int y = 0; y < l2.n(); ++y) {
    int v = l1.bottom;
    for (int x = 0; x < l1.n(); ++x)
      if (l2.leq(f[x], y)) v = l1.join(v, x);
    g[y] = v;
  }
  return g;
}

/// Lower adjoint of a meet-preserving map f : L1 -> L2: the g with
/// x <= f(y) iff g(x) <= y. Computed as g(x) = meet{y : x <= f(y)}.
inline std::vector<int> lower_adjoint(const DistLattice& l1,
                                      const DistLattice& l2,
                                      const std::vector<int>& f) {
  if (f[l1.top] != l2.top)
    throw NotMeetPreserving("empty meet: f(top) != top");
  for (int x = 0; x < l1.n(); ++x)
    for (int y = 0; y < l1.n(); ++y)
      if (f[l1.meet(x, y)] != l2.meet(f[x], f[y]))
        throw NotMeetPreserving("witness pair (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
  std::vector<int> g(l2.n());
  for (int x = 0; x < l2.n(); ++x) {
    int v = l1.top;
    for (int y = 0; y < l1.n(); ++y)
      if (l2.leq(x, f[y])) v = l1.meet(v, y);
    g[x] = v;
  }
  return g;
}

/// Checks the four distribution laws of a double quasioperator of type
/// (1,op): coordinate 1 preserves meet and join, coordinate 2 sends meet to
/// join and join to meet. Reports the first violated law with a witness.
inline Report validate_dqo_1op(const DistLattice& l, const BinaryOp& op) {
  Report r;
  const int n = l.n();
  struct Law {
    const char* name;
    bool (*holds)(const DistLattice&, const BinaryOp&, int, int, int);
  };
  const Law laws[] = {
      {"meet-left", [](const DistLattice& l, const BinaryOp& f, int a, int b,
                       int c) {
         return f.at(l.meet(a, b), c) == l.meet(f.at(a, c), f.at(b, c));
       }},
      {"join-left", [](const DistLattice& l, const BinaryOp& f, int a, int b,
                       int c) {
         return f.at(l.join(a, b), c) == l.join(f.at(a, c), f.at(b, c));
       }},
      {"meet-right", [](const DistLattice& l, const BinaryOp& f, int a, int b,
                        int c) {
         return f.at(a, l.meet(b, c)) == l.join(f.at(a, b), f.at(a, c));
       }},
      {"join-right", [](const DistLattice& l, const BinaryOp& f, int a, int b,
                        int c) {
         return f.at(a, l.join(b, c)) == l.meet(f.at(a, b), f.at(a, c));
       }},
  };
  for (const Law& law : laws) {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (!law.holds(l, op, a, b, c)) {
            ok = false;
            w = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")";
          }
    r.record(law.name, ok, w);
  }
  return r;
}

/// The residual at (v, w): join{u : u (op) w <= v}. On a finite lattice the
/// sigma-extension of a valid op is the op itself, so this realizes the
/// adjunction  u (op) w <= v  iff  u <= sigma_sharp(v, w).
/// Exhaustive scan on purpose: this module is the independent oracle for the
/// dual-space construction, so no tables are shared with it.
inline int sigma_sharp(const DistLattice& l, const BinaryOp& op, int v, int w) {
  int r = l.bottom;
  for (int u = 0; u < l.n(); ++u)
    if (l.leq(op.at(u, w), v)) r = l.join(r, u);
  return r;
}

/// The guarded co-residual at (u, w): meet{v : u <= v (op) w}, defined only
/// on u <= not w where not w = top (op) w. Outside the guard the co-residual
/// is undefined; a DomainError is thrown rather than a sentinel returned.
inline int pi_flat(const DistLattice& l, const BinaryOp& op, int u, int w) {
  const int neg_w = op.at(l.top, w);
  if (!l.leq(u, neg_w))
    throw DomainError("pi_flat: first argument not below the negation of the second");
  int r = l.top;
  for (int v = 0; v < l.n(); ++v)
    if (l.leq(u, op.at(v, w))) r = l.meet(r, v);
  return r;
}

}  // namespace duality

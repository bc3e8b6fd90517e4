#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "duality/poset.hpp"
#include "duality/report.hpp"

namespace duality {

/// A finite bounded distributive lattice over a Poset. Join/meet tables are
/// computed once at construction and cached; a missing lub/glb is a
/// construction (or validation) failure, never a runtime error later.
struct DistLattice {
  Poset order;
  int bottom = 0;
  int top = 0;
  std::vector<int> join_tab;  // n*n
  std::vector<int> meet_tab;

  int n() const { return order.n; }
  bool leq(int a, int b) const { return order.leq(a, b); }
  int join(int a, int b) const { return join_tab[a * n() + b]; }
  int meet(int a, int b) const { return meet_tab[a * n() + b]; }

  int join_all(Mask s) const {
    int v = bottom;
    for (int a = 0; a < n(); ++a)
      if (has_bit(s, a)) v = join(v, a);
    return v;
  }
  int meet_all(Mask s) const {
    int v = top;
    for (int a = 0; a < n(); ++a)
      if (has_bit(s, a)) v = meet(v, a);
    return v;
  }
};

namespace detail {

/// Least upper bound of {a, b} in p, or nullopt.
inline std::optional<int> lub(const Poset& p, int a, int b) {
  std::optional<int> best;
  for (int c = 0; c < p.n; ++c) {
    if (!p.leq(a, c) || !p.leq(b, c)) continue;
    if (!best || p.leq(c, *best)) best = c;
  }
  if (best)  // must be below every upper bound
    for (int c = 0; c < p.n; ++c)
      if (p.leq(a, c) && p.leq(b, c) && !p.leq(*best, c)) return std::nullopt;
  return best;
}

inline std::optional<int> glb(const Poset& p, int a, int b) {
  std::optional<int> best;
  for (int c = 0; c < p.n; ++c) {
    if (!p.leq(c, a) || !p.leq(c, b)) continue;
    if (!best || p.leq(*best, c)) best = c;
  }
  if (best)
    for (int c = 0; c < p.n; ++c)
      if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, *best)) return std::nullopt;
  return best;
}

}  // namespace detail

/// Computes bounds and join/meet tables for the given order. Returns nullopt
/// if some pair lacks a lub or glb, or extremes are missing. Distributivity
/// is not checked here; see validate_dist_lattice.
inline std::optional<DistLattice> try_make_lattice(const Poset& p) {
  if (p.n == 0) return std::nullopt;
  DistLattice l;
  l.order = p;
  l.bottom = l.top = -1;
  for (int a = 0; a < p.n; ++a) {
    bool is_bot = true, is_top = true;
    for (int b = 0; b < p.n; ++b) {
      is_bot &= p.leq(a, b);
      is_top &= p.leq(b, a);
    }
    if (is_bot) l.bottom = a;
    if (is_top) l.top = a;
  }
  if (l.bottom < 0 || l.top < 0) return std::nullopt;
  l.join_tab.resize(p.n * p.n);
  l.meet_tab.resize(p.n * p.n);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      auto j = detail::lub(p, a, b);
      auto m = detail::glb(p, a, b);
      if (!j || !m) return std::nullopt;
      l.join_tab[a * p.n + b] = *j;
      l.meet_tab[a * p.n + b] = *m;
    }
  return l;
}

inline DistLattice make_lattice(const Poset& p) {
  auto l = try_make_lattice(p);
  if (!l) throw std::invalid_argument("order is not a bounded lattice");
  return *l;
}

/// Checks that the cached tables are genuine lubs/glbs, that the extremes
/// are global, and that meet distributes over join.
inline Report validate_dist_lattice(const DistLattice& l) {
  Report r;
  const int n = l.n();
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (!l.leq(l.bottom, a) || !l.leq(a, l.top)) {
        ok = false;
        w = "element " + std::to_string(a);
      }
    r.record("bounds", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        auto j = detail::lub(l.order, a, b);
        auto m = detail::glb(l.order, a, b);
        if (!j || *j != l.join(a, b) || !m || *m != l.meet(a, b)) {
          ok = false;
          w = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    r.record("join-meet-tables", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
            ok = false;
            w = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                std::to_string(c) + ")";
          }
    r.record("distributivity", ok, w);
  }
  return r;
}

/// a is join-irreducible iff a differs from the join of everything strictly
/// below it (so bottom is excluded). Dually for meet-irreducible.
inline bool is_join_irreducible(const DistLattice& l, int a) {
  int v = l.bottom;
  for (int b = 0; b < l.n(); ++b)
    if (b != a && l.leq(b, a)) v = l.join(v, b);
  return v != a;
}

inline bool is_meet_irreducible(const DistLattice& l, int a) {
  int v = l.top;
  for (int b = 0; b < l.n(); ++b)
    if (b != a && l.leq(a, b)) v = l.meet(v, b);
  return v != a;
}

inline std::vector<int> join_irreducibles(const DistLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.n(); ++a)
    if (is_join_irreducible(l, a)) out.push_back(a);
  return out;
}

inline std::vector<int> meet_irreducibles(const DistLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.n(); ++a)
    if (is_meet_irreducible(l, a)) out.push_back(a);
  return out;
}

/// kappa(j) = join of {a : j not<= a}; the order isomorphism J -> M.
inline int kappa(const DistLattice& l, int j) {
  if (!is_join_irreducible(l, j))
    throw std::invalid_argument("kappa: argument is not join-irreducible");
  int v = l.bottom;
  for (int a = 0; a < l.n(); ++a)
    if (!l.leq(j, a)) v = l.join(v, a);
  return v;
}

/// kappa_inv(m) = meet of {b : b not<= m}.
inline int kappa_inv(const DistLattice& l, int m) {
  if (!is_meet_irreducible(l, m))
    throw std::invalid_argument("kappa_inv: argument is not meet-irreducible");
  int v = l.top;
  for (int b = 0; b < l.n(); ++b)
    if (!l.leq(b, m)) v = l.meet(v, b);
  return v;
}

/// A point of the dual space of L: an index into the meet-irreducible set,
/// together with the four translation accessors.
struct DualPoint {
  int index;    // position among meet-irreducibles, ascending by element
  int mu;       // the meet-irreducible itself
  int nu;       // kappa_inv(mu)
  Mask ideal;   // I_x = {a : a <= mu}
  Mask filter;  // F_x = {a : nu <= a}, the complement of I_x
};

inline std::vector<DualPoint> dual_points(const DistLattice& l) {
  std::vector<DualPoint> pts;
  for (int m : meet_irreducibles(l)) {
    DualPoint x;
    x.index = static_cast<int>(pts.size());
    x.mu = m;
    x.nu = kappa_inv(l, m);
    x.ideal = 0;
    for (int a = 0; a < l.n(); ++a)
      if (l.leq(a, m)) x.ideal |= bit(a);
    x.filter = full_mask(l.n()) & ~x.ideal;
    pts.push_back(x);
  }
  return pts;
}

/// The meet-irreducibles with the induced order.
inline Poset dual_poset(const DistLattice& l) {
  auto pts = dual_points(l);
  Poset p;
  p.n = static_cast<int>(pts.size());
  p.up.assign(p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (l.leq(pts[a].mu, pts[b].mu)) p.up[a] |= bit(b);
  return p;
}

/// hat(a) = {x in X : a not<= mu(x)}, a down-set of the dual poset.
inline Mask hat(const DistLattice& l, int a, const std::vector<DualPoint>& x) {
  Mask s = 0;
  for (const auto& pt : x)
    if (!l.leq(a, pt.mu)) s |= bit(pt.index);
  return s;
}

/// The lattice of down-sets of a poset, ordered by inclusion; join is union
/// and meet is intersection. Element i of the lattice is sets[i].
struct DownsetLattice {
  DistLattice lattice;
  std::vector<Mask> sets;  // ascending numeric order

  int index_of(Mask s) const {
    for (size_t i = 0; i < sets.size(); ++i)
      if (sets[i] == s) return static_cast<int>(i);
    throw std::invalid_argument("not a down-set of the source poset");
  }
};

inline DownsetLattice downset_lattice(const Poset& p) {
  DownsetLattice d;
  d.sets = all_downsets(p);
  const int n = static_cast<int>(d.sets.size());
  Poset order;
  order.n = n;
  order.up.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((d.sets[a] & ~d.sets[b]) == 0) order.up[a] |= bit(b);
  d.lattice = make_lattice(order);
  return d;
}

}  // namespace duality

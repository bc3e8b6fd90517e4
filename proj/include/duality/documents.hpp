#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "duality/dual_space.hpp"
#include "duality/lattice.hpp"
#include "duality/ominus_algebra.hpp"
#include "duality/poset.hpp"

namespace duality {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraDoc {
  std::string name;
  OminusAlgebra algebra;
  // False when "leq" parsed but is not a bounded lattice order; the join and
  // meet tables are then placeholders and only the poset part is meaningful.
  bool lattice_ok = true;
};

struct SpaceDoc {
  std::string name;
  OminusSpace space;
};

enum class DocKind { Algebra, Space };

inline DocKind classify_document(const json& j) {
  if (!j.is_object()) throw ParseError("document root must be an object");
  if (j.contains("ominus")) return DocKind::Algebra;
  if (j.contains("i")) return DocKind::Space;
  throw ParseError("document has neither \"ominus\" nor \"i\"");
}

namespace detail {

inline int expect_index(const json& j, int n, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer index");
  const int v = j.get<int>();
  if (v < 0 || v >= n) throw ParseError(where + ": index out of range");
  return v;
}

/// Reads "leq" given either as a pair list or as an n x n boolean matrix.
inline Poset parse_order(const json& j, int n, const std::string& field) {
  if (!j.contains(field)) throw ParseError("missing field \"" + field + "\"");
  const json& leq = j.at(field);
  if (!leq.is_array()) throw ParseError("\"" + field + "\" must be an array");
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  const bool matrix =
      static_cast<int>(leq.size()) == n && n > 0 && leq[0].is_array() &&
      static_cast<int>(leq[0].size()) == n &&
      (n != 2 || leq[0][0].is_boolean() || leq[0][0].is_number_integer());
  // A 2x2 integer matrix is ambiguous with a pair list of two pairs; treat
  // entries limited to 0/1 as a matrix only when some row breaks the
  // pair-list reading (a pair list row is also a valid 0/1 matrix row there,
  // and both readings coincide on the relations that can arise: accept the
  // pair-list reading in that case).
  bool as_pairs = !matrix;
  if (!as_pairs && n == 2) {
    for (const auto& row : leq)
      for (const auto& cell : row)
        if (!cell.is_boolean() && (cell.get<int>() < 0 || cell.get<int>() > 1))
          as_pairs = true;
  }
  if (as_pairs) {
    for (const auto& pr : leq) {
      if (!pr.is_array() || pr.size() != 2)
        throw ParseError("\"" + field + "\" pair entries must be [a,b]");
      const int a = expect_index(pr[0], n, field);
      const int b = expect_index(pr[1], n, field);
      p.up[a] |= bit(b);
    }
  } else {
    for (int a = 0; a < n; ++a) {
      const json& row = leq[a];
      if (static_cast<int>(row.size()) != n)
        throw ParseError("\"" + field + "\" matrix row " + std::to_string(a) +
                         " has wrong length");
      for (int b = 0; b < n; ++b) {
        const json& cell = row[b];
        const bool v = cell.is_boolean() ? cell.get<bool>()
                                         : expect_index(cell, 2, field) != 0;
        if (v) p.up[a] |= bit(b);
      }
    }
  }
  return p;
}

inline std::vector<std::string> parse_labels(const json& j, const char* field) {
  std::vector<std::string> labels;
  if (!j.contains(field)) return labels;
  for (const auto& e : j.at(field)) {
    if (!e.is_string())
      throw ParseError(std::string("\"") + field + "\" entries must be strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

inline json order_pairs(const Poset& p) {
  json out = json::array();
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (p.leq(a, b)) out.push_back(json::array({a, b}));
  return out;
}

}  // namespace detail

/// Parses an algebra document. Structural errors (shapes, ranges, duplicate
/// entries) throw ParseError; semantic validity is checked separately.
inline AlgebraDoc parse_algebra_document(const json& j) {
  AlgebraDoc doc;
  doc.name = j.value("name", "");
  if (!j.contains("ominus")) throw ParseError("missing field \"ominus\"");
  const json& tab = j.at("ominus");
  if (!tab.is_array() || tab.empty())
    throw ParseError("\"ominus\" must be a non-empty table");
  const int n = static_cast<int>(tab.size());
  if (n > 64) throw SizeCapError("algebra documents capped at 64 elements");

  auto labels = detail::parse_labels(j, "elements");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParseError("\"elements\" length does not match \"ominus\" size");

  Poset p = detail::parse_order(j, n, "leq");
  p.labels = std::move(labels);
  auto lat = try_make_lattice(p);
  if (!lat) {
    // keep structure parseable even when the order is not a lattice, so
    // cmd_check can report the property failure instead of a parse error
    doc.lattice_ok = false;
    doc.algebra.lattice.order = p;
    doc.algebra.lattice.bottom = doc.algebra.lattice.top = 0;
    doc.algebra.lattice.join_tab.assign(n * n, 0);
    doc.algebra.lattice.meet_tab.assign(n * n, 0);
  } else {
    doc.algebra.lattice = *lat;
  }
  doc.algebra.ominus = BinaryOp::zeros(n);
  for (int a = 0; a < n; ++a) {
    const json& row = tab[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("\"ominus\" row " + std::to_string(a) +
                       " has wrong length");
    for (int b = 0; b < n; ++b)
      doc.algebra.ominus.at(a, b) =
          detail::expect_index(row[b], n, "ominus[" + std::to_string(a) + "]");
  }
  return doc;
}

/// Parses a space document: points/leq, the i list, and the plus/star triple
/// lists. A repeated (x,y) pair in a triple list is a parse error.
inline SpaceDoc parse_space_document(const json& j) {
  SpaceDoc doc;
  doc.name = j.value("name", "");
  if (!j.contains("i")) throw ParseError("missing field \"i\"");
  const json& ij = j.at("i");
  if (!ij.is_array()) throw ParseError("\"i\" must be an array");
  const int n = static_cast<int>(ij.size());
  if (n > 64) throw SizeCapError("space documents capped at 64 points");

  auto labels = detail::parse_labels(j, "points");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParseError("\"points\" length does not match \"i\" size");
  doc.space.x = detail::parse_order(j, n, "leq");
  doc.space.x.labels = std::move(labels);
  for (int x = 0; x < n; ++x)
    doc.space.i.push_back(detail::expect_index(ij[x], n, "i"));

  doc.space.plus = PartialOp::empty(n);
  doc.space.star = PartialOp::empty(n);
  for (auto [field, op] :
       {std::pair{"plus", &doc.space.plus}, std::pair{"star", &doc.space.star}}) {
    if (!j.contains(field))
      throw ParseError(std::string("missing field \"") + field + "\"");
    for (const auto& t : j.at(field)) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError(std::string("\"") + field +
                         "\" entries must be [x,y,result]");
      const int x = detail::expect_index(t[0], n, field);
      const int y = detail::expect_index(t[1], n, field);
      const int v = detail::expect_index(t[2], n, field);
      if (op->defined(x, y))
        throw ParseError(std::string("duplicate \"") + field + "\" pair (" +
                         std::to_string(x) + "," + std::to_string(y) + ")");
      op->set(x, y, v);
    }
  }
  return doc;
}

inline json write_algebra_doc(const AlgebraDoc& doc) {
  json j;
  j["name"] = doc.name;
  if (!doc.algebra.lattice.order.labels.empty())
    j["elements"] = doc.algebra.lattice.order.labels;
  j["leq"] = detail::order_pairs(doc.algebra.lattice.order);
  json tab = json::array();
  const int n = doc.algebra.n();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(doc.algebra.sub(a, b));
    tab.push_back(row);
  }
  j["ominus"] = tab;
  return j;
}

inline json write_space_doc(const SpaceDoc& doc) {
  json j;
  j["name"] = doc.name;
  const int n = doc.space.n();
  json points = json::array();
  for (int x = 0; x < n; ++x) points.push_back(doc.space.x.label(x));
  j["points"] = points;
  j["leq"] = detail::order_pairs(doc.space.x);
  j["i"] = doc.space.i;
  for (auto [field, op] :
       {std::pair{"plus", &doc.space.plus}, std::pair{"star", &doc.space.star}}) {
    json triples = json::array();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (op->defined(x, y))
          triples.push_back(json::array({x, y, op->val[x][y]}));
    j[field] = triples;
  }
  return j;
}

/// Extended dual of an algebra document, with deterministic point names
/// m0, m1, ... in ascending mu order.
inline SpaceDoc dualize(const AlgebraDoc& doc) {
  SpaceDoc out;
  out.name = doc.name.empty() ? "dual" : "dual(" + doc.name + ")";
  out.space = extended_dual(doc.algebra);
  for (int x = 0; x < out.space.n(); ++x)
    out.space.x.labels.push_back("m" + std::to_string(x));
  return out;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace detail

/// Hasse diagram of the covering relation, bottom-up.
inline std::string export_dot_poset(const Poset& p, const std::string& name) {
  std::string out = "digraph \"" + detail::dot_escape(name) + "\" {\n";
  out += "  rankdir=BT;\n";
  for (int a = 0; a < p.n; ++a)
    out += "  n" + std::to_string(a) + " [label=\"" +
           detail::dot_escape(p.label(a)) + "\"];\n";
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (p.covers(a, b))
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

inline std::string export_dot_algebra(const AlgebraDoc& doc) {
  return export_dot_poset(doc.algebra.lattice.order,
                          doc.name.empty() ? "algebra" : doc.name);
}

/// Space diagram: Hasse edges, i as dashed arcs, and the +/* tables as
/// comment lines.
inline std::string export_dot_space(const SpaceDoc& doc) {
  const OminusSpace& s = doc.space;
  std::string out = "digraph \"" +
                    detail::dot_escape(doc.name.empty() ? "space" : doc.name) +
                    "\" {\n  rankdir=BT;\n";
  for (int x = 0; x < s.n(); ++x)
    out += "  n" + std::to_string(x) + " [label=\"" +
           detail::dot_escape(s.x.label(x)) + "\"];\n";
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b)
      if (s.x.covers(a, b))
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  for (int x = 0; x < s.n(); ++x)
    out += "  n" + std::to_string(x) + " -> n" + std::to_string(s.i[x]) +
           " [style=dashed, constraint=false];\n";
  for (auto [label, op] :
       {std::pair{"plus", &s.plus}, std::pair{"star", &s.star}}) {
    for (int x = 0; x < s.n(); ++x)
      for (int y = 0; y < s.n(); ++y)
        if (op->defined(x, y))
          out += std::string("  // ") + label + ": " + std::to_string(x) + " " +
                 std::to_string(y) + " -> " + std::to_string(op->val[x][y]) +
                 "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace duality

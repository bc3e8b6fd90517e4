#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duality/complex_algebra.hpp"
#include "duality/constructions.hpp"
#include "duality/documents.hpp"
#include "duality/dual_space.hpp"
#include "duality/iso.hpp"
#include "duality/ominus_algebra.hpp"

namespace duality {

// Exit-code contract: 0 pass, 1 parse/IO, 2 property failure,
// 3 internal invariant breach.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitProperty = 2;
inline constexpr int kExitInternal = 3;

namespace cli_detail {

/// Effective size cap: DUALITY_MAX_SIZE when set, clamped to 1..64.
inline int size_cap() {
  const char* e = std::getenv("DUALITY_MAX_SIZE");
  if (!e || !*e) return 64;
  const int v = std::atoi(e);
  return std::clamp(v, 1, 64);
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + path);
  return j;
}

inline void print_report(const Report& r, std::ostream& out) {
  for (const auto& item : r.items) {
    if (item.ok)
      out << "ok   " << item.name << "\n";
    else
      out << "FAIL " << item.name << "  witness: " << item.witness << "\n";
  }
}

inline json report_json(const Report& r) {
  json items = json::array();
  for (const auto& item : r.items) {
    json e;
    e["name"] = item.name;
    e["ok"] = item.ok;
    if (!item.ok) e["witness"] = item.witness;
    items.push_back(e);
  }
  return items;
}

inline void emit(std::ostream& out, bool as_json, const json& machine,
                 const std::string& human) {
  if (as_json)
    out << machine.dump(2) << "\n";
  else
    out << human;
}

struct LoadedDoc {
  DocKind kind;
  AlgebraDoc algebra;  // meaningful when kind == Algebra
  SpaceDoc space;      // meaningful when kind == Space
};

inline LoadedDoc load_document(const std::string& path) {
  const json j = load_json(path);
  LoadedDoc d;
  d.kind = classify_document(j);
  const int cap = size_cap();
  if (d.kind == DocKind::Algebra) {
    d.algebra = parse_algebra_document(j);
    if (d.algebra.algebra.n() > cap)
      throw SizeCapError("document exceeds the size cap of " +
                         std::to_string(cap));
  } else {
    d.space = parse_space_document(j);
    if (d.space.space.n() > cap)
      throw SizeCapError("document exceeds the size cap of " +
                         std::to_string(cap));
  }
  return d;
}

/// Full validation report for a parsed document.
inline Report document_report(const LoadedDoc& d) {
  Report r;
  if (d.kind == DocKind::Algebra) {
    r.append(validate_poset(d.algebra.algebra.lattice.order));
    r.record("bounded-lattice", d.algebra.lattice_ok,
             d.algebra.lattice_ok ? "" : "joins or meets missing");
    if (!r.ok()) return r;
    r.append(validate_dist_lattice(d.algebra.algebra.lattice));
    if (!r.ok()) return r;
    r.append(validate_ominus_algebra(d.algebra.algebra));
  } else {
    r.append(validate_poset(d.space.space.x));
    if (!r.ok()) return r;
    r.append(validate_ominus_space(d.space.space));
  }
  return r;
}

/// Requires a valid algebra document at `path`; throws on anything else.
inline AlgebraDoc load_valid_algebra(const std::string& path) {
  LoadedDoc d = load_document(path);
  if (d.kind != DocKind::Algebra)
    throw ParseError("expected an algebra document: " + path);
  Report r = document_report(d);
  if (!r.ok()) {
    const CheckItem* bad = nullptr;
    for (const auto& item : r.items)
      if (!item.ok) {
        bad = &item;
        break;
      }
    throw DomainError("invalid algebra document (" + bad->name + ")");
  }
  return d.algebra;
}

inline int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
  LoadedDoc d = load_document(path);
  Report r = document_report(d);
  std::ostringstream human;
  print_report(r, human);
  human << "result: " << (r.ok() ? "valid" : "invalid") << "\n";
  json machine;
  machine["command"] = "check";
  machine["kind"] = d.kind == DocKind::Algebra ? "algebra" : "space";
  machine["ok"] = r.ok();
  machine["items"] = report_json(r);
  emit(out, as_json, machine, human.str());
  return r.ok() ? kExitOk : kExitProperty;
}

inline int cmd_dualize(const std::string& path, const std::string& out_path,
                       std::ostream& out) {
  AlgebraDoc doc = load_valid_algebra(path);
  const std::string text = write_space_doc(dualize(doc)).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write file: " + out_path);
    f << text;
  }
  return kExitOk;
}

inline int cmd_mvcheck(const std::string& path, bool as_json,
                       std::ostream& out) {
  LoadedDoc d = load_document(path);
  Report invalid = document_report(d);
  if (!invalid.ok()) {
    std::ostringstream human;
    print_report(invalid, human);
    human << "result: invalid\n";
    json machine;
    machine["command"] = "mvcheck";
    machine["ok"] = false;
    machine["items"] = report_json(invalid);
    emit(out, as_json, machine, human.str());
    return kExitProperty;
  }

  Report all;
  bool is_mv = false;
  bool disagreement = false;
  if (d.kind == DocKind::Algebra) {
    const OminusAlgebra& a = d.algebra.algebra;
    MvAlgebraVerdict eq = is_mv_algebra(a);
    MvSpaceVerdict dual = is_mv_space(extended_dual(a));
    all.append(eq.equations);
    all.append(eq.supervariety);
    all.append(dual.supervariety);
    all.append(dual.mv6);
    is_mv = eq.is_mv;
    disagreement = eq.is_mv != dual.is_mv;
  } else {
    MvSpaceVerdict dual = is_mv_space(d.space.space);
    all.append(dual.supervariety);
    all.append(dual.mv6);
    is_mv = dual.is_mv;
  }
  std::ostringstream human;
  print_report(all, human);
  human << "MV: " << (is_mv ? "yes" : "no") << "\n";
  if (disagreement)
    human << "ERROR: equational and dual verdicts disagree\n";
  json machine;
  machine["command"] = "mvcheck";
  machine["mv"] = is_mv;
  machine["agreement"] = !disagreement;
  machine["items"] = report_json(all);
  emit(out, as_json, machine, human.str());
  if (disagreement) return kExitInternal;
  return is_mv ? kExitOk : kExitProperty;
}

inline int cmd_roundtrip(const std::string& path, bool as_json,
                         std::ostream& out) {
  AlgebraDoc doc = load_valid_algebra(path);
  const OminusAlgebra& a = doc.algebra;
  DoubleDualResult res = double_dual_isomorphism(a);
  const auto pts = dual_points(a.lattice);
  std::ostringstream human;
  json rows = json::array();
  for (int e = 0; e < a.n(); ++e) {
    const Mask h = hat(a.lattice, e, pts);
    std::string set = "{";
    json row = json::array();
    for (size_t x = 0; x < pts.size(); ++x)
      if (has_bit(h, static_cast<int>(x))) {
        if (set.size() > 1) set += ",";
        set += "m" + std::to_string(x);
        row.push_back(static_cast<int>(x));
      }
    set += "}";
    human << a.lattice.order.label(e) << " -> " << set << "\n";
    rows.push_back(row);
  }
  human << "roundtrip: " << (res.ok ? "ok" : "FAIL  witness: " + res.witness)
        << "\n";
  json machine;
  machine["command"] = "roundtrip";
  machine["ok"] = res.ok;
  machine["hat"] = rows;
  if (!res.ok) machine["witness"] = res.witness;
  emit(out, as_json, machine, human.str());
  return res.ok ? kExitOk : kExitInternal;
}

inline DistLattice lattice_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("lattice spec must look like chain:N or boolean:K");
  const std::string kind = spec.substr(0, colon);
  int arg = 0;
  try {
    arg = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("lattice spec has a non-numeric size: " + spec);
  }
  const int cap = std::min(size_cap(), 8);
  if (kind == "chain") {
    if (arg < 1 || arg > cap)
      throw SizeCapError("chain size must be in 1.." + std::to_string(cap));
    return chain_lattice(arg);
  }
  if (kind == "boolean") {
    if (arg < 0 || (1 << arg) > cap)
      throw SizeCapError("boolean lattice exceeds the cap of " +
                         std::to_string(cap) + " elements");
    return boolean_lattice(arg);
  }
  throw ParseError("unknown lattice spec kind: " + kind);
}

inline int cmd_enumerate(const std::string& spec, bool count_only,
                         bool mv_only, bool as_json, std::ostream& out) {
  const DistLattice l = lattice_from_spec(spec);
  auto algebras = enumerate_ominus(l);
  if (mv_only) {
    std::vector<OminusAlgebra> kept;
    for (auto& a : algebras)
      if (is_mv_algebra(a).is_mv) kept.push_back(std::move(a));
    algebras = std::move(kept);
  }
  if (count_only) {
    if (as_json) {
      json machine;
      machine["command"] = "enumerate";
      machine["spec"] = spec;
      machine["count"] = algebras.size();
      out << machine.dump(2) << "\n";
    } else {
      out << algebras.size() << "\n";
    }
    return kExitOk;
  }
  for (size_t k = 0; k < algebras.size(); ++k) {
    AlgebraDoc doc;
    doc.name = spec + "#" + std::to_string(k);
    doc.algebra = algebras[k];
    out << write_algebra_doc(doc).dump() << "\n";
  }
  return kExitOk;
}

inline int cmd_export_dot(const std::string& path, const std::string& what,
                          std::ostream& out) {
  LoadedDoc d = load_document(path);
  if (d.kind == DocKind::Space) {
    out << export_dot_space(d.space);
    return kExitOk;
  }
  if (what == "dual") {
    AlgebraDoc doc = load_valid_algebra(path);
    out << export_dot_space(dualize(doc));
  } else {
    out << export_dot_algebra(d.algebra);
  }
  return kExitOk;
}

inline int cmd_demo(std::ostream& out) {
  struct Entry {
    std::string name;
    OminusAlgebra algebra;
  };
  std::vector<Entry> demos;
  demos.push_back({"Lukasiewicz chain (3 elements)", mv_chain(3)});
  demos.push_back(
      {"nilpotent minimum chain (4 elements)", disconnected_rotation(2)});
  demos.push_back({"boolean difference (2 atoms)", boolean_difference(2)});
  for (const auto& e : demos) {
    out << "== " << e.name << " ==\n";
    out << "valid: " << (validate_ominus_algebra(e.algebra).ok() ? "yes" : "no")
        << "\n";
    MvAlgebraVerdict eq = is_mv_algebra(e.algebra);
    const OminusSpace s = extended_dual(e.algebra);
    MvSpaceVerdict dual = is_mv_space(s);
    out << "dual points: " << s.n() << "\n";
    out << "MV (equational): " << (eq.is_mv ? "yes" : "no") << "\n";
    out << "MV (dual): " << (dual.is_mv ? "yes" : "no") << "\n";
    if (!eq.is_mv)
      for (const auto& item : eq.equations.items)
        if (!item.ok)
          out << "  equational witness " << item.name << " at " << item.witness
              << "\n";
    if (!dual.is_mv)
      for (const Report* rep : {&dual.supervariety, &dual.mv6})
        for (const auto& item : rep->items)
          if (!item.ok)
            out << "  dual witness " << item.name << " at " << item.witness
                << "\n";
    if (eq.is_mv != dual.is_mv) return kExitInternal;
  }
  return kExitOk;
}

}  // namespace cli_detail

/// The whole command-line surface, callable in-process so goldens can be
/// checked without spawning. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite extended Priestley duality toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.fallthrough();

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a document");
  check->add_option("path", check_path)->required();

  std::string dualize_path, dualize_out;
  auto* dual = app.add_subcommand("dualize", "emit the extended dual space");
  dual->add_option("path", dualize_path)->required();
  dual->add_option("-o,--output", dualize_out, "output file (default stdout)");

  std::string mv_path;
  auto* mv = app.add_subcommand("mvcheck", "decide MV membership");
  mv->add_option("path", mv_path)->required();

  std::string rt_path;
  auto* rt = app.add_subcommand("roundtrip", "double-dual isomorphism");
  rt->add_option("path", rt_path)->required();

  std::string enum_spec;
  bool count_only = false, mv_only = false;
  auto* en = app.add_subcommand("enumerate", "all (-)-structures on a lattice");
  en->add_option("lattice", enum_spec, "chain:N or boolean:K")->required();
  en->add_flag("--count-only", count_only);
  en->add_flag("--mv-only", mv_only);

  std::string dot_path, dot_what = "algebra";
  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot->add_option("path", dot_path)->required();
  dot->add_option("--what", dot_what)
      ->check(CLI::IsMember({"algebra", "dual"}));

  auto* demo = app.add_subcommand("demo", "built-in worked examples");

  std::vector<const char*> argv = {"duality"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    using namespace cli_detail;
    if (check->parsed()) return cmd_check(check_path, as_json, out);
    if (dual->parsed()) return cmd_dualize(dualize_path, dualize_out, out);
    if (mv->parsed()) return cmd_mvcheck(mv_path, as_json, out);
    if (rt->parsed()) return cmd_roundtrip(rt_path, as_json, out);
    if (en->parsed())
      return cmd_enumerate(enum_spec, count_only, mv_only, as_json, out);
    if (dot->parsed()) return cmd_export_dot(dot_path, dot_what, out);
    if (demo->parsed()) return cmd_demo(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InternalInvariantBroken& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const SpaceInvalid& e) {
    err << "error: " << e.what() << "\n";
    return kExitProperty;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitProperty;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitProperty;
  }
  err << "error: no subcommand\n";
  return kExitParse;
}

}  // namespace duality

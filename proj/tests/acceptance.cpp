// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion recomputes its expectations from independent
// oracles where the value is not forced by definition.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "duality/cli.hpp"
#include "duality/complex_algebra.hpp"
#include "duality/constructions.hpp"
#include "duality/documents.hpp"
#include "duality/dual_space.hpp"
#include "duality/iso.hpp"
#include "duality/morphisms.hpp"
#include "oracles.hpp"

using namespace duality;

namespace {

std::vector<OminusAlgebra> corpus() {
  std::vector<OminusAlgebra> out;
  for (int atoms = 0; atoms <= 3; ++atoms)
    out.push_back(boolean_difference(atoms));
  for (int n = 2; n <= 8; ++n) out.push_back(mv_chain(n));
  for (int k = 1; k <= 5; ++k) out.push_back(disconnected_rotation(k));
  return out;
}

std::vector<DistLattice> small_lattices() {
  // every bounded distributive lattice with at most 4 elements, up to iso
  return {chain_lattice(1), chain_lattice(2), chain_lattice(3),
          chain_lattice(4), boolean_lattice(2)};
}

std::string data_file(const std::string& name) {
  return std::string(DUALITY_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable: " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

// 1. The filter-formula operations agree with the residuation module.
void criterion_1() {
  std::string detail;
  bool ok = true;
  for (const OminusAlgebra& a : corpus()) {
    const OminusSpace s = extended_dual(a);
    const auto pts = dual_points(a.lattice);
    for (int x = 0; x < s.n() && ok; ++x)
      for (int y = 0; y < s.n() && ok; ++y) {
        if (s.plus.defined(x, y)) {
          const int expect =
              sigma_sharp(a.lattice, a.ominus, pts[x].mu, pts[y].mu);
          if (pts[s.plus.at(x, y)].mu != expect) {
            ok = false;
            detail = "plus mismatch, |A|=" + std::to_string(a.n());
          }
        }
        if (s.star.defined(x, y)) {
          const int expect =
              pi_flat(a.lattice, a.ominus, pts[x].nu, pts[y].nu);
          if (pts[s.star.at(x, y)].nu != expect) {
            ok = false;
            detail = "star mismatch, |A|=" + std::to_string(a.n());
          }
        }
      }
  }
  report("criterion-1 residuation-oracle equivalence of + and *", ok, detail);
}

// 2. Double-dual round trip through hat.
void criterion_2() {
  std::string detail;
  bool ok = true;
  for (const OminusAlgebra& a : corpus()) {
    const DoubleDualResult res = double_dual_isomorphism(a);
    if (!res.ok) {
      ok = false;
      detail = "|A|=" + std::to_string(a.n()) + ": " + res.witness;
      break;
    }
  }
  report("criterion-2 double-dual round trip", ok, detail);
}

// 3. Full first-order axiom suite on every corpus dual.
void criterion_3() {
  std::string detail;
  bool ok = true;
  for (const OminusAlgebra& a : corpus()) {
    const OminusSpace s = extended_dual(a);
    Report r = validate_ominus_space(s);
    r.append(check_expansion_and_unit(s));
    r.append(check_rdop(s));
    r.append(verify_complex_properties(s));
    for (const CheckItem& item : r.items)
      if (!item.ok && ok) {
        ok = false;
        detail = "|A|=" + std::to_string(a.n()) + " " + item.name + " " +
                 item.witness;
      }
  }
  report("criterion-3 ominus-space axiom suite", ok, detail);
}

// 4. MV agreement over the full enumeration, counts against brute force.
void criterion_4() {
  std::string detail;
  bool ok = true;
  for (const DistLattice& l : small_lattices()) {
    const auto enumerated = enumerate_ominus(l);
    std::vector<std::vector<int>> tables;
    for (const OminusAlgebra& a : enumerated) tables.push_back(a.ominus.tab);
    if (tables != oracles::all_valid_tables(l)) {
      ok = false;
      detail = "enumeration differs from brute force at |L|=" +
               std::to_string(l.n());
    }
    for (const OminusAlgebra& a : enumerated)
      if (is_mv_algebra(a).is_mv != is_mv_space(extended_dual(a)).is_mv) {
        ok = false;
        detail = "MV disagreement at |L|=" + std::to_string(l.n());
      }
  }
  const auto on3 = enumerate_ominus(chain_lattice(3));
  int mv = 0;
  for (const OminusAlgebra& a : on3)
    if (is_mv_algebra(a).is_mv) ++mv;
  if (on3.size() != 5 || mv != 1) {
    ok = false;
    detail = "3-chain counts " + std::to_string(on3.size()) + "/" +
             std::to_string(mv);
  }
  // oracle-side confirmation of the same counts
  int oracle_mv = 0;
  const auto oracle_tables = oracles::all_valid_tables(chain_lattice(3));
  for (const auto& tab : oracle_tables) {
    OminusAlgebra a{chain_lattice(3), BinaryOp{3, tab}};
    if (is_mv_algebra(a).is_mv) ++oracle_mv;
  }
  if (oracle_tables.size() != 5 || oracle_mv != 1) {
    ok = false;
    detail = "oracle counts differ";
  }
  report("criterion-4 MV agreement over full enumeration", ok, detail);
}

// 5. The nilpotent minimum example with its exact certificates.
void criterion_5() {
  std::string detail;
  bool ok = true;
  const OminusAlgebra nm4 = disconnected_rotation(2);
  const std::vector<int> expected_table = {0, 0, 0, 0, 1, 0, 0, 0,
                                           2, 2, 0, 0, 3, 2, 1, 0};
  if (nm4.ominus.tab != expected_table) {
    ok = false;
    detail = "table differs from the derived one";
  }
  if (!check_supervariety(nm4).ok()) {
    ok = false;
    detail = "supervariety fails";
  }
  const OminusSpace s = extended_dual(nm4);
  if (!check_dual_supervariety(s).ok()) {
    ok = false;
    detail = "dual conditions (i)-(iv) fail";
  }
  const Report mv6 = check_mv6_dual(s);
  const CheckItem* v = mv6.find("dual-mv-v");
  if (mv6.ok() || v == nullptr || v->witness != "(x=0,x'=1,y=0,w=1)") {
    ok = false;
    detail = "condition (v) certificate mismatch";
  }
  const Report eq = check_mv_equations(nm4);
  const CheckItem* iii = eq.find("mv-iii");
  if (iii == nullptr || iii->ok || iii->witness != "(2,1)") {
    ok = false;
    detail = "equational (iii) witness mismatch";
  }
  report("criterion-5 nilpotent minimum certificates", ok, detail);
}

// 6. Morphism duality, exhaustively over small duals.
void criterion_6() {
  std::string detail;
  bool ok = true;
  std::vector<OminusAlgebra> algebras;
  for (const DistLattice& l : small_lattices())
    for (OminusAlgebra& a : enumerate_ominus(l)) algebras.push_back(std::move(a));
  std::vector<OminusSpace> duals;
  for (const OminusAlgebra& a : algebras) duals.push_back(extended_dual(a));
  long maps_checked = 0;
  for (size_t i = 0; i < duals.size() && ok; ++i)
    for (size_t j = 0; j < duals.size() && ok; ++j)
      for (const auto& f : order_preserving_maps(duals[i].x, duals[j].x)) {
        const MorphismDualityVerdict v =
            check_morphism_duality({duals[i], duals[j], f});
        ++maps_checked;
        if (!v.agree()) {
          ok = false;
          detail = "disagreement between duals " + std::to_string(i) + "," +
                   std::to_string(j);
          break;
        }
      }
  if (maps_checked == 0) {
    ok = false;
    detail = "no maps enumerated";
  }
  report("criterion-6 morphism duality (" + std::to_string(maps_checked) +
             " maps)",
         ok, detail);
}

// 7. The (*+) law with exact infima, plus mutation sensitivity.
void criterion_7() {
  std::string detail;
  bool ok = true;
  for (const OminusAlgebra& a : corpus()) {
    const OminusSpace s = extended_dual(a);
    for (int x = 0; x < s.n() && ok; ++x)
      for (int y = 0; y < s.n() && ok; ++y) {
        if (!s.star.defined(x, y)) continue;
        Mask values = 0;
        for (int w = 0; w < s.n(); ++w)
          if (s.plus.defined(x, w) && !s.x.leq(w, y))
            values |= bit(s.plus.at(x, w));
        const auto inf = poset_inf(s.x, values);
        if (!inf || *inf != s.star.at(x, y)) {
          ok = false;
          detail = "(*+) fails at |A|=" + std::to_string(a.n());
        }
      }
  }
  // deleting any single + triple from the serialized NM4 dual must flip at
  // least one validation item
  AlgebraDoc nm4;
  nm4.name = "NM4";
  nm4.algebra = disconnected_rotation(2);
  const json dual = write_space_doc(dualize(nm4));
  const size_t triples = dual.at("plus").size();
  if (triples != 6) {
    ok = false;
    detail = "unexpected plus table size";
  }
  for (size_t k = 0; k < triples && ok; ++k) {
    json mutated = dual;
    mutated["plus"].erase(mutated["plus"].begin() + static_cast<long>(k));
    const SpaceDoc doc = parse_space_document(mutated);
    if (validate_ominus_space(doc.space).ok()) {
      ok = false;
      detail = "deleting plus triple " + std::to_string(k) + " goes unnoticed";
    }
  }
  report("criterion-7 (*+) law and mutation sensitivity", ok, detail);
}

// 8. CLI goldens and the exit-code contract.
void criterion_8() {
  std::string detail;
  bool ok = true;
  auto run = [](std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = run_cli(std::move(args), o, e);
    if (out) *out = o.str();
    return code;
  };
  std::string out;
  if (run({"dualize", data_file("l3.json")}, &out) != 0 ||
      out != slurp(data_file("l3_dual.json"))) {
    ok = false;
    detail = "l3 dual golden mismatch";
  }
  if (run({"dualize", data_file("nm4.json")}, &out) != 0 ||
      out != slurp(data_file("nm4_dual.json"))) {
    ok = false;
    detail = "nm4 dual golden mismatch";
  }
  if (run({"enumerate", "chain:3", "--count-only"}, &out) != 0 ||
      out != "5\n") {
    ok = false;
    detail = "enumerate count";
  }
  if (run({"check", data_file("l3.json")}) != 0) {
    ok = false;
    detail = "valid input exit code";
  }
  if (run({"check", data_file("malformed.json")}) != 1) {
    ok = false;
    detail = "malformed input exit code";
  }
  if (run({"check", data_file("invalid.json")}) != 2) {
    ok = false;
    detail = "invalid input exit code";
  }
  report("criterion-8 CLI goldens and exit codes", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

#include <catch2/catch_amalgamated.hpp>

#include "duality/constructions.hpp"
#include "duality/morphisms.hpp"

using namespace duality;

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  return f;
}

}  // namespace

TEST_CASE("identity is a space morphism and dualizes to the identity hom") {
  const OminusSpace s = extended_dual(mv_chain(3));
  SpaceMorphism m{s, s, identity_map(s.n())};
  CHECK(validate_space_morphism(m).ok());
  const AlgebraHom h = dual_hom(m);
  CHECK(h.h == identity_map(h.source.n()));
  CHECK(validate_algebra_hom(h).ok());
}

TEST_CASE("collapse of the Lukasiewicz dual onto the one-point space") {
  const OminusSpace src = extended_dual(mv_chain(3));
  const OminusSpace dst = extended_dual(mv_chain(2));
  SpaceMorphism m{src, dst, {0, 0}};
  const MorphismDualityVerdict v = check_morphism_duality(m);
  CHECK(v.agree());
  // preimages: h(empty) = empty, h({pt}) = {x0, x1}
  const AlgebraHom h = dual_hom(m);
  REQUIRE(h.source.n() == 2);  // down-sets of the point
  CHECK(h.h[0] == 0);
  CHECK(h.h[1] == 2);
}

TEST_CASE("constant map to a non-i-fixed point fails i-equivariance") {
  const OminusSpace s = extended_dual(mv_chain(3));
  SpaceMorphism m{s, s, {0, 0}};  // i swaps the two points; 0 is not fixed
  const Report r = validate_space_morphism(m);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.find("i-equivariance")->ok);
}

TEST_CASE("validate_algebra_hom on hand maps L3 -> 2-chain") {
  AlgebraHom bad{mv_chain(3), mv_chain(2), {0, 0, 1}};
  const Report rb = validate_algebra_hom(bad);
  REQUIRE_FALSE(rb.ok());
  const CheckItem* item = rb.find("ominus-preserved");
  REQUIRE(item != nullptr);
  CHECK_FALSE(item->ok);
  CHECK(item->witness == "(2,1)");  // h(1 - h) = 0 but h(1) - h(h) = 1

  // no map L3 -> 2-chain can preserve the operation: it would have to send
  // the negation-fixed h to a negation-fixed element, and the 2-chain has
  // none. The surviving candidate h -> 1 fails at the same pair.
  AlgebraHom other{mv_chain(3), mv_chain(2), {0, 1, 1}};
  const Report ro = validate_algebra_hom(other);
  REQUIRE_FALSE(ro.ok());
  CHECK(ro.find("ominus-preserved")->witness == "(2,1)");

  // the other direction does exist: the bounds embedding 2-chain -> L3
  AlgebraHom good{mv_chain(2), mv_chain(3), {0, 2}};
  CHECK(validate_algebra_hom(good).ok());
}

TEST_CASE("all self-maps of the Lukasiewicz dual agree with their duals") {
  const OminusSpace s = extended_dual(mv_chain(3));
  int checked = 0;
  for (const auto& f : order_preserving_maps(s.x, s.x)) {
    const MorphismDualityVerdict v = check_morphism_duality({s, s, f});
    CHECK(v.agree());
    ++checked;
  }
  CHECK(checked == 3);  // monotone self-maps of the 2-chain
}

TEST_CASE("morphism duality across duals of small algebras") {
  const std::vector<OminusAlgebra> algebras = {
      mv_chain(2), mv_chain(3), disconnected_rotation(2),
      boolean_difference(2)};
  for (const OminusAlgebra& a : algebras)
    for (const OminusAlgebra& b : algebras) {
      const OminusSpace sa = extended_dual(a);
      const OminusSpace sb = extended_dual(b);
      for (const auto& f : order_preserving_maps(sa.x, sb.x))
        CHECK(check_morphism_duality({sa, sb, f}).agree());
    }
}

TEST_CASE("composition closure and contravariant functoriality") {
  const OminusSpace s3 = extended_dual(mv_chain(3));
  const OminusSpace s2 = extended_dual(mv_chain(2));
  // collect the valid morphisms s3 -> s3 and s3 -> s2
  std::vector<SpaceMorphism> endos, collapses;
  for (const auto& f : order_preserving_maps(s3.x, s3.x))
    if (validate_space_morphism({s3, s3, f}).ok())
      endos.push_back({s3, s3, f});
  for (const auto& f : order_preserving_maps(s3.x, s2.x))
    if (validate_space_morphism({s3, s2, f}).ok())
      collapses.push_back({s3, s2, f});
  REQUIRE_FALSE(endos.empty());
  REQUIRE_FALSE(collapses.empty());
  for (const SpaceMorphism& g : collapses)
    for (const SpaceMorphism& f : endos) {
      // composite g . f : s3 -> s2
      std::vector<int> gf(s3.n());
      for (int x = 0; x < s3.n(); ++x) gf[x] = g.f[f.f[x]];
      SpaceMorphism comp{s3, s2, gf};
      CHECK(validate_space_morphism(comp).ok());
      // dual_hom reverses composition: (g.f)* = f* . g*
      const AlgebraHom hg = dual_hom(g), hf = dual_hom(f),
                       hgf = dual_hom(comp);
      for (int u = 0; u < hgf.source.n(); ++u)
        CHECK(hgf.h[u] == hf.h[hg.h[u]]);
    }
}

TEST_CASE("check_inclusion_morphism on a subspace of the NM4 dual") {
  const OminusSpace nm4 = extended_dual(disconnected_rotation(2));
  OminusSpace point;  // the i-fixed middle point with its unit
  point.x = chain_poset(1);
  point.i = {0};
  point.plus = PartialOp::empty(1);
  point.star = PartialOp::empty(1);
  point.plus.set(0, 0, 0);
  CHECK(check_inclusion_morphism({point, nm4, {1}}).ok());

  const OminusSpace l3 = extended_dual(mv_chain(3));
  const Report r = check_inclusion_morphism({point, l3, {0}});
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.find("i-agrees")->ok);  // i swaps x0 and x1 in the L3 dual

  // non-embedding: both points onto one
  const Report r2 = check_inclusion_morphism({l3, l3, {0, 0}});
  CHECK_FALSE(r2.find("order-embedding")->ok);
}

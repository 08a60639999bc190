#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albertine/her3.hpp"
#include "albertine/tits.hpp"

using namespace alb;

TEST_CASE("degree-3 associative algebras") {
  Ctx q = RingCtx::rationals();
  CubicAssoc e = assoc_construct(AssocKind::split_etale3, q);
  CHECK(e.norm_of(e.unit) == q->one());
  Ctx g = RingCtx::poly_n(q, "x", 3);
  Vec x = vec_generic(g, 3, 0);
  CHECK(e.norm_of(x) == x[0] * x[1] * x[2]);
  CHECK(e.trace(x) == x[0] + x[1] + x[2]);
  // sharp recovers the componentwise adjoint
  CHECK(e.sharp(x) == Vec{x[1] * x[2], x[0] * x[2], x[0] * x[1]});

  CubicAssoc m = assoc_construct(AssocKind::mat3, q);
  CHECK(m.norm_of(m.unit) == q->one());
  Ctx g9 = RingCtx::poly_n(q, "x", 18);
  Vec y = vec_generic(g9, 9, 0), z = vec_generic(g9, 9, 9);
  // N multiplicative, trace form = tr(yz)
  CHECK(m.norm_of(m.times(y, z)) == m.norm_of(y) * m.norm_of(z));
  Scalar tr_yz = g9->zero();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) tr_yz += y[3 * r + c] * z[3 * c + r];
  CHECK(m.t_form(y, z) == tr_yz);
  // Cayley-Hamilton: y sharp(y) = N(y) 1
  CHECK(m.times(y, m.sharp(y)) == vec_scale(m.norm_of(y), vec_embed(g9, m.unit)));

  Ctx f2 = RingCtx::gf(2);
  CubicAssoc c8 = assoc_construct(AssocKind::gf_cubic, f2);
  CHECK(c8.norm_of(c8.unit) == f2->one());
  Vec w = vec_basis(f2, 3, 1);
  CHECK(c8.trace(w) == f2->zero());
  CHECK(c8.norm_of(w) == f2->one());  // w has order 7
  CHECK(!mat_det(c8.tmat).is_zero());
  // w generates: 1, w, w^2 independent
  CHECK(c8.times(w, w) == vec_basis(f2, 3, 2));
}

TEST_CASE("first Tits construction") {
  Ctx q = RingCtx::rationals();
  CubicAssoc e = assoc_construct(AssocKind::split_etale3, q);
  Ctx lmu = RingCtx::poly(q, {"mu"}, {1});
  CubicAssoc el = assoc_construct(AssocKind::split_etale3, lmu);
  CubicJordan jl = tits1(el, lmu->indet(0));
  CHECK(jl.dim == 9);
  CHECK(cns_verify_all(jl).all_pass());

  // w = (0,1,0) has w# = mu (0,0,1)
  Vec w = vec_zero(lmu, 9);
  for (int i = 3; i < 6; ++i) w[i] = lmu->one();
  Vec ws = jl.sharp(w);
  for (int i = 0; i < 9; ++i)
    CHECK(ws[i] == (i >= 6 ? lmu->indet(0) : lmu->zero()));

  // x0 cross (0, x1, x2) = (0, -x0 x1, -x2 x0)
  CubicJordan j2 = tits1(e, q->from_int(2));
  Ctx g = RingCtx::poly_n(q, "x", 9);
  Vec a = vec_zero(g, 9), b = vec_zero(g, 9);
  for (int i = 0; i < 3; ++i) a[i] = g->indet(i);
  for (int i = 3; i < 9; ++i) b[i] = g->indet(i);
  Vec x0(a.begin(), a.begin() + 3), x1(b.begin() + 3, b.begin() + 6),
      x2(b.begin() + 6, b.end());
  Vec cr = j2.cross(a, b);
  Vec m01 = vec_neg(e.times(x0, x1)), m20 = vec_neg(e.times(x2, x0));
  for (int i = 0; i < 3; ++i) {
    CHECK(cr[i] == g->zero());
    CHECK(cr[3 + i] == m01[i]);
    CHECK(cr[6 + i] == m20[i]);
  }

  CHECK_THROWS_AS(tits1(e, q->zero()), AlbError);
}

TEST_CASE("Tits construction over Mat3 verifies") {
  Ctx q = RingCtx::rationals();
  CubicAssoc m = assoc_construct(AssocKind::mat3, q);
  CubicJordan j = tits1(m, q->from_int(2));
  CHECK(j.dim == 27);
  Report r = cns_verify_all(j);
  INFO(r.to_text());
  CHECK(r.all_pass());
}

TEST_CASE("subalgebra generation") {
  Ctx q = RingCtx::rationals();
  CubicAssoc e = assoc_construct(AssocKind::split_etale3, q);
  CubicJordan j = tits1(e, q->one());
  CHECK(subalgebra_generated(j, {}).dim() == 1);

  Vec x = vec_zero(q, 9);
  x[0] = q->from_int(1);
  x[1] = q->from_int(2);
  x[2] = q->from_int(3);
  Vec w = vec_zero(q, 9);
  for (int i = 3; i < 6; ++i) w[i] = q->one();
  CHECK(subalgebra_generated(j, {x}).dim() == 3);  // powers of x only
  CHECK(subalgebra_generated(j, {x, w}).dim() == 9);

  // over GF(2) the etale slot must be GF(8)
  Ctx f2 = RingCtx::gf(2);
  CubicAssoc c8 = assoc_construct(AssocKind::gf_cubic, f2);
  CubicJordan j8 = tits1(c8, f2->one());
  Vec xw = vec_zero(f2, 9);
  xw[1] = f2->one();  // the field generator w in slot 0
  Vec w8 = vec_zero(f2, 9);
  w8[3] = f2->one();  // (0, 1, 0)
  CHECK(subalgebra_generated(j8, {xw, w8}).dim() == 9);
}

TEST_CASE("three elements generate the split Albert algebra") {
  Ctx f2 = RingCtx::gf(2);
  CubicAssoc m = assoc_construct(AssocKind::mat3, f2);
  CubicJordan alb = tits1(m, f2->one());
  std::vector<Vec> pair = mat3_generating_pair(f2);
  Vec a = vec_zero(f2, 27), b = vec_zero(f2, 27), w = vec_zero(f2, 27);
  for (int i = 0; i < 9; ++i) {
    a[i] = pair[0][i];
    b[i] = pair[1][i];
  }
  for (int i = 0; i < 9; ++i) w[9 + i] = m.unit[i];
  CHECK(subalgebra_generated(alb, {a, b}).dim() < 27);
  CHECK(subalgebra_generated(alb, {a, b, w}).dim() == 27);
}

TEST_CASE("two-by-two matrices need three generators") {
  PairCensus pc = generator_census_mat2();
  CHECK(pc.max_pair_dim == 3);
  REQUIRE(pc.witness.size() == 3);
}

TEST_CASE("matrix algebra generating pairs") {
  for (Ctx ctx : {RingCtx::gf(2), RingCtx::rationals()}) {
    std::vector<Vec> pair = mat3_generating_pair(ctx);
    CubicJordan j = mat3_plus(ctx);
    CHECK(subalgebra_generated(j, pair).dim() == 9);
  }
}

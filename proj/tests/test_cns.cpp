#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albertine/her3.hpp"

using namespace alb;

static CubicJordan diag3(const Ctx& ctx) {
  // the split cubic structure on R^3: N = x0 x1 x2
  auto sharp_fn = [](const Vec& x) {
    return Vec{x[1] * x[2], x[0] * x[2], x[0] * x[1]};
  };
  auto norm_fn = [](const Vec& x) { return Vec{x[0] * x[1] * x[2]}; };
  Vec base = {ctx->one(), ctx->one(), ctx->one()};
  return cns_make(ctx, base, polymap_from_fn(ctx, 3, 3, 2, sharp_fn),
                  polymap_from_fn(ctx, 3, 1, 3, norm_fn));
}

TEST_CASE("derived forms of mat3") {
  Ctx z = RingCtx::integers();
  CubicJordan j = mat3_plus(z);
  // T(x,y) is the matrix trace of xy
  Ctx g = RingCtx::poly_n(z, "x", 18);
  Vec x = vec_generic(g, 9, 0), y = vec_generic(g, 9, 9);
  Scalar tr_xy = g->zero();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) tr_xy += x[3 * r + c] * y[3 * c + r];
  CHECK(j.t_form(x, y) == tr_xy);
  CHECK(j.tr(x) == x[0] + x[4] + x[8]);

  // U_x y = xyx
  Vec xyx(9, g->zero());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          xyx[3 * r + c] += x[3 * r + a] * y[3 * a + b] * x[3 * b + c];
  CHECK(j.u_op(x, y) == xyx);
}

TEST_CASE("directional derivatives") {
  Ctx z = RingCtx::integers();
  CubicJordan j = mat3_plus(z);
  Ctx g = RingCtx::poly_n(z, "x", 18);
  Vec x = vec_generic(g, 9, 0), v = vec_generic(g, 9, 9);
  CHECK(dir_derivative(j.norm, 0, v, x)[0] == j.norm_of(x));
  CHECK(dir_derivative(j.norm, 3, v, x)[0] == j.norm_of(v));
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(dir_derivative(j.norm, n, v, x) ==
          dir_derivative(j.norm, 3 - n, x, v));
}

TEST_CASE("element operations") {
  Ctx q = RingCtx::rationals();
  CubicJordan j = mat3_plus(q);
  Vec one = j.base_point;
  CHECK(j.power(one, 5) == one);
  CHECK(j.inverse(one) == one);

  Vec x = vec_zero(q, 9);
  x[0] = q->from_int(2);
  x[4] = q->from_int(3);
  x[8] = q->from_int(-1);
  x[1] = q->from_int(7);
  CHECK(j.norm_of(x) == q->from_int(-6));
  Vec xi = j.inverse(x);
  CHECK(j.u_op(x, j.power(xi, 2)) == one);
  CHECK(j.min_poly_eval(x, q->from_int(3)).is_zero());  // 3 is an eigenvalue
  CHECK_THROWS_AS(j.inverse(vec_basis(q, 9, 1)), NotInvertible);
}

TEST_CASE("verification passes on small structures") {
  Ctx z = RingCtx::integers();
  for (const CubicJordan& j : {diag3(z), mat3_plus(z), diag3(RingCtx::gf(2)),
                               mat3_plus(RingCtx::gf(3))}) {
    Report r = cns_verify_all(j);
    INFO(r.to_text());
    CHECK(r.all_pass());
  }
}

TEST_CASE("negative control: corrupted adjoint fails") {
  Ctx z = RingCtx::integers();
  CubicJordan j = mat3_plus(z);
  PolyMap bad = j.adjoint;
  bad.comp[0][0].second = -bad.comp[0][0].second;
  CubicJordan jb = cns_make(z, j.base_point, bad, j.norm);
  Report r = cns_verify(jb, VerifyLevel::axioms);
  CHECK(!r.all_pass());
}

TEST_CASE("transport certificates") {
  Ctx z = RingCtx::integers();
  CompAlg re2 = comp_construct(CompKind::split_etale, z);
  HerLayout L = her_layout(re2);
  CubicJordan src = her3(L);
  CubicJordan dst = mat3_plus(z);
  Report r = cns_transport(src, dst, mat39_iso(L));
  INFO(r.to_text());
  CHECK(r.all_pass());

  // wrong map: not unital
  Mat bad = mat39_iso(L);
  bad.at(0, 0) = z->from_int(2);
  CHECK(!cns_transport(src, dst, bad).all_pass());
}

TEST_CASE("json codec roundtrip") {
  Ctx z = RingCtx::integers();
  CubicJordan j = mat3_plus(z);
  CubicJordan back = cns_from_json(z, cns_to_json(j));
  CHECK(back.adjoint == j.adjoint);
  CHECK(back.norm == j.norm);
  CHECK(back.base_point == j.base_point);
  CHECK(back.tmat == j.tmat);
}

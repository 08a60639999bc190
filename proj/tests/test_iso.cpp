#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "albertine/iso.hpp"

using namespace alb;

static Vec sample_u(const CubicJordan& j) {
  // a fixed invertible element of mat3_plus
  Vec u = vec_zero(j.ctx, 9);
  u[0] = j.ctx->from_int(2);
  u[4] = j.ctx->from_int(1);
  u[8] = j.ctx->from_int(-1);
  u[1] = j.ctx->from_int(3);
  u[5] = j.ctx->from_int(1);
  return u;
}

TEST_CASE("isotope at the identity is the original structure") {
  Ctx q = RingCtx::rationals();
  CubicJordan j = mat3_plus(q);
  CubicJordan i = isotope(j, j.base_point);
  CHECK(i.base_point == j.base_point);
  CHECK(i.adjoint == j.adjoint);
  CHECK(i.norm == j.norm);
}

TEST_CASE("isotope is a cubic Jordan structure with U-operator U_x U_u") {
  Ctx q = RingCtx::rationals();
  CubicJordan j = mat3_plus(q);
  Vec u = sample_u(j);
  CubicJordan i = isotope(j, u);
  CHECK(cns_verify_all(i).all_pass());

  Ctx g = RingCtx::poly_n(q, "x", 18);
  Vec x = vec_generic(g, 9, 0), y = vec_generic(g, 9, 9);
  CHECK(i.u_op(x, y) == j.u_op(x, j.u_op(vec_embed(g, u), y)));

  // trace forms of the isotope
  Vec ue = vec_embed(g, u);
  CHECK(i.t_form(x, y) == j.t_form(j.u_op(ue, x), y));
  CHECK(i.tr(x) == j.t_form(ue, x));
  CHECK(i.s_form(x) == j.t_form(j.sharp(ue), j.sharp(x)));

  CHECK_THROWS_AS(isotope(j, vec_basis(q, 9, 1)), NotInvertible);
}

TEST_CASE("iterated isotopes collapse through U") {
  Ctx q = RingCtx::rationals();
  CubicJordan j = mat3_plus(q);
  Vec u = sample_u(j);
  Vec v = vec_zero(q, 9);
  v[0] = q->from_int(1);
  v[4] = q->from_int(-2);
  v[8] = q->from_int(1);
  v[3] = q->from_int(5);
  CubicJordan lhs = isotope(isotope(j, u), v);
  CubicJordan rhs = isotope(j, j.u_op(u, v));
  CHECK(lhs.base_point == rhs.base_point);
  CHECK(lhs.adjoint == rhs.adjoint);
  CHECK(lhs.norm == rhs.norm);
}

TEST_CASE("diagonal isotope absorbs Gamma") {
  Ctx q = RingCtx::rationals();
  CompAlg C = comp_construct(CompKind::zorn, q);
  std::array<Scalar, 3> gam = {q->from_int(2), q->from_int(-3),
                               q->from_int(5)};
  HerLayout Lg = her_layout(C, gam);
  HerLayout L1 = her_layout(C);
  Vec u = vec_zero(q, 27);
  for (int i = 1; i <= 3; ++i) u[Lg.eps(i)] = gam[i - 1];
  CubicJordan dom = isotope(her3(Lg), u);
  CubicJordan cod = her3(L1);
  // alpha_i -> gamma_i alpha_i, c_i -> gamma_{i+1} gamma_{i+2} c_i
  Mat phi(q, 27, 27);
  for (int i = 1; i <= 3; ++i) {
    phi.at(Lg.eps(i), Lg.eps(i)) = gam[i - 1];
    Scalar s = gam[i % 3] * gam[(i + 1) % 3];
    for (std::size_t k = 0; k < C.rank; ++k)
      phi.at(Lg.delta(i, k), Lg.delta(i, k)) = s;
  }
  MapClass mc = classify_map(phi, dom, cod);
  CHECK(mc.kind == MapKind::Isomorphism);
}

TEST_CASE("map classification") {
  Ctx q = RingCtx::rationals();
  CubicJordan j = mat3_plus(q);
  CHECK(classify_map(Mat::identity(q, 9), j, j).kind == MapKind::Isomorphism);

  HerLayout L9 = her_layout(comp_construct(CompKind::split_etale, q));
  CHECK(classify_map(mat39_iso(L9), her3(L9), j).kind ==
        MapKind::Isomorphism);

  HerLayout L = her_layout(comp_construct(CompKind::zorn, q));
  CubicJordan alb = her3(L);
  Isometry sc = isom_scale(L, q->from_int(5));
  MapClass mc = classify_map(sc.m, alb, alb);
  CHECK(mc.kind == MapKind::Isotopy);
  CHECK(mc.multiplier == q->from_int(5));

  Mat bad = Mat::identity(q, 9);
  bad.at(0, 0) = q->from_int(2);
  CHECK(classify_map(bad, j, j).kind == MapKind::Neither);
  bad.at(0, 0) = q->zero();
  CHECK(classify_map(bad, j, j).kind == MapKind::Neither);
}

TEST_CASE("dagger involution") {
  Ctx q = RingCtx::rationals();
  HerLayout L = her_layout(comp_construct(CompKind::mat2, q));
  CubicJordan j = her3(L);

  // automorphisms are their own dagger
  Isometry p = isom_perm(L, {2, 3, 1});
  CHECK(dagger(p.m, j) == p.m);

  Vec qe = vec_zero(q, 4);
  qe[0] = q->from_int(1);
  qe[2] = q->from_int(-2);
  Isometry t = isom_tau(L, 1, 3, qe);
  Mat td = dagger(t.m, j);
  CHECK(dagger(td, j) == t.m);
  CHECK(!(td == t.m));  // tau is not an automorphism

  Ctx g = RingCtx::poly_n(q, "x", 30);
  Vec x = vec_generic(g, 15, 0), y = vec_generic(g, 15, 15);
  CHECK(j.t_form(mat_embed(g, t.m).apply(x), mat_embed(g, td).apply(y)) ==
        j.t_form(x, y));

  // N phi = alpha N gives N phi_dagger = alpha^{-1} N
  Isometry sc = isom_scale(L, q->from_int(5));
  Mat sd = dagger(sc.m, j);
  CHECK(j.norm_of(mat_embed(g, sd).apply(x)) * q->from_int(5) ==
        j.norm_of(x));
}

TEST_CASE("roundness witnesses") {
  Ctx q = RingCtx::rationals();
  HerLayout L = her_layout(comp_construct(CompKind::zorn, q));
  CubicJordan j = her3(L);
  CHECK(round_witness(j, j.base_point).m == Mat::identity(q, 27));

  // x = alpha eps1 + eps2 + eps3 has norm alpha
  Vec x = vec_embed(q, j.base_point);
  x[L.eps(1)] = q->from_int(7);
  Isometry w = round_witness(j, x);
  CHECK(w.multiplier == q->from_int(7));
  MapClass mc = classify_map(w.m, j, j);
  CHECK(mc.kind == MapKind::Isotopy);
  CHECK(mc.multiplier == q->from_int(7));
}

TEST_CASE("diagonalization over fields") {
  Ctx q = RingCtx::rationals();
  CompAlg C = comp_construct(CompKind::zorn, q);
  HerLayout L = her_layout(C);
  CubicJordan j = her3(L);

  // already diagonal: identity transform
  Vec d0 = vec_zero(q, 27);
  d0[0] = q->from_int(3);
  d0[1] = q->from_int(-1);
  d0[2] = q->from_int(2);
  auto [g0, r0] = diagonalize(L, j, d0);
  CHECK(g0.m == Mat::identity(q, 27));
  CHECK(r0 == d0);

  Ctx f7 = RingCtx::gf(7);
  CompAlg C7 = comp_construct(CompKind::zorn, f7);
  HerLayout L7 = her_layout(C7);
  CubicJordan j7 = her3(L7);
  std::mt19937 rng(20240815);
  int done = 0;
  while (done < 12) {
    Vec u(27);
    for (std::size_t i = 0; i < 27; ++i)
      u[i] = f7->from_int((long long)(rng() % 7));
    if (j7.norm_of(u).is_zero()) continue;
    ++done;
    auto [g, d] = diagonalize(L7, j7, u);
    CHECK(g.m.apply(u) == d);
    for (int i = 1; i <= 3; ++i) CHECK(vec_is_zero(L7.cblock(d, i)));
    CHECK(j7.norm_of(d) == j7.norm_of(u));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albertine/fts.hpp"
#include "albertine/her3.hpp"

using namespace alb;

namespace {

FTSystem zorn_fts() {
  Ctx z = RingCtx::integers();
  return fts_of(her3(her_layout(comp_construct(CompKind::zorn, z))));
}

FTVec basis_elem(const FTSystem& F, std::size_t a) {
  Vec v = vec_basis(F.j.ctx, F.dim(), a);
  return ft_unflat(F, v);
}

}  // namespace

TEST_CASE("bilinear form is alternating and the quartic normalizes") {
  FTSystem F = zorn_fts();
  Ctx g = RingCtx::poly_n(F.j.ctx, "x", 2 * F.dim());
  FTVec X = ft_generic(F, g, 0);
  FTVec Y = ft_generic(F, g, F.dim());
  CHECK(F.b(X, X).is_zero());
  CHECK(F.b(X, Y) == -F.b(Y, X));

  FTVec E;
  E.alpha = F.j.ctx->one();
  E.alpha_prime = F.j.ctx->one();
  E.x = vec_zero(F.j.ctx, 27);
  E.xp = vec_zero(F.j.ctx, 27);
  CHECK(F.q(E).is_one());
}

TEST_CASE("closed-form polarization matches the coefficient extraction") {
  FTSystem F = zorn_fts();
  Ctx g = RingCtx::poly_n(F.j.ctx, "x", 4 * F.dim());
  FTVec X[4];
  for (int i = 0; i < 4; ++i) X[i] = ft_generic(F, g, i * F.dim());
  Scalar L = F.quadlin(X[0], X[1], X[2], X[3]);
  CHECK(L == ft_quadlin_oracle(F, X[0], X[1], X[2], X[3]));
  // symmetry spot check
  CHECK(L == F.quadlin(X[2], X[0], X[3], X[1]));
}

TEST_CASE("the quartic is recovered from the 4-linear form") {
  FTSystem F = zorn_fts();
  Ctx g = RingCtx::poly_n(F.j.ctx, "x", F.dim());
  FTVec X = ft_generic(F, g, 0);
  Scalar twelve = F.j.ctx->from_int(12);
  CHECK(F.theta(X, X, X, X) == twelve * F.q(X));
}

TEST_CASE("psi: even-permutation invariance and swap defect") {
  FTSystem F = zorn_fts();
  Ctx g = RingCtx::poly_n(F.j.ctx, "x", 4 * F.dim());
  FTVec X[4];
  for (int i = 0; i < 4; ++i) X[i] = ft_generic(F, g, i * F.dim());
  Scalar p = F.psi(X[0], X[1], X[2], X[3]);
  CHECK(p == F.psi(X[1], X[2], X[0], X[3]));          // 3-cycle
  CHECK(p == F.psi(X[2], X[3], X[0], X[1]));          // double transposition
  CHECK(F.psi(X[1], X[0], X[2], X[3]) - p ==
        -F.phi_sum(X[0], X[1], X[2], X[3]));
}

TEST_CASE("integrality sweep over basis 4-tuples") {
  FTSystem F = zorn_fts();
  Report r = ft_divisibility(F);
  CHECK(r.all_pass());

  Ctx z = RingCtx::integers();
  FTSystem Fc =
      fts_of(her3(her_layout(comp_construct(CompKind::coxeter_order, z))));
  Report rc = ft_divisibility(Fc);
  CHECK(rc.all_pass());
}

TEST_CASE("structure-preserving generators") {
  FTSystem F = zorn_fts();
  std::size_t n = F.dim();

  // generic parameters live in their own extension; the generic point X, Y
  // on top of that.  The layout is built over the parameter ring so that
  // tau can act on coordinates involving the parameters.
  Ctx py = RingCtx::poly_n(F.j.ctx, "p", 8);
  HerLayout L = her_layout(comp_construct(CompKind::zorn, py));
  Ctx g = RingCtx::poly_n(py, "x", 2 * n);
  FTVec X = ft_generic(F, g, 0);
  FTVec Y = ft_generic(F, g, n);

  auto preserves = [&](const Mat& G) {
    FTVec GX = ft_unflat(F, mat_embed(g, G).apply(ft_flat(X)));
    FTVec GY = ft_unflat(F, mat_embed(g, G).apply(ft_flat(Y)));
    CHECK(F.b(GX, GY) == F.b(X, Y));
    CHECK(F.q(GX) == F.q(X));
    return GX;
  };

  SUBCASE("e6 block embedding of a norm isometry") {
    Vec qv(8);
    for (int k = 0; k < 8; ++k) qv[k] = py->indet(k);
    Isometry tau = isom_tau(L, 1, 2, qv);
    Mat G = ft_e6_embed(F, tau);
    FTVec GX = preserves(G);
    // redundancy: psi itself is preserved
    FTVec GY = ft_unflat(F, mat_embed(g, G).apply(ft_flat(Y)));
    CHECK(F.psi(GX, GY, GX, GY) == F.psi(X, Y, X, Y));
    HerLayout Lz = her_layout(comp_construct(CompKind::zorn, F.j.ctx));
    CHECK_THROWS_AS(ft_e6_embed(F, isom_scale(Lz, F.j.ctx->from_int(5))),
                    AlbError);
  }

  SUBCASE("torus") {
    Ctx lb = RingCtx::poly(F.j.ctx, {"b"}, {1});
    Ctx gb = RingCtx::poly_n(lb, "x", 2 * n);
    FTVec Xb = ft_generic(F, gb, 0);
    FTVec Yb = ft_generic(F, gb, n);
    Mat G = ft_torus(F, lb->indet(0));
    FTVec GX = ft_unflat(F, mat_embed(gb, G).apply(ft_flat(Xb)));
    FTVec GY = ft_unflat(F, mat_embed(gb, G).apply(ft_flat(Yb)));
    CHECK(F.b(GX, GY) == F.b(Xb, Yb));
    CHECK(F.q(GX) == F.q(Xb));
  }

  SUBCASE("translations") {
    Ctx pj = RingCtx::poly_n(F.j.ctx, "p", 27);
    Ctx gj = RingCtx::poly_n(pj, "x", 2 * n);
    FTVec Xj = ft_generic(F, gj, 0);
    FTVec Yj = ft_generic(F, gj, n);
    Vec y = vec_generic(pj, 27, 0);
    for (Mat G : {ft_trans_up(F, y), ft_trans_down(F, y)}) {
      FTVec GX = ft_unflat(F, mat_embed(gj, G).apply(ft_flat(Xj)));
      FTVec GY = ft_unflat(F, mat_embed(gj, G).apply(ft_flat(Yj)));
      CHECK(F.b(GX, GY) == F.b(Xj, Yj));
      CHECK(F.q(GX) == F.q(Xj));
    }
    CHECK(ft_trans_up(F, vec_zero(F.j.ctx, 27)) ==
          Mat::identity(F.j.ctx, n));
  }

  SUBCASE("similarity scales b and q") {
    Ctx lm = RingCtx::poly(F.j.ctx, {"m"}, {1});
    Ctx gm = RingCtx::poly_n(lm, "x", 2 * n);
    FTVec Xm = ft_generic(F, gm, 0);
    FTVec Ym = ft_generic(F, gm, n);
    Scalar mu = lm->indet(0);
    Mat G = ft_similarity(F, mu);
    FTVec GX = ft_unflat(F, mat_embed(gm, G).apply(ft_flat(Xm)));
    FTVec GY = ft_unflat(F, mat_embed(gm, G).apply(ft_flat(Ym)));
    CHECK(F.b(GX, GY) == mu * F.b(Xm, Ym));
    CHECK(F.q(GX) == mu * mu * F.q(Xm));
  }
}

TEST_CASE("non-Freudenthal trace forms are rejected") {
  // the real octonion order has bilinear Gram 2I, so T is not unimodular
  Ctx z = RingCtx::integers();
  HerLayout L = her_layout(comp_construct(CompKind::real_octonions, z));
  CHECK_THROWS_AS(fts_of(her3(L)), AlbError);
}

TEST_CASE("element codec round trip") {
  FTSystem F = zorn_fts();
  FTVec X = basis_elem(F, 0);
  X.alpha = F.j.ctx->from_int(-7);
  X.x[3] = F.j.ctx->from_int(11);
  X.xp[20] = F.j.ctx->from_int(-2);
  X.alpha_prime = F.j.ctx->from_int(9);
  FTVec Y = ft_from_json(F, ft_to_json(X));
  CHECK(ft_flat(Y) == ft_flat(X));
}

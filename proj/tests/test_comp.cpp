#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albertine/comp.hpp"

using namespace alb;

TEST_CASE("verification passes for every construction") {
  Ctx z = RingCtx::integers();
  Ctx q = RingCtx::rationals();
  for (auto [kind, ctx] : std::initializer_list<std::pair<CompKind, Ctx>>{
           {CompKind::rank1, q},
           {CompKind::split_etale, z},
           {CompKind::mat2, z},
           {CompKind::zorn, z},
           {CompKind::real_octonions, q},
           {CompKind::coxeter_order, z}}) {
    CompAlg c = comp_construct(kind, ctx);
    Report r = comp_verify(c);
    INFO(r.to_text());
    CHECK(r.all_pass());
  }
  // the orthonormal table over Z is an order, not regular: gram = 2I
  Report rz = comp_verify(comp_construct(CompKind::real_octonions, z));
  for (const auto& ck : rz.checks)
    CHECK(ck.status == (ck.name == "norm.regular" ? "fail" : "pass"));

  CHECK_THROWS_AS(comp_construct(CompKind::rank1, z), AlbError);
  CHECK_THROWS_AS(comp_construct(CompKind::coxeter_order, q), AlbError);
}

TEST_CASE("octave table matches the fano orientation") {
  Ctx z = RingCtx::integers();
  CompAlg o = comp_construct(CompKind::real_octonions, z);
  auto e = [&](int i) { return vec_basis(z, 8, i); };
  for (int r = 1; r <= 7; ++r) {
    CHECK(o.times(e(r), e(r)) == vec_neg(e(0)));
    int b = r % 7 + 1, c = (r + 2) % 7 + 1;
    CHECK(o.times(e(r), e(b)) == e(c));
    CHECK(o.times(e(b), e(r)) == vec_neg(e(c)));
    CHECK(o.times(e(b), e(c)) == e(r));
    CHECK(o.times(e(c), e(r)) == e(b));
  }
  CHECK(o.times(e(1), e(2)) == e(4));
  CHECK(o.norm(e(5)) == z->one());
  CHECK(o.conj(e(3)) == vec_neg(e(3)));
}

TEST_CASE("mat2 norm is the determinant") {
  Ctx z = RingCtx::integers();
  CompAlg m = comp_construct(CompKind::mat2, z);
  Ctx p = RingCtx::poly_n(z, "a", 4);
  Vec x = vec_generic(p, 4, 0);
  CHECK(m.norm(x) == x[0] * x[3] - x[1] * x[2]);
  CHECK(m.trace(x) == x[0] + x[3]);
}

TEST_CASE("coxeter order certificates") {
  Ctx z = RingCtx::integers();
  CompAlg cox = comp_construct(CompKind::coxeter_order, z);

  // doubled basis spans 2*order; covolume 16 in the orthonormal frame
  Int d = det(coxeter_frame().doubled_basis);
  CHECK((d == 16 || d == -16));
  // the bilinear gram determinant is a unit, so the order is self-dual
  Int gd = det(mat_to_intmatrix(cox.gram()));
  CHECK((gd == 1 || gd == -1));

  // h1 = (1+e1+e2+e4)/2 lies in the order and satisfies h^2 - h + 1 = 0
  bool ok = false;
  std::vector<Int> h1c =
      coxeter_frame().to_order({1, 1, 1, 0, 1, 0, 0, 0}, &ok);
  REQUIRE(ok);
  Vec h1(8);
  for (int i = 0; i < 8; ++i) h1[i] = z->from_int(h1c[i]);
  CHECK(cox.norm(h1) == z->one());
  CHECK(cox.trace(h1) == z->one());
  Vec lhs = vec_add(cox.times(h1, h1),
                    vec_sub(vec_embed(z, cox.unit), h1));
  CHECK(vec_is_zero(lhs));

  // (1+e1)/2 has norm 1/2 and is not in the order
  coxeter_frame().to_order({1, 1, 0, 0, 0, 0, 0, 0}, &ok);
  CHECK(!ok);

  // beta = (-1+e1+...+e7)/2: trace -1, norm 2, beta^2 + beta + 2 = 0
  Vec beta = coxeter_beta(cox);
  CHECK(cox.trace(beta) == z->from_int(-1));
  CHECK(cox.norm(beta) == z->from_int(2));
  Vec b2 = cox.times(beta, beta);
  Vec rel = vec_add(b2, vec_add(beta, vec_scale(z->from_int(2), cox.unit)));
  CHECK(vec_is_zero(rel));
  Vec b3 = cox.times(b2, beta);
  CHECK(cox.trace(b3) == z->from_int(5));
}

TEST_CASE("isotopes stay composition algebras") {
  Ctx q = RingCtx::rationals();
  CompAlg zo = comp_construct(CompKind::zorn, q);
  Vec p = vec_zero(q, 8), qq = vec_zero(q, 8);
  // invertible but non-scalar parameters
  p[0] = q->from_int(2);
  p[1] = q->one();
  p[7] = q->one();
  qq[0] = q->one();
  qq[4] = q->from_int(3);
  qq[7] = q->from_int(-1);
  REQUIRE(zo.norm(p).is_unit());
  REQUIRE(zo.norm(qq).is_unit());
  CompAlg iso = comp_isotope(zo, p, qq);
  Report r = comp_verify(iso);
  INFO(r.to_text());
  CHECK(r.all_pass());
  // the twisted product really is (x p)(q y)
  Vec x = vec_basis(q, 8, 2), y = vec_basis(q, 8, 6);
  CHECK(iso.times(x, y) == zo.times(zo.times(x, p), zo.times(qq, y)));
  CHECK(iso.norm(x) == zo.norm(zo.times(p, qq)) * zo.norm(x));
}

TEST_CASE("negative control: a broken table fails verification") {
  Ctx z = RingCtx::integers();
  CompAlg o = comp_construct(CompKind::real_octonions, z);
  o.mul[8 * 1 + 2].clear();
  o.mul[8 * 1 + 2].emplace_back(5, z->one());  // e1 e2 = e5 is wrong
  Report r = comp_verify(o);
  CHECK(!r.all_pass());
}

TEST_CASE("json codec roundtrip") {
  Ctx z = RingCtx::integers();
  CompAlg c = comp_construct(CompKind::coxeter_order, z);
  CompAlg back = comp_from_json(z, comp_to_json(c));
  Ctx p = RingCtx::poly_n(z, "x", 16);
  Vec x = vec_generic(p, 8, 0), y = vec_generic(p, 8, 8);
  CHECK(back.times(x, y) == c.times(x, y));
  CHECK(back.norm(x) == c.norm(x));
  CHECK(back.unit == c.unit);
}

#include "albertine/iso.hpp"

namespace alb {

Mat u_matrix(const CubicJordan& j, const Vec& x) {
  Mat m(j.ctx, j.dim, j.dim);
  for (std::size_t k = 0; k < j.dim; ++k) {
    Vec col = j.u_op(x, vec_basis(j.ctx, j.dim, k));
    for (std::size_t r = 0; r < j.dim; ++r) m.at(r, k) = col[r];
  }
  return m;
}

CubicJordan isotope(const CubicJordan& j, const Vec& u) {
  Scalar nu = j.norm_of(u);
  if (!nu.is_unit()) throw NotInvertible("isotope: N(u) is not a unit");
  Vec ui = j.inverse(u);
  PolyMap adj =
      polymap_scale(nu, polymap_postcompose(u_matrix(j, ui), j.adjoint));
  PolyMap nrm = polymap_scale(nu, j.norm);
  return cns_make(j.ctx, ui, adj, nrm, j.labels);
}

MapClass classify_map(const Mat& phi, const CubicJordan& j,
                      const CubicJordan& jp) {
  if (phi.rows != jp.dim || phi.cols != j.dim)
    throw AlbError("classify_map: dimension mismatch");
  MapClass out;
  out.multiplier = j.ctx->zero();
  if (!mat_is_invertible(phi)) {
    out.detail = "not invertible";
    return out;
  }
  Ctx g = RingCtx::poly_n(j.ctx, "x", j.dim);
  Vec x = vec_generic(g, j.dim, 0);
  Scalar lhs = jp.norm_of(mat_embed(g, phi).apply(x));
  Scalar rhs = j.norm_of(x);
  Vec phi1 = phi.apply(vec_embed(j.ctx, j.base_point));
  if (lhs == rhs && phi1 == jp.base_point) {
    out.kind = MapKind::Isomorphism;
    out.multiplier = j.ctx->one();
    return out;
  }
  Scalar alpha = jp.norm_of(phi1);
  if (alpha.is_unit() && lhs == embed(g, alpha) * rhs) {
    Vec u = jp.inverse(phi1);
    if (cns_transport(j, isotope(jp, u), phi).all_pass()) {
      out.kind = MapKind::Isotopy;
      out.multiplier = alpha;
      out.u = u;
      return out;
    }
    out.detail = "similarity did not verify as an isomorphism onto the isotope";
    return out;
  }
  out.detail = "norm not preserved up to a unit";
  return out;
}

Mat dagger(const Mat& phi, const CubicJordan& j) {
  Vec phi1 = phi.apply(vec_embed(j.ctx, j.base_point));
  return u_matrix(j, j.inverse(phi1)) * phi;
}

Isometry round_witness(const CubicJordan& j, const Vec& x) {
  Scalar nx = j.norm_of(x);
  if (!nx.is_unit()) throw NotInvertible("round_witness: N(x) is not a unit");
  Mat m = u_matrix(j, j.inverse(x));
  for (Scalar& s : m.a) s = nx * s;
  return Isometry{m, nx, "round"};
}

std::pair<Isometry, Vec> diagonalize(const HerLayout& L, const CubicJordan& j,
                                     const Vec& u) {
  const CompAlg& C = L.comp;
  if (!C.ctx->is_field()) throw AlbError("diagonalize: needs a field");
  if (!L.diag_gamma_id()) throw AlbError("diagonalize: needs Gamma = Id");
  if (j.norm_of(u).is_zero())
    throw NotInvertible("diagonalize: N(u) = 0");

  Isometry g{Mat::identity(C.ctx, L.dim()), C.ctx->one(), "id"};
  Vec d = u;
  auto push = [&](const Isometry& t) {
    d = t.m.apply(d);
    g = isom_compose(t, g);
  };
  // some basis vector pairs non-degenerately with any nonzero c
  auto pairing_partner = [&](const Vec& c) {
    for (std::size_t k = 0; k < C.rank; ++k) {
      Vec e = vec_basis(C.ctx, C.rank, k);
      if (!C.bil(e, c).is_zero()) return e;
    }
    throw AlbError("diagonalize: bilinear norm is degenerate");
  };

  // put a unit in the first diagonal slot
  if (L.alpha(d, 1).is_zero()) {
    if (!L.alpha(d, 2).is_zero())
      push(isom_perm(L, {2, 1, 3}));
    else if (!L.alpha(d, 3).is_zero())
      push(isom_perm(L, {3, 2, 1}));
    else
      // all diagonal slots vanish, so N(u) = Tr(c1 c2 c3) forces c3 != 0
      push(isom_tau(L, 1, 2, pairing_partner(L.cblock(d, 3))));
  }
  // clear the blocks adjacent to slot 1
  Scalar a1i = L.alpha(d, 1).inv();
  if (!vec_is_zero(L.cblock(d, 3)))
    push(isom_tau(L, 2, 1, vec_scale(-a1i, C.conj(L.cblock(d, 3)))));
  if (!vec_is_zero(L.cblock(d, 2)))
    push(isom_tau(L, 3, 1, vec_scale(-a1i, L.cblock(d, 2))));
  // put a unit in the second slot
  if (L.alpha(d, 2).is_zero()) {
    if (!L.alpha(d, 3).is_zero())
      push(isom_perm(L, {1, 3, 2}));
    else
      // here N(d) = -alpha1 n(c1), so c1 != 0
      push(isom_tau(L, 2, 3, pairing_partner(L.cblock(d, 1))));
  }
  if (!vec_is_zero(L.cblock(d, 1)))
    push(isom_tau(L, 3, 2,
                  vec_scale(-L.alpha(d, 2).inv(), C.conj(L.cblock(d, 1)))));

  for (int i = 1; i <= 3; ++i)
    if (!vec_is_zero(L.cblock(d, i)))
      throw AlbError("diagonalize: residual off-diagonal block");
  g.provenance = "diagonalize";
  return {g, d};
}

}  // namespace alb

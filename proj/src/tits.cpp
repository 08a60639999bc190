#include "albertine/tits.hpp"

namespace alb {

Vec CubicAssoc::times(const Vec& x, const Vec& y) const {
  const Ctx& g = x.empty() ? ctx : x[0].ctx();
  Vec out = vec_zero(g, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar p = x[i] * y[j];
      for (const auto& [k, c] : mul[i * dim + j]) out[k] += c * p;
    }
  }
  return out;
}

Scalar CubicAssoc::norm_of(const Vec& x) const { return norm.eval_scalar(x); }

Scalar CubicAssoc::trace(const Vec& x) const {
  Scalar s = x[0].ctx()->zero();
  for (std::size_t i = 0; i < dim; ++i) s += trvec[i] * x[i];
  return s;
}

Scalar CubicAssoc::t_form(const Vec& x, const Vec& y) const {
  Scalar s = x[0].ctx()->zero();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s += tmat.at(i, j) * x[i] * y[j];
  return s;
}

Scalar CubicAssoc::s_of(const Vec& x) const { return smap.eval_scalar(x); }

Vec CubicAssoc::sharp(const Vec& x) const {
  const Ctx& g = x[0].ctx();
  Vec out = vec_sub(times(x, x), vec_scale(trace(x), x));
  Scalar s = s_of(x);
  for (std::size_t i = 0; i < dim; ++i) out[i] += s * embed(g, unit[i]);
  return out;
}

CubicAssoc assoc_construct(AssocKind kind, const Ctx& ctx) {
  CubicAssoc a;
  a.ctx = ctx;
  a.kind = kind;
  auto zero_table = [&](std::size_t d) {
    a.dim = d;
    a.mul.assign(d * d, {});
    a.unit = vec_zero(ctx, d);
  };
  switch (kind) {
    case AssocKind::split_etale3: {
      zero_table(3);
      for (std::size_t i = 0; i < 3; ++i) {
        a.mul[i * 3 + i] = {{i, ctx->one()}};
        a.unit[i] = ctx->one();
      }
      a.norm = polymap_from_fn(ctx, 3, 1, 3, [](const Vec& x) {
        return Vec{x[0] * x[1] * x[2]};
      });
      break;
    }
    case AssocKind::gf_cubic: {
      if (!(ctx->kind == RingKind::FiniteField && ctx->p == 2 &&
            ctx->deg == 1))
        throw AlbError("gf_cubic: only GF(8) over GF(2) is provided");
      zero_table(3);
      a.unit[0] = ctx->one();
      // basis 1, w, w^2 with w^3 = w + 1
      auto set = [&](std::size_t i, std::size_t j, std::vector<int> coords) {
        for (std::size_t k = 0; k < 3; ++k)
          if (coords[k]) a.mul[i * 3 + j].push_back({k, ctx->one()});
      };
      set(0, 0, {1, 0, 0});
      set(0, 1, {0, 1, 0});
      set(1, 0, {0, 1, 0});
      set(0, 2, {0, 0, 1});
      set(2, 0, {0, 0, 1});
      set(1, 1, {0, 0, 1});
      set(1, 2, {1, 1, 0});  // w^3 = 1 + w
      set(2, 1, {1, 1, 0});
      set(2, 2, {0, 1, 1});  // w^4 = w + w^2
      // regular-representation determinant
      CubicAssoc* ap = &a;
      a.norm = polymap_from_fn(ctx, 3, 1, 3, [ap](const Vec& x) {
        const Ctx& g = x[0].ctx();
        Mat l(g, 3, 3);
        for (std::size_t j = 0; j < 3; ++j) {
          Vec col = ap->times(x, vec_embed(g, vec_basis(ap->ctx, 3, j)));
          for (std::size_t i = 0; i < 3; ++i) l.at(i, j) = col[i];
        }
        return Vec{l.at(0, 0) * (l.at(1, 1) * l.at(2, 2) - l.at(1, 2) * l.at(2, 1)) -
                   l.at(0, 1) * (l.at(1, 0) * l.at(2, 2) - l.at(1, 2) * l.at(2, 0)) +
                   l.at(0, 2) * (l.at(1, 0) * l.at(2, 1) - l.at(1, 1) * l.at(2, 0))};
      });
      break;
    }
    case AssocKind::mat3: {
      zero_table(9);
      for (std::size_t i = 0; i < 3; ++i) {
        a.unit[i * 3 + i] = ctx->one();
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k)
            a.mul[(i * 3 + j) * 9 + (j * 3 + k)].push_back(
                {i * 3 + k, ctx->one()});
      }
      a.norm = polymap_from_fn(ctx, 9, 1, 3, [](const Vec& x) {
        return Vec{x[0] * (x[4] * x[8] - x[5] * x[7]) -
                   x[1] * (x[3] * x[8] - x[5] * x[6]) +
                   x[2] * (x[3] * x[7] - x[4] * x[6])};
      });
      break;
    }
  }

  // trace and bilinear trace from the norm at the unit
  a.trvec = vec_zero(ctx, a.dim);
  a.tmat = Mat(ctx, a.dim, a.dim);
  Ctx st = RingCtx::poly(ctx, {"@s", "@t"});
  for (std::size_t i = 0; i < a.dim; ++i)
    a.trvec[i] =
        dir_derivative(a.norm, 1, vec_basis(ctx, a.dim, i), a.unit)[0];
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      Vec arg = vec_embed(st, a.unit);
      arg[i] += st->indet(0);
      arg[j] += st->indet(1);
      Scalar mixed =
          coeff_of(a.norm.eval_scalar(arg),
                   expv_add(expv_unit(2, 0), expv_unit(2, 1)));
      a.tmat.at(i, j) = a.tmat.at(j, i) = a.trvec[i] * a.trvec[j] - mixed;
    }

  CubicAssoc* ap = &a;
  a.smap = polymap_from_fn(ctx, a.dim, 1, 2, [ap](const Vec& x) {
    // S(x) = coefficient of t in N(x + t 1) = Tr(x#)
    return dir_derivative(ap->norm, 1, vec_embed(x[0].ctx(), ap->unit), x);
  });
  return a;
}

CubicJordan tits1(const CubicAssoc& a, const Scalar& mu) {
  if (!mu.is_unit()) throw AlbError("tits1: mu must be a unit");
  Scalar mui = mu.inv();
  std::size_t d = a.dim, n = 3 * d;
  auto slot = [&](const Vec& x, std::size_t s) {
    return Vec(x.begin() + s * d, x.begin() + (s + 1) * d);
  };
  auto join = [&](const Vec& y0, const Vec& y1, const Vec& y2) {
    Vec out;
    out.reserve(3 * d);
    for (const Vec* y : {&y0, &y1, &y2}) out.insert(out.end(), y->begin(), y->end());
    return out;
  };
  PolyMap adj = polymap_from_fn(a.ctx, n, n, 2, [&](const Vec& x) {
    Vec x0 = slot(x, 0), x1 = slot(x, 1), x2 = slot(x, 2);
    return join(vec_sub(a.sharp(x0), a.times(x1, x2)),
                vec_sub(vec_scale(mui, a.sharp(x2)), a.times(x0, x1)),
                vec_sub(vec_scale(mu, a.sharp(x1)), a.times(x2, x0)));
  });
  PolyMap nrm = polymap_from_fn(a.ctx, n, 1, 3, [&](const Vec& x) {
    Vec x0 = slot(x, 0), x1 = slot(x, 1), x2 = slot(x, 2);
    return Vec{a.norm_of(x0) + mu * a.norm_of(x1) + mui * a.norm_of(x2) -
               a.trace(a.times(a.times(x0, x1), x2))};
  });
  Vec base = vec_zero(a.ctx, n);
  for (std::size_t i = 0; i < d; ++i) base[i] = a.unit[i];
  return cns_make(a.ctx, base, adj, nrm);
}

Span subalgebra_generated(const CubicJordan& j, const std::vector<Vec>& gens) {
  if (!j.ctx->is_field()) throw AlbError("subalgebra_generated: needs a field");
  Span sp(j.ctx, j.dim);
  sp.add(j.base_point);
  for (const Vec& g : gens) sp.add(g);
  bool grew = true;
  while (grew && sp.dim() < j.dim) {
    grew = false;
    std::vector<Vec> bs = sp.basis();
    std::size_t m = bs.size();
    for (std::size_t i = 0; i < m && sp.dim() < j.dim; ++i)
      for (std::size_t k = 0; k < m && sp.dim() < j.dim; ++k)
        if (sp.add(j.u_op(bs[i], bs[k]))) grew = true;
    for (std::size_t i = 0; i < m && sp.dim() < j.dim; ++i)
      for (std::size_t k = i + 1; k < m && sp.dim() < j.dim; ++k)
        for (std::size_t l = 0; l < m && sp.dim() < j.dim; ++l)
          if (sp.add(j.brace(bs[i], bs[l], bs[k]))) grew = true;
  }
  return sp;
}

namespace {

// Mat2(GF(2))+ closure: contains I, closed under U_x y = xyx and braces.
Vec m2mul(const Vec& x, const Vec& y) {
  return Vec{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
             x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Span m2closure(const Ctx& f2, const std::vector<Vec>& gens) {
  Span sp(f2, 4);
  sp.add({f2->one(), f2->zero(), f2->zero(), f2->one()});
  for (const Vec& g : gens) sp.add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> bs = sp.basis();
    for (const Vec& x : bs)
      for (const Vec& y : bs) {
        if (sp.add(m2mul(m2mul(x, y), x))) grew = true;
        for (const Vec& z : bs)
          if (sp.add(vec_add(m2mul(m2mul(x, y), z),
                             m2mul(m2mul(z, y), x))))
            grew = true;
      }
  }
  return sp;
}

}  // namespace

PairCensus generator_census_mat2() {
  Ctx f2 = RingCtx::gf(2);
  auto elem = [&](unsigned m) {
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = f2->from_int((m >> i) & 1);
    return v;
  };
  PairCensus out;
  for (unsigned m1 = 0; m1 < 16; ++m1)
    for (unsigned m2 = m1; m2 < 16; ++m2)
      out.max_pair_dim =
          std::max(out.max_pair_dim, m2closure(f2, {elem(m1), elem(m2)}).dim());
  for (unsigned m1 = 0; m1 < 16 && out.witness.empty(); ++m1)
    for (unsigned m2 = m1 + 1; m2 < 16 && out.witness.empty(); ++m2)
      for (unsigned m3 = m2 + 1; m3 < 16; ++m3)
        if (m2closure(f2, {elem(m1), elem(m2), elem(m3)}).dim() == 4) {
          out.witness = {elem(m1), elem(m2), elem(m3)};
          break;
        }
  return out;
}

std::vector<Vec> mat3_generating_pair(const Ctx& ctx) {
  if (!ctx->is_field()) throw AlbError("mat3_generating_pair: needs a field");
  // companion matrix of an irreducible-over-GF(2) cubic; over larger fields
  // a diagonal with distinct entries also works as the first generator
  Vec a = vec_zero(ctx, 9);
  if (ctx->kind == RingKind::FiniteField && ctx->p == 2 && ctx->deg == 1) {
    // companion of t^3 + t + 1
    a[3] = ctx->one();
    a[7] = ctx->one();
    a[2] = ctx->one();
    a[5] = ctx->one();
  } else {
    a[0] = ctx->from_int(1);
    a[4] = ctx->from_int(2);
    a[8] = ctx->from_int(3);
  }
  CubicAssoc m3 = assoc_construct(AssocKind::mat3, ctx);
  PolyMap adj = polymap_from_fn(ctx, 9, 9, 2,
                                [&](const Vec& x) { return m3.sharp(x); });
  CubicJordan j = cns_make(ctx, m3.unit, adj, m3.norm);
  // search a partner among matrices with 0/1 entries
  for (unsigned m = 1; m < 512; ++m) {
    Vec b = vec_zero(ctx, 9);
    for (std::size_t i = 0; i < 9; ++i)
      if ((m >> i) & 1) b[i] = ctx->one();
    if (subalgebra_generated(j, {a, b}).dim() == 9) return {a, b};
  }
  throw AlbError("mat3_generating_pair: search failed");
}

}  // namespace alb

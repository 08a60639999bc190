#include "albertine/fts.hpp"

#include <nlohmann/json.hpp>

namespace alb {

namespace {

Scalar n3(const CubicJordan& j, const Vec& a, const Vec& b, const Vec& c) {
  // full polarization of the norm: T(a, b x c), symmetric in a, b, c
  return j.t_form(a, j.cross(b, c));
}

// the three ways to split slots {0,1,2,3} into two unordered pairs
constexpr int kPart[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

}  // namespace

Scalar FTSystem::b(const FTVec& X, const FTVec& Y) const {
  return X.alpha * Y.alpha_prime - X.alpha_prime * Y.alpha +
         j.t_form(X.x, Y.xp) - j.t_form(X.xp, Y.x);
}

Scalar FTSystem::q(const FTVec& X) const {
  Scalar four = j.ctx->from_int(4);
  Scalar inner = j.t_form(X.x, X.xp) - X.alpha * X.alpha_prime;
  return four * (X.alpha * j.norm_of(X.x) + X.alpha_prime * j.norm_of(X.xp) -
                 j.t_form(j.sharp(X.x), j.sharp(X.xp))) +
         inner * inner;
}

Scalar FTSystem::quadlin(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                         const FTVec& X4) const {
  const FTVec* X[4] = {&X1, &X2, &X3, &X4};
  Scalar four = j.ctx->from_int(4);
  Scalar two = j.ctx->from_int(2);
  Scalar acc = j.ctx->zero();
  for (const auto& p : kPart) {
    int i = p[0], jj = p[1], k = p[2], l = p[3];
    acc -= four * (j.t_form(j.cross(X[i]->x, X[jj]->x),
                            j.cross(X[k]->xp, X[l]->xp)) +
                   j.t_form(j.cross(X[k]->x, X[l]->x),
                            j.cross(X[i]->xp, X[jj]->xp)));
  }
  for (int i = 0; i < 4; ++i) {
    int o[3], n = 0;
    for (int s = 0; s < 4; ++s)
      if (s != i) o[n++] = s;
    acc += four * (X[i]->alpha * n3(j, X[o[0]]->x, X[o[1]]->x, X[o[2]]->x) +
                   X[i]->alpha_prime *
                       n3(j, X[o[0]]->xp, X[o[1]]->xp, X[o[2]]->xp));
  }
  auto d = [&](int i, int k) {
    return j.t_form(X[i]->x, X[k]->xp) + j.t_form(X[k]->x, X[i]->xp) -
           X[i]->alpha * X[k]->alpha_prime - X[k]->alpha * X[i]->alpha_prime;
  };
  acc += two * (d(0, 1) * d(2, 3) + d(0, 2) * d(1, 3) + d(0, 3) * d(1, 2));
  return acc;
}

Scalar FTSystem::theta(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                       const FTVec& X4) const {
  return quadlin(X1, X2, X3, X4).div_exact(2);
}

Scalar FTSystem::phi_sum(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                         const FTVec& X4) const {
  return b(X1, X2) * b(X3, X4) + b(X1, X3) * b(X4, X2) +
         b(X1, X4) * b(X2, X3);
}

Scalar FTSystem::psi(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                     const FTVec& X4) const {
  return (theta(X1, X2, X3, X4) + phi_sum(X1, X2, X3, X4)).div_exact(2);
}

FTSystem fts_of(const CubicJordan& j) {
  if (j.dim != 27) throw AlbError("triple system needs a 27-dim algebra");
  if (!mat_det(j.tmat).is_unit())
    throw AlbError("trace form determinant is not a unit");
  return FTSystem{j};
}

Vec ft_flat(const FTVec& X) {
  Vec v;
  v.reserve(2 * X.x.size() + 2);
  v.push_back(X.alpha);
  for (const Scalar& s : X.x) v.push_back(s);
  for (const Scalar& s : X.xp) v.push_back(s);
  v.push_back(X.alpha_prime);
  return v;
}

FTVec ft_unflat(const FTSystem& F, const Vec& v) {
  std::size_t d = F.j.dim;
  if (v.size() != 2 * d + 2) throw AlbError("bad flat length");
  FTVec X;
  X.alpha = v[0];
  X.x.assign(v.begin() + 1, v.begin() + 1 + d);
  X.xp.assign(v.begin() + 1 + d, v.begin() + 1 + 2 * d);
  X.alpha_prime = v[2 * d + 1];
  return X;
}

FTVec ft_generic(const FTSystem& F, const Ctx& g, std::size_t offset) {
  return ft_unflat(F, vec_generic(g, F.dim(), offset));
}

Scalar ft_quadlin_oracle(const FTSystem& F, const FTVec& X1, const FTVec& X2,
                         const FTVec& X3, const FTVec& X4) {
  const FTVec* X[4] = {&X1, &X2, &X3, &X4};
  const Ctx& c = X1.x[0].ctx();
  Ctx t = RingCtx::poly(c, {"@t0", "@t1", "@t2", "@t3"});
  FTVec S;
  S.alpha = t->zero();
  S.alpha_prime = t->zero();
  S.x = vec_zero(t, F.j.dim);
  S.xp = vec_zero(t, F.j.dim);
  for (int i = 0; i < 4; ++i) {
    Scalar ti = t->indet(i);
    S.alpha += ti * X[i]->alpha;
    S.alpha_prime += ti * X[i]->alpha_prime;
    S.x = vec_add(S.x, vec_scale(ti, vec_embed(t, X[i]->x)));
    S.xp = vec_add(S.xp, vec_scale(ti, vec_embed(t, X[i]->xp)));
  }
  Expv e = expv_add(expv_add(expv_unit(4, 0), expv_unit(4, 1)),
                    expv_add(expv_unit(4, 2), expv_unit(4, 3)));
  return coeff_of(embed(t, F.q(S)), e);
}

Report ft_divisibility(const FTSystem& F) {
  Report rep;
  if (F.j.ctx->kind != RingKind::Integers)
    throw AlbError("integrality sweep needs the integers");
  const CubicJordan& j = F.j;
  std::size_t d = j.dim;
  auto ll = [](const Scalar& s) { return s.as_int().convert_to<long long>(); };

  // trace matrix and sparse cross table on the basis of J
  std::vector<std::vector<long long>> TM(d, std::vector<long long>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) TM[i][k] = ll(j.tmat.at(i, k));
  std::size_t np = d * (d + 1) / 2;
  auto pid = [d](std::size_t i, std::size_t k) {
    if (i > k) std::swap(i, k);
    return i * d - i * (i + 1) / 2 + k;
  };
  std::vector<std::vector<std::pair<std::size_t, long long>>> cr(np);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i; k < d; ++k) {
      Vec v = j.cross(vec_basis(j.ctx, d, i), vec_basis(j.ctx, d, k));
      for (std::size_t m = 0; m < d; ++m)
        if (!v[m].is_zero()) cr[pid(i, k)].emplace_back(m, ll(v[m]));
    }
  // TC[p][q] = T(cross_p, cross'_q); N3[p][k] = T(e_k, cross_p)
  std::vector<std::vector<long long>> TC(np, std::vector<long long>(np));
  std::vector<std::vector<long long>> N3(np, std::vector<long long>(d));
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t k = 0; k < d; ++k) {
      long long s = 0;
      for (const auto& [m, v] : cr[p]) s += v * TM[k][m];
      N3[p][k] = s;
    }
    for (std::size_t q = 0; q < np; ++q) {
      long long s = 0;
      for (const auto& [m, v] : cr[p])
        for (const auto& [m2, w] : cr[q]) s += v * w * TM[m][m2];
      TC[p][q] = s;
    }
  }

  // basis of the 56-module: 0 = alpha, 1..d = x, d+1..2d = x', 2d+1 = alpha'
  std::size_t n = 2 * d + 2;
  enum { A, XB, XP, AP };
  auto type = [&](std::size_t a) {
    if (a == 0) return +A;
    if (a <= d) return +XB;
    if (a <= 2 * d) return +XP;
    return +AP;
  };
  auto idx = [&](std::size_t a) { return a <= d ? a - 1 : a - d - 1; };
  std::vector<std::vector<long long>> B(n, std::vector<long long>(n, 0));
  std::vector<std::vector<long long>> D(n, std::vector<long long>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      int ta = type(a), tc = type(c);
      if (ta == A && tc == AP) B[a][c] = 1, D[a][c] = -1;
      if (ta == AP && tc == A) B[a][c] = -1, D[a][c] = -1;
      if (ta == XB && tc == XP)
        B[a][c] = TM[idx(a)][idx(c)], D[a][c] = TM[idx(a)][idx(c)];
      if (ta == XP && tc == XB)
        B[a][c] = -TM[idx(c)][idx(a)], D[a][c] = TM[idx(c)][idx(a)];
    }

  long long tuples = 0, bad_theta = 0, bad_psi = 0;
  std::size_t s[4];
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0]; s[1] < n; ++s[1])
      for (s[2] = s[1]; s[2] < n; ++s[2])
        for (s[3] = s[2]; s[3] < n; ++s[3]) {
          ++tuples;
          long long L = 0;
          for (const auto& p : kPart) {
            std::size_t a = s[p[0]], b2 = s[p[1]], c = s[p[2]], e = s[p[3]];
            if (type(a) == XB && type(b2) == XB && type(c) == XP &&
                type(e) == XP)
              L -= 4 * TC[pid(idx(a), idx(b2))][pid(idx(c), idx(e))];
            if (type(a) == XP && type(b2) == XP && type(c) == XB &&
                type(e) == XB)
              L -= 4 * TC[pid(idx(c), idx(e))][pid(idx(a), idx(b2))];
          }
          for (int i = 0; i < 4; ++i) {
            std::size_t o[3];
            int m = 0;
            for (int w = 0; w < 4; ++w)
              if (w != i) o[m++] = s[w];
            int ti = type(s[i]);
            if (ti == A && type(o[0]) == XB && type(o[1]) == XB &&
                type(o[2]) == XB)
              L += 4 * N3[pid(idx(o[1]), idx(o[2]))][idx(o[0])];
            if (ti == AP && type(o[0]) == XP && type(o[1]) == XP &&
                type(o[2]) == XP)
              L += 4 * N3[pid(idx(o[1]), idx(o[2]))][idx(o[0])];
          }
          L += 2 * (D[s[0]][s[1]] * D[s[2]][s[3]] +
                    D[s[0]][s[2]] * D[s[1]][s[3]] +
                    D[s[0]][s[3]] * D[s[1]][s[2]]);
          if (L % 2 != 0) {
            ++bad_theta;
            continue;
          }
          long long th = L / 2;
          long long phi = B[s[0]][s[1]] * B[s[2]][s[3]] +
                          B[s[0]][s[2]] * B[s[3]][s[1]] +
                          B[s[0]][s[3]] * B[s[1]][s[2]];
          if ((th + phi) % 2 != 0) ++bad_psi;
        }
  rep.add("polarization.even", "ft.theta.div", bad_theta == 0,
          std::to_string(tuples) + " tuples");
  rep.add("psi.integral", "ft.psi.div", bad_psi == 0,
          std::to_string(tuples) + " tuples");
  return rep;
}

Mat ft_e6_embed(const FTSystem& F, const Isometry& phi) {
  if (!phi.multiplier.is_one())
    throw AlbError("norm similarity with multiplier != 1 required");
  std::size_t d = F.j.dim;
  Mat dg = dagger(phi.m, F.j);
  Mat G(phi.m.ctx, 2 * d + 2, 2 * d + 2);
  G.at(0, 0) = G.at(2 * d + 1, 2 * d + 1) = phi.m.ctx->one();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      G.at(1 + i, 1 + k) = phi.m.at(i, k);
      G.at(1 + d + i, 1 + d + k) = dg.at(i, k);
    }
  return G;
}

Mat ft_torus(const FTSystem& F, const Scalar& beta) {
  if (!beta.is_unit()) throw AlbError("torus parameter must be a unit");
  std::size_t d = F.j.dim;
  const Ctx& c = beta.ctx();
  Scalar bi = beta.inv();
  Mat G(c, 2 * d + 2, 2 * d + 2);
  G.at(0, 0) = bi * bi * bi;
  G.at(2 * d + 1, 2 * d + 1) = beta * beta * beta;
  for (std::size_t i = 0; i < d; ++i) {
    G.at(1 + i, 1 + i) = beta;
    G.at(1 + d + i, 1 + d + i) = bi;
  }
  return G;
}

// The shift by y.  The x' block picks up x cross y and the scalar rows pick
// up the adjoint and norm of y; the linear truncation alone does not fix q.
Mat ft_trans_up(const FTSystem& F, const Vec& y) {
  const CubicJordan& j = F.j;
  std::size_t d = j.dim;
  const Ctx& c = y[0].ctx();
  Vec ys = j.sharp(y);
  Vec ty = mat_embed(c, j.tmat).apply(y);
  Vec tys = mat_embed(c, j.tmat).apply(ys);
  Mat G = Mat::identity(c, 2 * d + 2);
  for (std::size_t k = 0; k < d; ++k) {
    G.at(0, 1 + k) = tys[k];
    G.at(0, 1 + d + k) = ty[k];
    G.at(1 + k, 2 * d + 1) = y[k];
    G.at(1 + d + k, 2 * d + 1) = ys[k];
  }
  G.at(0, 2 * d + 1) = j.norm_of(y);
  for (std::size_t col = 0; col < d; ++col) {
    Vec cc = j.cross(vec_basis(c, d, col), y);
    for (std::size_t k = 0; k < d; ++k) G.at(1 + d + k, 1 + col) = cc[k];
  }
  return G;
}

Mat ft_trans_down(const FTSystem& F, const Vec& y) {
  const CubicJordan& j = F.j;
  std::size_t d = j.dim;
  const Ctx& c = y[0].ctx();
  Vec ys = j.sharp(y);
  Vec ty = mat_embed(c, j.tmat).apply(y);
  Vec tys = mat_embed(c, j.tmat).apply(ys);
  Mat G = Mat::identity(c, 2 * d + 2);
  for (std::size_t k = 0; k < d; ++k) {
    G.at(2 * d + 1, 1 + k) = ty[k];
    G.at(2 * d + 1, 1 + d + k) = tys[k];
    G.at(1 + d + k, 0) = y[k];
    G.at(1 + k, 0) = ys[k];
  }
  G.at(2 * d + 1, 0) = j.norm_of(y);
  for (std::size_t col = 0; col < d; ++col) {
    Vec cc = j.cross(vec_basis(c, d, col), y);
    for (std::size_t k = 0; k < d; ++k) G.at(1 + k, 1 + d + col) = cc[k];
  }
  return G;
}

Mat ft_similarity(const FTSystem& F, const Scalar& mu) {
  if (!mu.is_unit()) throw AlbError("similarity parameter must be a unit");
  std::size_t d = F.j.dim;
  const Ctx& c = mu.ctx();
  Mat G(c, 2 * d + 2, 2 * d + 2);
  G.at(0, 0) = mu.inv();
  G.at(2 * d + 1, 2 * d + 1) = mu * mu;
  for (std::size_t i = 0; i < d; ++i) {
    G.at(1 + i, 1 + i) = mu;
    G.at(1 + d + i, 1 + d + i) = c->one();
  }
  return G;
}

std::string ft_to_json(const FTVec& X) {
  nlohmann::json out;
  out["alpha"] = X.alpha.str();
  out["x"] = nlohmann::json::array();
  for (const Scalar& s : X.x) out["x"].push_back(s.str());
  out["xp"] = nlohmann::json::array();
  for (const Scalar& s : X.xp) out["xp"].push_back(s.str());
  out["alpha_prime"] = X.alpha_prime.str();
  return out.dump(2);
}

FTVec ft_from_json(const FTSystem& F, const std::string& text) {
  nlohmann::json in = nlohmann::json::parse(text);
  const Ctx& c = F.j.ctx;
  FTVec X;
  X.alpha = scalar_from_string(c, in.at("alpha").get<std::string>());
  X.alpha_prime =
      scalar_from_string(c, in.at("alpha_prime").get<std::string>());
  for (const auto& s : in.at("x"))
    X.x.push_back(scalar_from_string(c, s.get<std::string>()));
  for (const auto& s : in.at("xp"))
    X.xp.push_back(scalar_from_string(c, s.get<std::string>()));
  if (X.x.size() != F.j.dim || X.xp.size() != F.j.dim)
    throw AlbError("bad block length");
  return X;
}

}  // namespace alb

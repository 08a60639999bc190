#include "albertine/comp.hpp"

#include <nlohmann/json.hpp>

namespace alb {

namespace {

// Fano-plane data for the octaves: the seven lines {r, r+1, r+3} mod 7
// (representatives in 1..7), cyclically oriented.
struct OctTable {
  int idx[8][8];   // basis index of e_i e_j
  int sign[8][8];  // its sign
};

int wrap7(int x) { return (x - 1) % 7 + 1; }

const OctTable& oct_table() {
  static OctTable t = [] {
    OctTable t{};
    for (int j = 0; j < 8; ++j) {
      t.idx[0][j] = j;
      t.sign[0][j] = 1;
      t.idx[j][0] = j;
      t.sign[j][0] = 1;
    }
    for (int i = 1; i <= 7; ++i) {
      t.idx[i][i] = 0;
      t.sign[i][i] = -1;
    }
    for (int r = 1; r <= 7; ++r) {
      int line[3] = {r, wrap7(r + 1), wrap7(r + 3)};
      for (int s = 0; s < 3; ++s) {
        int a = line[s], b = line[(s + 1) % 3], c = line[(s + 2) % 3];
        t.idx[a][b] = c;
        t.sign[a][b] = 1;
        t.idx[b][a] = c;
        t.sign[b][a] = -1;
      }
    }
    return t;
  }();
  return t;
}

void push_mul(CompAlg& c, std::size_t i, std::size_t j, std::size_t k,
              const Scalar& s) {
  if (!s.is_zero()) c.mul[i * c.rank + j].emplace_back(k, s);
}

void push_norm(CompAlg& c, std::size_t i, std::size_t j, const Scalar& s) {
  if (!s.is_zero()) c.normq.push_back({{i, j}, s});
}

// cross-product index pairs: (a x b)_0 = a1 b2 - a2 b1, etc.
constexpr int cross[3][2][2] = {
    {{1, 2}, {2, 1}}, {{2, 0}, {0, 2}}, {{0, 1}, {1, 0}}};

CompAlg make_zorn(const Ctx& ctx) {
  // basis order: alpha1, u0 u1 u2, x0 x1 x2, alpha2
  CompAlg c;
  c.ctx = ctx;
  c.rank = 8;
  c.labels = {"a1", "u0", "u1", "u2", "x0", "x1", "x2", "a2"};
  c.mul.resize(64);
  Scalar one = ctx->one();
  auto U = [](int i) { return 1 + i; };
  auto X = [](int i) { return 4 + i; };
  // alpha1 beta1 - u.y
  push_mul(c, 0, 0, 0, one);
  for (int i = 0; i < 3; ++i) push_mul(c, U(i), X(i), 0, -one);
  // alpha1 v + beta2 u + x cross y
  for (int i = 0; i < 3; ++i) {
    push_mul(c, 0, U(i), U(i), one);
    push_mul(c, U(i), 7, U(i), one);
    push_mul(c, X(cross[i][0][0]), X(cross[i][0][1]), U(i), one);
    push_mul(c, X(cross[i][1][0]), X(cross[i][1][1]), U(i), -one);
  }
  // beta1 x + alpha2 y + u cross v
  for (int i = 0; i < 3; ++i) {
    push_mul(c, X(i), 0, X(i), one);
    push_mul(c, 7, X(i), X(i), one);
    push_mul(c, U(cross[i][0][0]), U(cross[i][0][1]), X(i), one);
    push_mul(c, U(cross[i][1][0]), U(cross[i][1][1]), X(i), -one);
  }
  // -x.v + alpha2 beta2
  for (int i = 0; i < 3; ++i) push_mul(c, X(i), U(i), 7, -one);
  push_mul(c, 7, 7, 7, one);
  c.unit = vec_zero(ctx, 8);
  c.unit[0] = one;
  c.unit[7] = one;
  push_norm(c, 0, 7, one);
  for (int i = 0; i < 3; ++i) push_norm(c, U(i), X(i), one);
  return c;
}

CompAlg make_octonions(const Ctx& ctx) {
  CompAlg c;
  c.ctx = ctx;
  c.rank = 8;
  c.labels = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  c.mul.resize(64);
  const OctTable& t = oct_table();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      push_mul(c, i, j, t.idx[i][j], ctx->from_int(t.sign[i][j]));
  c.unit = vec_basis(ctx, 8, 0);
  for (int i = 0; i < 8; ++i) push_norm(c, i, i, ctx->one());
  return c;
}

}  // namespace

const CoxeterFrame& coxeter_frame() {
  static CoxeterFrame f = [] {
    // doubled orthonormal coordinates of 1, e1..e7, h1..h4
    const int span[12][8] = {
        {2, 0, 0, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0, 0, 0},
        {0, 0, 2, 0, 0, 0, 0, 0}, {0, 0, 0, 2, 0, 0, 0, 0},
        {0, 0, 0, 0, 2, 0, 0, 0}, {0, 0, 0, 0, 0, 2, 0, 0},
        {0, 0, 0, 0, 0, 0, 2, 0}, {0, 0, 0, 0, 0, 0, 0, 2},
        {1, 1, 1, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 0, 0, 1},
        {1, 1, 0, 0, 0, 1, 1, 0}, {0, 1, 1, 1, 0, 1, 0, 0}};
    IntMatrix m(12, 8);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 8; ++j) m.at(i, j) = span[i][j];
    CoxeterFrame f;
    f.doubled_basis = hnf(m).h;
    if (f.doubled_basis.rows != 8)
      throw AlbError("coxeter spanning set is not full rank");
    return f;
  }();
  return f;
}

std::vector<Int> CoxeterFrame::to_order(const std::vector<Int>& doubled,
                                        bool* ok) const {
  return solve_hnf(doubled_basis, doubled, ok);
}

namespace {

CompAlg make_coxeter(const Ctx& ctx) {
  if (ctx->kind != RingKind::Integers)
    throw AlbError("the maximal octave order lives over the integers");
  const CoxeterFrame& fr = coxeter_frame();
  const OctTable& t = oct_table();
  CompAlg c;
  c.ctx = ctx;
  c.rank = 8;
  for (int i = 0; i < 8; ++i) c.labels.push_back("b" + std::to_string(i));
  c.mul.resize(64);
  auto dbl_row = [&](std::size_t i) {
    std::vector<Int> v(8);
    for (int j = 0; j < 8; ++j) v[j] = fr.doubled_basis.at(i, j);
    return v;
  };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      std::vector<Int> a = dbl_row(i), b = dbl_row(j), prod(8);
      // (a/2)(b/2) doubled is (a b)/2 in the octave frame
      for (int s = 0; s < 8; ++s)
        for (int r = 0; r < 8; ++r)
          prod[t.idx[s][r]] += t.sign[s][r] * a[s] * b[r];
      for (Int& v : prod) {
        if (v % 2 != 0) throw AlbError("order not closed under multiplication");
        v /= 2;
      }
      bool ok = false;
      std::vector<Int> coords = fr.to_order(prod, &ok);
      if (!ok) throw AlbError("order not closed under multiplication");
      for (std::size_t k = 0; k < 8; ++k)
        push_mul(c, i, j, k, ctx->from_int(coords[k]));
    }
  {
    std::vector<Int> one_dbl = {2, 0, 0, 0, 0, 0, 0, 0};
    bool ok = false;
    std::vector<Int> u = fr.to_order(one_dbl, &ok);
    if (!ok) throw AlbError("unit escapes the order");
    c.unit = vec_zero(ctx, 8);
    for (std::size_t k = 0; k < 8; ++k) c.unit[k] = ctx->from_int(u[k]);
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      Int dot = 0;
      for (int s = 0; s < 8; ++s)
        dot += fr.doubled_basis.at(i, s) * fr.doubled_basis.at(j, s);
      // n(b_i) = |d_i|^2/4; n(b_i, b_j) = d_i . d_j / 2
      Int val = (i == j) ? dot / 4 : dot / 2;
      if ((i == j && val * 4 != dot) || (i != j && val * 2 != dot))
        throw AlbError("norm not integral on the order");
      push_norm(c, i, j, ctx->from_int(val));
    }
  return c;
}

}  // namespace

Vec coxeter_beta(const CompAlg& coxeter) {
  std::vector<Int> dbl = {-1, 1, 1, 1, 1, 1, 1, 1};
  bool ok = false;
  std::vector<Int> coords = coxeter_frame().to_order(dbl, &ok);
  if (!ok) throw AlbError("beta escapes the order");
  Vec v(8);
  for (std::size_t i = 0; i < 8; ++i) v[i] = coxeter.ctx->from_int(coords[i]);
  return v;
}

Vec CompAlg::times(const Vec& x, const Vec& y) const {
  if (x.size() != rank || y.size() != rank)
    throw AlbError("element rank mismatch");
  const Ctx& vctx = x[0].ctx();
  Vec out = vec_zero(vctx, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, s] : mul[i * rank + j]) out[k] += s * xy;
    }
  }
  return out;
}

Scalar CompAlg::norm(const Vec& x) const {
  const Ctx& vctx = x[0].ctx();
  Scalar acc = vctx->zero();
  for (const auto& [ij, s] : normq) acc += s * x[ij.first] * x[ij.second];
  return acc;
}

Scalar CompAlg::bil(const Vec& x, const Vec& y) const {
  const Ctx& vctx = x[0].ctx();
  Scalar acc = vctx->zero();
  for (const auto& [ij, s] : normq) {
    auto [i, j] = ij;
    if (i == j) {
      acc += s * (x[i] * y[i] + x[i] * y[i]);
    } else {
      acc += s * (x[i] * y[j] + x[j] * y[i]);
    }
  }
  return acc;
}

Scalar CompAlg::trace(const Vec& x) const { return bil(x, vec_embed(x[0].ctx(), unit)); }

Vec CompAlg::conj(const Vec& x) const {
  Scalar t = trace(x);
  Vec r(rank);
  for (std::size_t i = 0; i < rank; ++i) r[i] = t * unit[i] - x[i];
  return r;
}

Vec CompAlg::inverse(const Vec& x) const {
  Scalar n = norm(x);
  if (!n.is_unit()) throw NotInvertible("element norm is not a unit");
  return vec_scale(n.inv(), conj(x));
}

Mat CompAlg::gram() const {
  Mat g(ctx, rank, rank);
  for (const auto& [ij, s] : normq) {
    auto [i, j] = ij;
    if (i == j) {
      g.at(i, i) += s + s;
    } else {
      g.at(i, j) += s;
      g.at(j, i) += s;
    }
  }
  return g;
}

CompAlg CompAlg::extend(const Ctx& target) const {
  CompAlg c = *this;
  c.ctx = target;
  for (auto& cell : c.mul)
    for (auto& [k, s] : cell) s = embed(target, s);
  c.unit = vec_embed(target, c.unit);
  for (auto& [ij, s] : c.normq) s = embed(target, s);
  return c;
}

CompAlg comp_construct(CompKind kind, const Ctx& ctx) {
  switch (kind) {
    case CompKind::rank1: {
      if (!ctx->from_int(2).is_unit())
        throw AlbError("rank-1 composition algebra needs 2 invertible");
      CompAlg c;
      c.ctx = ctx;
      c.rank = 1;
      c.labels = {"1"};
      c.mul.resize(1);
      push_mul(c, 0, 0, 0, ctx->one());
      c.unit = {ctx->one()};
      push_norm(c, 0, 0, ctx->one());
      return c;
    }
    case CompKind::split_etale: {
      CompAlg c;
      c.ctx = ctx;
      c.rank = 2;
      c.labels = {"p0", "p1"};
      c.mul.resize(4);
      push_mul(c, 0, 0, 0, ctx->one());
      push_mul(c, 1, 1, 1, ctx->one());
      c.unit = {ctx->one(), ctx->one()};
      push_norm(c, 0, 1, ctx->one());
      return c;
    }
    case CompKind::mat2: {
      CompAlg c;
      c.ctx = ctx;
      c.rank = 4;
      c.labels = {"E11", "E12", "E21", "E22"};
      c.mul.resize(16);
      auto idx = [](int r, int cc) { return 2 * r + cc; };
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          for (int u = 0; u < 2; ++u)
            push_mul(c, idx(r, s), idx(s, u), idx(r, u), ctx->one());
      c.unit = vec_zero(ctx, 4);
      c.unit[0] = ctx->one();
      c.unit[3] = ctx->one();
      push_norm(c, 0, 3, ctx->one());
      push_norm(c, 1, 2, -ctx->one());
      return c;
    }
    case CompKind::zorn:
      return make_zorn(ctx);
    case CompKind::real_octonions:
      return make_octonions(ctx);
    case CompKind::coxeter_order:
      return make_coxeter(ctx);
  }
  throw AlbError("bad composition kind");
}

CompAlg comp_isotope(const CompAlg& c, const Vec& p, const Vec& q) {
  Vec pq = c.times(p, q);
  Scalar npq = c.norm(pq);
  if (!c.norm(p).is_unit() || !c.norm(q).is_unit())
    throw NotInvertible("isotope parameters must have unit norm");
  CompAlg r;
  r.ctx = c.ctx;
  r.rank = c.rank;
  r.labels = c.labels;
  r.mul.resize(c.rank * c.rank);
  for (std::size_t i = 0; i < c.rank; ++i) {
    Vec bip = c.times(vec_basis(c.ctx, c.rank, i), p);
    for (std::size_t j = 0; j < c.rank; ++j) {
      Vec qbj = c.times(q, vec_basis(c.ctx, c.rank, j));
      Vec prod = c.times(bip, qbj);
      for (std::size_t k = 0; k < c.rank; ++k)
        push_mul(r, i, j, k, prod[k]);
    }
  }
  r.unit = c.inverse(pq);
  for (const auto& [ij, s] : c.normq) r.normq.push_back({ij, npq * s});
  return r;
}

Report comp_verify(const CompAlg& c) {
  Report rep;
  std::size_t r = c.rank;
  Ctx g = RingCtx::poly_n(c.ctx, "x", 4 * r);
  Vec x = vec_generic(g, r, 0);
  Vec y = vec_generic(g, r, r);
  Vec w = vec_generic(g, r, 2 * r);
  Vec z = vec_generic(g, r, 3 * r);
  Vec unit = vec_embed(g, c.unit);

  rep.add("unit.law", "comp.def",
          c.times(unit, x) == x && c.times(x, unit) == x);
  rep.add("unit.norm", "comp.def", c.norm(unit).is_one());
  bool gram_unit = false;
  std::string gram_note;
  try {
    gram_unit = mat_det(c.gram()).is_unit();
  } catch (const AlbError& e) {
    gram_note = e.what();
  }
  rep.add("norm.regular", "comp.def", gram_unit, gram_note);
  rep.add("composition.law", "comp.def",
          (c.norm(c.times(x, y)) - c.norm(x) * c.norm(y)).is_zero());
  {
    Vec lhs = c.times(x, x);
    Scalar t = c.trace(x), n = c.norm(x);
    Vec ch(r);
    for (std::size_t i = 0; i < r; ++i) ch[i] = lhs[i] - t * x[i] + n * unit[i];
    rep.add("cayley.hamilton", "comp.char.poly", vec_is_zero(ch));
  }
  rep.add("conj.involution", "comp.conj", c.conj(c.conj(x)) == x);
  rep.add("conj.antihom", "comp.conj",
          c.conj(c.times(x, y)) == c.times(c.conj(y), c.conj(x)));
  rep.add("norm.linearized.1", "comp.linearized",
          (c.bil(c.times(x, y), x) - c.norm(x) * c.trace(y)).is_zero());
  rep.add("norm.linearized.2", "comp.linearized",
          (c.bil(c.times(x, y), c.times(w, z)) +
           c.bil(c.times(w, y), c.times(x, z)) -
           c.bil(x, w) * c.bil(y, z))
              .is_zero());
  return rep;
}

std::string comp_to_json(const CompAlg& c) {
  nlohmann::json j;
  j["rank"] = c.rank;
  j["labels"] = c.labels;
  j["unit"] = nlohmann::json::array();
  for (const auto& s : c.unit) j["unit"].push_back(s.str());
  j["mul"] = nlohmann::json::array();
  for (std::size_t i = 0; i < c.rank; ++i)
    for (std::size_t jj = 0; jj < c.rank; ++jj)
      for (const auto& [k, s] : c.mul[i * c.rank + jj])
        j["mul"].push_back({i, jj, k, s.str()});
  j["norm"] = nlohmann::json::array();
  for (const auto& [ij, s] : c.normq)
    j["norm"].push_back({ij.first, ij.second, s.str()});
  return j.dump(2);
}

CompAlg comp_from_json(const Ctx& ctx, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CompAlg c;
  c.ctx = ctx;
  c.rank = j.at("rank").get<std::size_t>();
  c.labels = j.at("labels").get<std::vector<std::string>>();
  c.mul.resize(c.rank * c.rank);
  c.unit = vec_zero(ctx, c.rank);
  for (std::size_t i = 0; i < c.rank; ++i)
    c.unit[i] = scalar_from_string(ctx, j.at("unit")[i].get<std::string>());
  for (const auto& e : j.at("mul"))
    push_mul(c, e[0].get<std::size_t>(), e[1].get<std::size_t>(),
             e[2].get<std::size_t>(),
             scalar_from_string(ctx, e[3].get<std::string>()));
  for (const auto& e : j.at("norm"))
    push_norm(c, e[0].get<std::size_t>(), e[1].get<std::size_t>(),
              scalar_from_string(ctx, e[2].get<std::string>()));
  return c;
}

}  // namespace alb

#include "albertine/polymap.hpp"

namespace alb {

Vec PolyMap::eval(const Vec& x) const {
  if (x.size() != dom) throw AlbError("polymap arity mismatch");
  const Ctx& vctx = dom ? x[0].ctx() : ctx;
  // lazily computed small powers of the inputs
  std::vector<std::vector<Scalar>> pw(dom);
  auto power = [&](std::size_t i, int e) -> const Scalar& {
    auto& col = pw[i];
    if (col.empty()) col.push_back(x[i]);
    while (static_cast<int>(col.size()) < e) col.push_back(col.back() * x[i]);
    return col[e - 1];
  };
  Vec out;
  out.reserve(cod);
  std::vector<Scalar> parts;
  for (std::size_t k = 0; k < cod; ++k) {
    parts.clear();
    for (const auto& [e, c] : comp[k]) {
      Scalar m = c;
      for (std::size_t i = 0; i < dom; ++i) {
        int ei = expv_get(e, i);
        if (ei > 0) m = m * power(i, ei);
      }
      parts.push_back(std::move(m));
    }
    out.push_back(scalar_sum(vctx, std::move(parts)));
    parts = {};
  }
  return out;
}

Scalar PolyMap::eval_scalar(const Vec& x) const {
  if (cod != 1) throw AlbError("eval_scalar needs a scalar-valued map");
  return eval(x)[0];
}

bool PolyMap::operator==(const PolyMap& o) const {
  if (dom != o.dom || cod != o.cod || degree != o.degree) return false;
  for (std::size_t k = 0; k < cod; ++k) {
    // canonical term lists; compare supports then coefficients
    if (comp[k].size() != o.comp[k].size()) return false;
    for (std::size_t t = 0; t < comp[k].size(); ++t)
      if (comp[k][t].first != o.comp[k][t].first ||
          comp[k][t].second != o.comp[k][t].second)
        return false;
  }
  return true;
}

PolyMap polymap_from_fn(const Ctx& ctx, std::size_t dom, std::size_t cod,
                        int degree,
                        const std::function<Vec(const Vec&)>& fn) {
  Ctx g = RingCtx::poly_n(ctx, "@x", dom);
  Vec xg = vec_generic(g, dom, 0);
  Vec img = fn(xg);
  if (img.size() != cod) throw AlbError("polymap codomain mismatch");
  PolyMap f;
  f.ctx = ctx;
  f.dom = dom;
  f.cod = cod;
  f.degree = degree;
  f.comp.resize(cod);
  for (std::size_t k = 0; k < cod; ++k) {
    Scalar v = embed(g, img[k]);
    for (const auto& [e, c] : v.terms()) {
      int total = 0;
      for (std::size_t i = 0; i < dom; ++i) {
        int ei = expv_get(e, i);
        if (ei < 0) throw AlbError("polymap with negative exponent");
        total += ei;
      }
      if (total != degree) throw AlbError("map is not homogeneous");
      f.comp[k].emplace_back(e, c);
    }
  }
  return f;
}

PolyMap polymap_embed(const Ctx& target, const PolyMap& f) {
  PolyMap r = f;
  r.ctx = target;
  for (auto& coord : r.comp)
    for (auto& [e, c] : coord) c = embed(target, c);
  return r;
}

PolyMap polymap_postcompose(const Mat& m, const PolyMap& f) {
  if (m.cols != f.cod) throw AlbError("postcompose shape mismatch");
  PolyMap r;
  r.ctx = f.ctx;
  r.dom = f.dom;
  r.cod = m.rows;
  r.degree = f.degree;
  r.comp.resize(r.cod);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::vector<std::pair<Expv, Scalar>> acc;
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero()) continue;
      for (const auto& [e, c] : f.comp[j]) acc.emplace_back(e, m.at(i, j) * c);
    }
    // canonicalize through Scalar's poly machinery
    Ctx g = RingCtx::poly_n(f.ctx, "@x", f.dom);
    Scalar s = Scalar::make_poly(g, std::move(acc));
    r.comp[i].assign(s.terms().begin(), s.terms().end());
  }
  return r;
}

PolyMap polymap_scale(const Scalar& s, const PolyMap& f) {
  PolyMap r = f;
  for (auto& coord : r.comp) {
    for (auto& [e, c] : coord) c = s * c;
    std::erase_if(coord, [](const auto& t) { return t.second.is_zero(); });
  }
  return r;
}

std::vector<Vec> dir_expansion(const PolyMap& f, const Vec& v, const Vec& x) {
  if (v.size() != f.dom || x.size() != f.dom)
    throw AlbError("derivative arity mismatch");
  const Ctx& vctx = f.dom ? x[0].ctx() : f.ctx;
  Ctx t = RingCtx::poly(vctx, {"@t"});
  Scalar tvar = t->indet(0);
  Vec arg(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i)
    arg[i] = embed(t, x[i]) + tvar * embed(t, v[i]);
  Vec img = f.eval(arg);
  std::vector<Vec> out(f.degree + 1, Vec(f.cod));
  for (std::size_t k = 0; k < f.cod; ++k) {
    for (int n = 0; n <= f.degree; ++n)
      out[n][k] = vctx->zero();
    for (const auto& [e, c] : embed(t, img[k]).terms())
      out[expv_get(e, 0)][k] = c;
  }
  return out;
}

Vec dir_derivative(const PolyMap& f, unsigned n, const Vec& v, const Vec& x) {
  if (static_cast<int>(n) > f.degree) return vec_zero(f.dom ? x[0].ctx() : f.ctx, f.cod);
  return dir_expansion(f, v, x)[n];
}

}  // namespace alb

#include "albertine/cns.hpp"

#include <nlohmann/json.hpp>

namespace alb {

namespace {

// decode a degree-2 exponent vector into its index pair a <= b
std::pair<std::size_t, std::size_t> quad_indices(const Expv& e) {
  std::size_t a = SIZE_MAX, b = SIZE_MAX;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int p = expv_get(e, i);
    if (p == 2) return {i, i};
    if (p == 1) {
      if (a == SIZE_MAX)
        a = i;
      else
        b = i;
    } else if (p != 0) {
      throw AlbError("adjoint map is not quadratic");
    }
  }
  if (b == SIZE_MAX) throw AlbError("adjoint map is not quadratic");
  return {a, b};
}

}  // namespace

CubicJordan cns_make(Ctx ctx, Vec base_point, PolyMap adjoint, PolyMap norm,
                     std::vector<std::string> labels) {
  std::size_t dim = base_point.size();
  if (adjoint.dom != dim || adjoint.cod != dim || adjoint.degree != 2)
    throw AlbError("adjoint must be a quadratic self-map");
  if (norm.dom != dim || norm.cod != 1 || norm.degree != 3)
    throw AlbError("norm must be a cubic form");
  CubicJordan j;
  j.ctx = std::move(ctx);
  j.dim = dim;
  j.labels = std::move(labels);
  if (j.labels.empty())
    for (std::size_t i = 0; i < dim; ++i)
      j.labels.push_back("b" + std::to_string(i));
  j.base_point = std::move(base_point);
  j.adjoint = std::move(adjoint);
  j.norm = std::move(norm);

  j.quad.resize(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (const auto& [e, c] : j.adjoint.comp[k])
      j.quad[k].push_back({quad_indices(e), c});

  // T(x,y) = (grad_x N)(1)(grad_y N)(1) - (grad_x grad_y N)(1)
  Ctx st = RingCtx::poly(j.ctx, {"@s", "@t"});
  Scalar s = st->indet(0), t = st->indet(1);
  j.tmat = Mat(j.ctx, dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) {
      Vec v = vec_embed(st, j.base_point);
      v[a] += s;
      v[b] += t;
      Scalar n = j.norm.eval_scalar(v);
      Scalar da = coeff_of(n, expv_unit(2, 0));
      Scalar db = coeff_of(n, expv_unit(2, 1));
      Scalar dab = coeff_of(n, expv_add(expv_unit(2, 0), expv_unit(2, 1)));
      if (a == b) {
        // grad_a at slot b equals slot a; the mixed term needs distinct slots
        Vec w = vec_embed(st, j.base_point);
        w[a] += s + t;
        Scalar m = j.norm.eval_scalar(w);
        dab = coeff_of(m, expv_add(expv_unit(2, 0), expv_unit(2, 1)));
        db = da;
      }
      j.tmat.at(a, b) = da * db - dab;
      j.tmat.at(b, a) = j.tmat.at(a, b);
    }
  j.trvec = Vec(dim, j.ctx->zero());
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      j.trvec[a] += j.tmat.at(a, b) * j.base_point[b];
  return j;
}

Vec CubicJordan::sharp(const Vec& x) const {
  const Ctx& c = x[0].ctx();
  Vec out(dim);
  std::vector<Scalar> parts;
  for (std::size_t k = 0; k < dim; ++k) {
    parts.clear();
    for (const auto& [ab, s] : quad[k]) {
      if (x[ab.first].is_zero() || x[ab.second].is_zero()) continue;
      parts.push_back(s * x[ab.first] * x[ab.second]);
    }
    out[k] = scalar_sum(c, std::move(parts));
    parts = {};
  }
  return out;
}

Scalar CubicJordan::norm_of(const Vec& x) const { return norm.eval_scalar(x); }

Vec CubicJordan::cross(const Vec& x, const Vec& y) const {
  const Ctx& c = x[0].ctx();
  Vec out(dim);
  std::vector<Scalar> parts;
  for (std::size_t k = 0; k < dim; ++k) {
    parts.clear();
    for (const auto& [ab, s] : quad[k]) {
      auto [a, b] = ab;
      if (a == b) {
        if (!x[a].is_zero() && !y[a].is_zero()) {
          Scalar m = s * x[a] * y[a];
          parts.push_back(m + m);
        }
      } else {
        if (!x[a].is_zero() && !y[b].is_zero())
          parts.push_back(s * x[a] * y[b]);
        if (!x[b].is_zero() && !y[a].is_zero())
          parts.push_back(s * x[b] * y[a]);
      }
    }
    out[k] = scalar_sum(c, std::move(parts));
    parts = {};
  }
  return out;
}

Scalar CubicJordan::t_form(const Vec& x, const Vec& y) const {
  const Ctx& c = x[0].ctx();
  std::vector<Scalar> parts;
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      const Scalar& t = tmat.at(a, b);
      if (t.is_zero() || y[b].is_zero()) continue;
      parts.push_back(t * x[a] * y[b]);
    }
  }
  return scalar_sum(c, std::move(parts));
}

Scalar CubicJordan::tr(const Vec& x) const {
  const Ctx& c = x[0].ctx();
  std::vector<Scalar> parts;
  for (std::size_t a = 0; a < dim; ++a)
    if (!trvec[a].is_zero() && !x[a].is_zero())
      parts.push_back(trvec[a] * x[a]);
  return scalar_sum(c, std::move(parts));
}

Scalar CubicJordan::s_form(const Vec& x) const { return tr(sharp(x)); }

Vec CubicJordan::u_op(const Vec& x, const Vec& y) const {
  Scalar t = t_form(x, y);
  Vec out = cross(sharp(x), y);
  for (std::size_t k = 0; k < dim; ++k) out[k] = t * x[k] - out[k];
  return out;
}

Vec CubicJordan::brace(const Vec& x, const Vec& y, const Vec& z) const {
  return vec_sub(vec_sub(u_op(vec_add(x, z), y), u_op(x, y)), u_op(z, y));
}

Vec CubicJordan::power(const Vec& x, unsigned n) const {
  const Ctx& c = x[0].ctx();
  if (n == 0) return vec_embed(c, base_point);
  if (n == 1) return x;
  return u_op(x, power(x, n - 2));
}

Vec CubicJordan::inverse(const Vec& x) const {
  Scalar n = norm_of(x);
  if (!n.is_unit()) throw NotInvertible("element norm is not a unit");
  return vec_scale(n.inv(), sharp(x));
}

Scalar CubicJordan::min_poly_eval(const Vec& x, const Scalar& t0) const {
  return t0 * t0 * t0 - tr(x) * t0 * t0 + s_form(x) * t0 - norm_of(x);
}

PolyMap cns_s_map(const CubicJordan& j) {
  Mat row(j.ctx, 1, j.dim);
  for (std::size_t i = 0; i < j.dim; ++i) row.at(0, i) = j.trvec[i];
  return polymap_postcompose(row, j.adjoint);
}

namespace {

bool char_divisible(const Ctx& c, int m) {
  switch (c->kind) {
    case RingKind::FiniteField:
      return c->p == m;
    case RingKind::Modular:
      return c->n % m == 0;
    case RingKind::PolyExt:
      return char_divisible(c->base, m);
    default:
      return false;
  }
}

bool no_zero_divisors(const Ctx& c) {
  switch (c->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::FiniteField:
      return true;
    case RingKind::Modular:
      return false;
    case RingKind::PolyExt:
      return no_zero_divisors(c->base);
  }
  return false;
}

// v |-> T(v, .) is injective when det T is a unit, or merely nonzero over a
// ring without zero divisors
bool tform_injective(const CubicJordan& j) {
  try {
    Scalar det = mat_det(j.tmat);
    if (det.is_zero()) return false;
    return det.is_unit() || no_zero_divisors(j.ctx);
  } catch (const AlbError&) {
    return false;
  }
}

}  // namespace

Report cns_verify(const CubicJordan& j, VerifyLevel level) {
  Report rep;
  std::size_t d = j.dim;
  switch (level) {
    case VerifyLevel::axioms: {
      Ctx g = RingCtx::poly_n(j.ctx, "x", 2 * d);
      Vec x = vec_generic(g, d, 0), y = vec_generic(g, d, d);
      Vec one = vec_embed(g, j.base_point);
      rep.add("base.sharp", "cns.base", j.sharp(one) == one);
      rep.add("base.norm", "cns.base", j.norm_of(one).is_one());
      {
        Vec lhs = j.cross(one, x);
        Scalar t = j.tr(x);
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k) rhs[k] = t * one[k] - x[k];
        rep.add("unit.cross", "cns.unit", lhs == rhs);
      }
      rep.add("norm.gradient", "cns.gradient",
              dir_derivative(j.norm, 1, y, x)[0] == j.t_form(j.sharp(x), y));
      {
        Vec lhs = j.sharp(j.sharp(x));
        Scalar n = j.norm_of(x);
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k) rhs[k] = n * x[k];
        rep.add("adjoint.adjoint", "cns.biadjoint", lhs == rhs);
      }
      {
        Scalar t = j.tr(x);
        rep.add("trace.quad", "cns.traces",
                (j.t_form(x, x) - t * t + j.s_form(x) + j.s_form(x)).is_zero());
      }
      break;
    }
    case VerifyLevel::jordan: {
      // two auxiliary identities at a generic triple: total symmetry of
      // T(a x b, c) and the trace expansion of the brace.  Both are genuine
      // consequences of the axioms, and once established they license the
      // cheaper forms of the fundamental checks below.
      bool sym, blin;
      {
        Ctx g3 = RingCtx::poly_n(j.ctx, "y", 3 * d);
        Vec a = vec_generic(g3, d, 0), b = vec_generic(g3, d, d),
            c = vec_generic(g3, d, 2 * d);
        sym = j.t_form(j.cross(a, b), c) == j.t_form(a, j.cross(b, c));
        rep.add("cross.symmetric", "jordan.fundamental", sym);
        Scalar tab = j.t_form(a, b), tcb = j.t_form(c, b);
        Vec lin = j.cross(j.cross(a, c), b);
        for (std::size_t k = 0; k < d; ++k)
          lin[k] = tab * c[k] + tcb * a[k] - lin[k];
        blin = j.brace(a, b, c) == lin;
        rep.add("brace.linear", "jordan.fundamental", blin);
      }
      Ctx g = RingCtx::poly_n(j.ctx, "x", 2 * d);
      Vec x = vec_generic(g, d, 0), y = vec_generic(g, d, d);
      Vec w = j.u_op(x, y);
      bool fund = true, fund2 = true;
      if (sym && blin && tform_injective(j)) {
        // fundamental.u as a Gram matrix: since T is injective,
        // U_w = U_x U_y U_x iff T(U_w e_k, e_l) = T(U_x U_y U_x e_k, e_l)
        // for all k, l.  Self-adjointness of U_x (from cross.symmetric)
        // turns the right side into T(U_y c_k, c_l) with c_k = U_x e_k, and
        // both sides reduce to trace data -- no degree-6 vectors are formed.
        Vec xs = j.sharp(x), ys = j.sharp(y), ws = j.sharp(w);
        auto tdual = [&](const Vec& v) {
          Vec out(d);
          std::vector<Scalar> parts;
          for (std::size_t bb = 0; bb < d; ++bb) {
            parts.clear();
            for (std::size_t aa = 0; aa < d; ++aa)
              if (!j.tmat.at(aa, bb).is_zero() && !v[aa].is_zero())
                parts.push_back(j.tmat.at(aa, bb) * v[aa]);
            out[bb] = scalar_sum(g, std::move(parts));
            parts = {};
          }
          return out;
        };
        auto dotv = [&](const Vec& u, const Vec& v) {
          std::vector<Scalar> parts;
          for (std::size_t i = 0; i < d; ++i)
            if (!u[i].is_zero() && !v[i].is_zero())
              parts.push_back(u[i] * v[i]);
          return scalar_sum(g, std::move(parts));
        };
        std::vector<Vec> cx(d);   // columns U_x e_k
        Vec tw(d), tx(d), ty(d);  // T(w,e_k), T(x,e_k), T(y, U_x e_k)
        for (std::size_t k = 0; k < d; ++k) {
          Vec ek = vec_basis(g, d, k);
          Scalar t = j.t_form(x, ek);
          cx[k] = j.cross(xs, ek);
          for (std::size_t i = 0; i < d; ++i) cx[k][i] = t * x[i] - cx[k][i];
          tw[k] = j.t_form(w, ek);
          tx[k] = std::move(t);
          ty[k] = j.t_form(y, cx[k]);
        }
        Vec tws = tdual(ws), tys = tdual(ys);
        for (std::size_t k = 0; k < d && fund; ++k) {
          Vec ek = vec_basis(g, d, k);
          for (std::size_t l = k; l < d && fund; ++l) {
            Vec el = vec_basis(g, d, l);
            Scalar lhs = tw[k] * tw[l] - dotv(j.cross(ek, el), tws);
            Scalar rhs = ty[k] * ty[l] - dotv(j.cross(cx[k], cx[l]), tys);
            if (lhs != rhs) fund = false;
          }
        }
        // fundamental.brace directly, with both braces expanded through the
        // verified trace formula so no sharp of a degree-3 vector is needed
        Scalar txy = j.t_form(y, x);
        Vec wx = j.cross(w, x);
        for (std::size_t k = 0; k < d && fund2; ++k) {
          Vec ek = vec_basis(g, d, k);
          Vec b = j.cross(j.cross(y, ek), x);
          for (std::size_t i = 0; i < d; ++i)
            b[i] = txy * ek[i] + tx[k] * y[i] - b[i];
          Scalar t = j.t_form(x, b);
          Vec lhs = j.cross(xs, b);
          Vec rhs = j.cross(wx, ek);
          for (std::size_t i = 0; i < d; ++i) {
            lhs[i] = t * x[i] - lhs[i];
            rhs[i] = tw[k] * x[i] + tx[k] * w[i] - rhs[i];
          }
          if (lhs != rhs) fund2 = false;
        }
      } else {
        Vec ws = j.sharp(w);
        for (std::size_t k = 0; k < d && (fund || fund2); ++k) {
          Vec ek = vec_basis(g, d, k);
          if (fund) {
            Scalar t = j.t_form(w, ek);
            Vec lhs = j.cross(ws, ek);
            for (std::size_t i = 0; i < d; ++i) lhs[i] = t * w[i] - lhs[i];
            Vec rhs = j.u_op(x, j.u_op(y, j.u_op(x, ek)));
            if (lhs != rhs) fund = false;
          }
          if (fund2) {
            Vec lhs = j.u_op(x, j.brace(y, x, ek));
            Vec rhs = j.brace(w, ek, x);
            if (lhs != rhs) fund2 = false;
          }
        }
      }
      rep.add("fundamental.u", "jordan.fundamental", fund);
      rep.add("fundamental.brace", "jordan.fundamental", fund2);
      break;
    }
    case VerifyLevel::degree3: {
      Ctx g = RingCtx::poly_n(j.ctx, "x", 2 * d);
      Vec x = vec_generic(g, d, 0), y = vec_generic(g, d, d);
      Vec one = vec_embed(g, j.base_point);
      Vec xs = j.sharp(x);
      Scalar n = j.norm_of(x);
      Vec w = j.u_op(x, y);
      Vec wsharp = j.sharp(w);
      bool sharp_u = wsharp == j.u_op(xs, j.sharp(y));
      rep.add("sharp.u", "cns.sharp.norm", sharp_u);
      {
        Vec lhs = j.u_op(x, xs);
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k) rhs[k] = n * x[k];
        rep.add("u.adjoint", "cns.inv", lhs == rhs);
      }
      {
        Vec lhs = j.u_op(x, j.u_op(xs, one));
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k) rhs[k] = n * n * one[k];
        rep.add("u.adjoint.square", "cns.inv", lhs == rhs);
      }
      Scalar t = j.tr(x), sq = j.s_form(x);
      Vec x2 = j.power(x, 2), x3 = j.u_op(x, x), x4 = j.u_op(x, x2);
      {
        Vec rhs(d);
        for (std::size_t k = 0; k < d; ++k)
          rhs[k] = x2[k] - t * x[k] + sq * one[k];
        rep.add("sharp.square", "cns.sharp.square", xs == rhs);
      }
      {
        Vec p(d), tp(d);
        for (std::size_t k = 0; k < d; ++k) {
          p[k] = x3[k] - t * x2[k] + sq * x[k] - n * one[k];
          tp[k] = x4[k] - t * x3[k] + sq * x2[k] - n * x[k];
        }
        rep.add("cubic.eq", "cns.cubic", vec_is_zero(p));
        rep.add("cubic.eq.t", "cns.cubic", vec_is_zero(tp));
      }
      // T(z#, z) = 3N(z) and the operator identity U_{x#} U_x = N(x)^2 id,
      // both at generic points
      bool trace3, uinv;
      {
        Scalar tsx = j.t_form(xs, x);
        trace3 = tsx == n + n + n;
        rep.add("sharp.trace", "cns.traces", trace3);
        Vec g2 = j.u_op(xs, w);
        bool ok = true;
        Scalar n2 = n * n;
        for (std::size_t k = 0; k < d; ++k)
          if (g2[k] != n2 * y[k]) ok = false;
        uinv = ok;
        rep.add("u.op.inverse", "cns.inv", uinv);
      }
      {
        // N(U_x y) = N(x)^2 N(y).  Away from characteristic 3 this is a
        // formal consequence of identities already verified generically:
        //   3 N(w) = T(w#, w)                 [sharp.trace at z = w]
        //          = T(U_{x#} y#, U_x y)      [sharp.u]
        //          = T(y#, U_{x#} U_x y)      [self-adjointness of U_{x#},
        //                                      from symmetry of T(a x b, c)]
        //          = N(x)^2 T(y#, y)          [u.op.inverse]
        //          = 3 N(x)^2 N(y)            [sharp.trace at z = y],
        // and 3 is a non-zero-divisor.  Deriving it this way avoids forming
        // T(w#, w), a degree-9 product that is enormous for dense models.
        bool sym;
        {
          Ctx g3 = RingCtx::poly_n(j.ctx, "y", 3 * d);
          Vec a = vec_generic(g3, d, 0), b = vec_generic(g3, d, d),
              c = vec_generic(g3, d, 2 * d);
          sym = j.t_form(j.cross(a, b), c) == j.t_form(a, j.cross(b, c));
        }
        bool ok;
        std::string how;
        if (!char_divisible(j.ctx, 3) && sharp_u && trace3 && uinv && sym) {
          ok = true;
          how = "via T(z#,z) = 3N(z) and U_{x#} U_x = N(x)^2";
        } else if (!char_divisible(j.ctx, 3) && sharp_u) {
          Scalar target = n * n * j.norm_of(y);
          ok = j.t_form(wsharp, w) == target + target + target;
          how = "via 3N = T(z#,z)";
        } else {
          ok = j.norm_of(w) == n * n * j.norm_of(y);
          how = "direct";
        }
        rep.add("norm.u", "cns.norm.comp", ok, how);
      }
      break;
    }
  }
  return rep;
}

Report cns_verify_all(const CubicJordan& j) {
  Report r = cns_verify(j, VerifyLevel::axioms);
  r.merge(cns_verify(j, VerifyLevel::jordan));
  r.merge(cns_verify(j, VerifyLevel::degree3));
  return r;
}

Report cns_transport(const CubicJordan& src, const CubicJordan& dst,
                     const Mat& phi) {
  Report rep;
  bool shape = src.dim == dst.dim && phi.rows == dst.dim &&
               phi.cols == src.dim && same_ctx(src.ctx, dst.ctx);
  rep.add("transport.shape", "cns.transport", shape);
  if (!shape) return rep;
  bool inj = false;
  std::string note;
  try {
    Scalar det = mat_det(phi);
    inj = src.ctx->is_field() || src.ctx->kind == RingKind::Integers
              ? !det.is_zero()
              : det.is_unit();
  } catch (const AlbError& e) {
    note = e.what();
  }
  rep.add("transport.injective", "cns.transport", inj, note);
  rep.add("transport.base", "cns.transport",
          phi.apply(src.base_point) == dst.base_point);
  Ctx g = RingCtx::poly_n(src.ctx, "x", 2 * src.dim);
  Vec x = vec_generic(g, src.dim, 0), y = vec_generic(g, src.dim, src.dim);
  Vec px = phi.apply(x), py = phi.apply(y);
  rep.add("transport.adjoint", "cns.transport",
          dst.sharp(px) == phi.apply(src.sharp(x)));
  rep.add("transport.norm", "cns.transport",
          dst.norm_of(px) == src.norm_of(x));
  rep.add("transport.trace", "cns.transport",
          dst.t_form(px, py) == src.t_form(x, y));
  return rep;
}

namespace {

nlohmann::json polymap_terms_json(const PolyMap& f) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < f.cod; ++k)
    for (const auto& [e, c] : f.comp[k]) {
      nlohmann::json ev = nlohmann::json::array();
      for (std::size_t i = 0; i < e.size(); ++i) ev.push_back(expv_get(e, i));
      out.push_back({k, ev, c.str()});
    }
  return out;
}

PolyMap polymap_terms_parse(const Ctx& ctx, std::size_t dom, std::size_t cod,
                            int degree, const nlohmann::json& terms) {
  PolyMap f;
  f.ctx = ctx;
  f.dom = dom;
  f.cod = cod;
  f.degree = degree;
  f.comp.resize(cod);
  for (const auto& t : terms) {
    Expv e = expv_zero(dom);
    const auto& ev = t[1];
    for (std::size_t i = 0; i < dom; ++i)
      e = expv_add(e, expv_unit(dom, i, ev[i].get<int>()));
    f.comp[t[0].get<std::size_t>()].push_back(
        {e, scalar_from_string(ctx, t[2].get<std::string>())});
  }
  return f;
}

}  // namespace

std::string cns_to_json(const CubicJordan& j) {
  nlohmann::json out;
  out["dim"] = j.dim;
  out["labels"] = j.labels;
  out["base_point"] = nlohmann::json::array();
  for (const auto& s : j.base_point) out["base_point"].push_back(s.str());
  out["adjoint"] = polymap_terms_json(j.adjoint);
  out["norm"] = polymap_terms_json(j.norm);
  return out.dump(2);
}

CubicJordan cns_from_json(const Ctx& ctx, const std::string& text) {
  nlohmann::json in = nlohmann::json::parse(text);
  std::size_t dim = in.at("dim").get<std::size_t>();
  Vec base(dim);
  for (std::size_t i = 0; i < dim; ++i)
    base[i] = scalar_from_string(ctx, in.at("base_point")[i].get<std::string>());
  PolyMap adj = polymap_terms_parse(ctx, dim, dim, 2, in.at("adjoint"));
  PolyMap nrm = polymap_terms_parse(ctx, dim, 1, 3, in.at("norm"));
  return cns_make(ctx, std::move(base), std::move(adj), std::move(nrm),
                  in.value("labels", std::vector<std::string>{}));
}

}  // namespace alb

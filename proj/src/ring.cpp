#include "albertine/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace alb {

namespace {

long long mod_norm(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

// extended gcd: returns g, sets x with a*x == g (mod n)
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// ---- GF(p^k) arithmetic on FFElem ----------------------------------------

FFElem ff_add(const RingCtx& c, const FFElem& a, const FFElem& b) {
  FFElem r;
  for (int i = 0; i < c.deg; ++i)
    r.c[i] = static_cast<std::int16_t>(mod_norm(a.c[i] + b.c[i], c.p));
  return r;
}

FFElem ff_neg(const RingCtx& c, const FFElem& a) {
  FFElem r;
  for (int i = 0; i < c.deg; ++i)
    r.c[i] = static_cast<std::int16_t>(mod_norm(-a.c[i], c.p));
  return r;
}

FFElem ff_mul(const RingCtx& c, const FFElem& a, const FFElem& b) {
  // schoolbook product then reduction by the monic modulus
  std::array<long long, 5> prod{};
  for (int i = 0; i < c.deg; ++i)
    for (int j = 0; j < c.deg; ++j) prod[i + j] += 1LL * a.c[i] * b.c[j];
  for (int d = 2 * (c.deg - 1); d >= c.deg; --d) {
    long long coef = mod_norm(prod[d], c.p);
    prod[d] = 0;
    for (int i = 0; i < c.deg; ++i) prod[d - c.deg + i] -= coef * c.modulus[i];
  }
  FFElem r;
  for (int i = 0; i < c.deg; ++i)
    r.c[i] = static_cast<std::int16_t>(mod_norm(prod[i], c.p));
  return r;
}

bool ff_is_zero(const FFElem& a) {
  return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0;
}

FFElem ff_pow(const RingCtx& c, FFElem a, long long e) {
  FFElem r;
  r.c[0] = 1;
  while (e > 0) {
    if (e & 1) r = ff_mul(c, r, a);
    a = ff_mul(c, a, a);
    e >>= 1;
  }
  return r;
}

FFElem ff_inv(const RingCtx& c, const FFElem& a) {
  if (ff_is_zero(a)) throw NotInvertible("division by zero in finite field");
  long long q = 1;
  for (int i = 0; i < c.deg; ++i) q *= c.p;
  return ff_pow(c, a, q - 2);
}

}  // namespace

// ---- RingCtx --------------------------------------------------------------

Ctx RingCtx::integers() {
  static Ctx z = [] {
    auto c = std::make_shared<RingCtx>();
    c->kind = RingKind::Integers;
    return Ctx(c);
  }();
  return z;
}

Ctx RingCtx::rationals() {
  static Ctx q = [] {
    auto c = std::make_shared<RingCtx>();
    c->kind = RingKind::Rationals;
    return Ctx(c);
  }();
  return q;
}

Ctx RingCtx::gf(int p, int k, std::vector<int> modulus) {
  if (p < 2 || p > 97) throw AlbError("unsupported finite field characteristic");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw AlbError("finite field characteristic must be prime");
  if (k < 1 || k > 3) throw AlbError("unsupported finite field degree");
  auto c = std::make_shared<RingCtx>();
  c->kind = RingKind::FiniteField;
  c->p = p;
  c->deg = k;
  if (k > 1) {
    if (modulus.empty() && p == 2 && k == 3) modulus = {1, 1, 0};  // w^3+w+1
    if (static_cast<int>(modulus.size()) != k)
      throw AlbError("modulus must list k low-order coefficients");
    for (int& m : modulus) m = static_cast<int>(mod_norm(m, p));
    c->modulus = modulus;
    // irreducibility for degree 2 or 3 is exactly rootlessness
    for (int r = 0; r < p; ++r) {
      long long val = 1;
      for (int i = 0; i < k; ++i) val = mod_norm(val * r, p);
      long long rp = 1;
      for (int i = 0; i < k; ++i) {
        val = mod_norm(val + modulus[i] * rp, p);
        rp = mod_norm(rp * r, p);
      }
      if (val == 0) throw AlbError("modulus polynomial is reducible");
    }
  }
  return Ctx(c);
}

Ctx RingCtx::modular(long long n) {
  if (n < 2) throw AlbError("modulus must be at least 2");
  auto c = std::make_shared<RingCtx>();
  c->kind = RingKind::Modular;
  c->n = n;
  return Ctx(c);
}

Ctx RingCtx::poly(Ctx base, std::vector<std::string> vars,
                  std::vector<char> laurent) {
  if (!base) throw AlbError("null base ring");
  if (laurent.empty()) laurent.assign(vars.size(), 0);
  if (laurent.size() != vars.size())
    throw AlbError("laurent flag count mismatch");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw AlbError("duplicate indeterminate name");
  auto c = std::make_shared<RingCtx>();
  c->kind = RingKind::PolyExt;
  c->base = std::move(base);
  c->vars = std::move(vars);
  c->laurent = std::move(laurent);
  return Ctx(c);
}

Ctx RingCtx::poly_n(Ctx base, const std::string& stem, std::size_t n,
                    bool laurent) {
  std::vector<std::string> vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vs.push_back(stem + std::to_string(i));
  return poly(std::move(base), std::move(vs),
              std::vector<char>(n, laurent ? 1 : 0));
}

bool RingCtx::is_field() const {
  switch (kind) {
    case RingKind::Rationals:
    case RingKind::FiniteField:
      return true;
    default:
      return false;
  }
}

std::string RingCtx::describe() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::FiniteField:
      return deg == 1 ? "GF(" + std::to_string(p) + ")"
                      : "GF(" + std::to_string(p) + "^" + std::to_string(deg) +
                            ")";
    case RingKind::Modular:
      return "Z/" + std::to_string(n);
    case RingKind::PolyExt: {
      std::string s = base->describe() + "[";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
        if (laurent[i]) s += "^-";
      }
      return s + "]";
    }
  }
  return "?";
}

bool same_ctx(const Ctx& a, const Ctx& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::FiniteField:
      return a->p == b->p && a->deg == b->deg && a->modulus == b->modulus;
    case RingKind::Modular:
      return a->n == b->n;
    case RingKind::PolyExt:
      return a->vars == b->vars && a->laurent == b->laurent &&
             same_ctx(a->base, b->base);
  }
  return false;
}

bool tower_over(const Ctx& big, const Ctx& small) {
  if (same_ctx(big, small)) return true;
  if (big && big->kind == RingKind::PolyExt)
    return tower_over(big->base, small);
  return false;
}

// ---- exponent vectors -----------------------------------------------------

int expv_get(const Expv& e, std::size_t i) {
  return static_cast<signed char>(e[i]);
}

Expv expv_zero(std::size_t n) { return Expv(n, '\0'); }

Expv expv_unit(std::size_t n, std::size_t i, int power) {
  Expv e(n, '\0');
  e[i] = static_cast<char>(static_cast<signed char>(power));
  return e;
}

Expv expv_add(const Expv& a, const Expv& b) {
  Expv r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    int s = static_cast<signed char>(r[i]) + static_cast<signed char>(b[i]);
    if (s > 120 || s < -120) throw AlbError("monomial exponent overflow");
    r[i] = static_cast<char>(static_cast<signed char>(s));
  }
  return r;
}

static bool expv_less(const Expv& a, const Expv& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ai = static_cast<signed char>(a[i]), bi = static_cast<signed char>(b[i]);
    if (ai != bi) return ai < bi;
  }
  return false;
}

// ---- Scalar construction --------------------------------------------------

Scalar Scalar::make_int(Ctx c, Int v) {
  Scalar s;
  s.ctx_ = std::move(c);
  s.v_ = std::move(v);
  return s;
}
Scalar Scalar::make_rat(Ctx c, Rat v) {
  Scalar s;
  s.ctx_ = std::move(c);
  s.v_ = std::move(v);
  return s;
}
Scalar Scalar::make_ff(Ctx c, FFElem v) {
  Scalar s;
  s.ctx_ = std::move(c);
  s.v_ = v;
  return s;
}
Scalar Scalar::make_mod(Ctx c, long long v) {
  Scalar s;
  long long n = c->n;
  s.ctx_ = std::move(c);
  s.v_ = mod_norm(v, n);
  return s;
}
// terms already sorted, merged, and free of zeros
static Scalar poly_from_canonical(Ctx c,
                                  std::vector<std::pair<Expv, Scalar>> terms) {
  auto p = std::make_shared<Poly>();
  p->t = std::move(terms);
  return Scalar::make_poly_raw(std::move(c), std::move(p));
}

Scalar Scalar::make_poly_raw(Ctx c, PolyPtr p) {
  Scalar s;
  s.ctx_ = std::move(c);
  s.v_ = std::move(p);
  return s;
}

Scalar Scalar::make_poly(Ctx c, std::vector<std::pair<Expv, Scalar>> terms) {
  // canonicalize: sort, merge, drop zeros
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return expv_less(a.first, b.first); });
  std::vector<std::pair<Expv, Scalar>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  auto p = std::make_shared<Poly>();
  p->t = std::move(out);
  Scalar s;
  s.ctx_ = std::move(c);
  s.v_ = PolyPtr(std::move(p));
  return s;
}

Scalar RingCtx::zero() const { return from_int(0); }
Scalar RingCtx::one() const { return from_int(1); }

Scalar RingCtx::from_int(long long v) const { return from_int(Int(v)); }

Scalar RingCtx::from_int(const Int& v) const {
  Ctx self = shared_from_this();
  switch (kind) {
    case RingKind::Integers:
      return Scalar::make_int(self, v);
    case RingKind::Rationals:
      return Scalar::make_rat(self, Rat(v));
    case RingKind::FiniteField: {
      FFElem e;
      e.c[0] = static_cast<std::int16_t>(
          mod_norm(static_cast<long long>(v % p), p));
      return Scalar::make_ff(self, e);
    }
    case RingKind::Modular:
      return Scalar::make_mod(self, static_cast<long long>(v % n));
    case RingKind::PolyExt: {
      Scalar c = base->from_int(v);
      if (c.is_zero()) return Scalar::make_poly(self, {});
      return Scalar::make_poly(self, {{expv_zero(vars.size()), c}});
    }
  }
  throw AlbError("bad ring kind");
}

Scalar RingCtx::indet(std::size_t i) const {
  if (kind != RingKind::PolyExt || i >= vars.size())
    throw AlbError("indeterminate out of range");
  return Scalar::make_poly(shared_from_this(),
                           {{expv_unit(vars.size(), i), base->one()}});
}

// ---- Scalar queries -------------------------------------------------------

const Int& Scalar::as_int() const {
  if (auto* p = std::get_if<Int>(&v_)) return *p;
  throw AlbError("not an integer scalar");
}
const Rat& Scalar::as_rat() const {
  if (auto* p = std::get_if<Rat>(&v_)) return *p;
  throw AlbError("not a rational scalar");
}
long long Scalar::as_mod() const {
  if (auto* p = std::get_if<long long>(&v_)) return *p;
  throw AlbError("not a residue scalar");
}
const FFElem& Scalar::as_ff() const {
  if (auto* p = std::get_if<FFElem>(&v_)) return *p;
  throw AlbError("not a finite field scalar");
}
const std::vector<std::pair<Expv, Scalar>>& Scalar::terms() const {
  if (auto* p = std::get_if<PolyPtr>(&v_)) return (*p)->t;
  throw AlbError("not a polynomial scalar");
}

bool Scalar::is_zero() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
      return as_int().is_zero();
    case RingKind::Rationals:
      return as_rat().is_zero();
    case RingKind::FiniteField:
      return ff_is_zero(as_ff());
    case RingKind::Modular:
      return as_mod() == 0;
    case RingKind::PolyExt:
      return terms().empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == ctx_->one(); }

bool Scalar::is_unit() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
      return as_int() == 1 || as_int() == -1;
    case RingKind::Rationals:
      return !as_rat().is_zero();
    case RingKind::FiniteField:
      return !ff_is_zero(as_ff());
    case RingKind::Modular: {
      long long x, y;
      return egcd(as_mod(), ctx_->n, x, y) == 1;
    }
    case RingKind::PolyExt: {
      const auto& ts = terms();
      if (ts.size() != 1 || !ts[0].second.is_unit()) return false;
      for (std::size_t i = 0; i < ctx_->nvars(); ++i)
        if (expv_get(ts[0].first, i) != 0 && !ctx_->laurent[i]) return false;
      return true;
    }
  }
  return false;
}

Scalar Scalar::inv() const {
  switch (ctx_->kind) {
    case RingKind::Integers: {
      if (!is_unit()) throw NotInvertible("integer is not a unit");
      return *this;
    }
    case RingKind::Rationals: {
      if (is_zero()) throw NotInvertible("division by zero");
      const Rat& r = as_rat();
      return make_rat(ctx_, Rat(1) / r);
    }
    case RingKind::FiniteField:
      return make_ff(ctx_, ff_inv(*ctx_, as_ff()));
    case RingKind::Modular: {
      long long x, y;
      if (egcd(as_mod(), ctx_->n, x, y) != 1)
        throw NotInvertible("residue is not a unit");
      return make_mod(ctx_, x);
    }
    case RingKind::PolyExt: {
      if (!is_unit()) throw NotInvertible("polynomial is not a unit");
      const auto& t = terms()[0];
      Expv e = t.first;
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<char>(-static_cast<signed char>(e[i]));
      return make_poly(ctx_, {{e, t.second.inv()}});
    }
  }
  throw AlbError("bad ring kind");
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = ctx_->one();
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// ---- lifting --------------------------------------------------------------

Scalar embed(const Ctx& target, const Scalar& s) {
  if (same_ctx(target, s.ctx())) return s;
  if (target->kind != RingKind::PolyExt || !tower_over(target, s.ctx()))
    throw AlbError("scalar does not embed into target ring");
  Scalar c = embed(target->base, s);
  if (c.is_zero()) return Scalar::make_poly(target, {});
  return Scalar::make_poly(target, {{expv_zero(target->nvars()), c}});
}

namespace {

// resolves mixed-context operands onto a common tower
void align(Scalar& a, Scalar& b) {
  if (same_ctx(a.ctx(), b.ctx())) return;
  if (tower_over(a.ctx(), b.ctx())) {
    b = embed(a.ctx(), b);
    return;
  }
  if (tower_over(b.ctx(), a.ctx())) {
    a = embed(b.ctx(), a);
    return;
  }
  throw AlbError("scalar context mismatch");
}

}  // namespace

// ---- arithmetic -----------------------------------------------------------

Scalar Scalar::operator-() const {
  switch (ctx_->kind) {
    case RingKind::Integers:
      return make_int(ctx_, -as_int());
    case RingKind::Rationals:
      return make_rat(ctx_, -as_rat());
    case RingKind::FiniteField:
      return make_ff(ctx_, ff_neg(*ctx_, as_ff()));
    case RingKind::Modular:
      return make_mod(ctx_, -as_mod());
    case RingKind::PolyExt: {
      auto ts = terms();
      for (auto& t : ts) t.second = -t.second;
      auto p = std::make_shared<Poly>();
      p->t = std::move(ts);
      Scalar s;
      s.ctx_ = ctx_;
      s.v_ = PolyPtr(std::move(p));
      return s;
    }
  }
  throw AlbError("bad ring kind");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!same_ctx(a.ctx(), b.ctx())) {
    Scalar a1 = a, b1 = b;
    align(a1, b1);
    return a1 + b1;
  }
  const Ctx& c = a.ctx();
  switch (c->kind) {
    case RingKind::Integers:
      return Scalar::make_int(c, a.as_int() + b.as_int());
    case RingKind::Rationals:
      return Scalar::make_rat(c, a.as_rat() + b.as_rat());
    case RingKind::FiniteField:
      return Scalar::make_ff(c, ff_add(*c, a.as_ff(), b.as_ff()));
    case RingKind::Modular:
      return Scalar::make_mod(c, a.as_mod() + b.as_mod());
    case RingKind::PolyExt: {
      // merge of two sorted canonical term lists
      const auto& x = a.terms();
      const auto& y = b.terms();
      std::vector<std::pair<Expv, Scalar>> out;
      out.reserve(x.size() + y.size());
      std::size_t i = 0, j = 0;
      while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
          Scalar s = x[i].second + y[j].second;
          if (!s.is_zero()) out.emplace_back(x[i].first, std::move(s));
          ++i, ++j;
        } else if (expv_less(x[i].first, y[j].first)) {
          out.push_back(x[i++]);
        } else {
          out.push_back(y[j++]);
        }
      }
      for (; i < x.size(); ++i) out.push_back(x[i]);
      for (; j < y.size(); ++j) out.push_back(y[j]);
      // the merge of two canonical lists is canonical
      return poly_from_canonical(c, std::move(out));
    }
  }
  throw AlbError("bad ring kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!same_ctx(a.ctx(), b.ctx())) {
    Scalar a1 = a, b1 = b;
    align(a1, b1);
    return a1 * b1;
  }
  const Ctx& c = a.ctx();
  switch (c->kind) {
    case RingKind::Integers:
      return Scalar::make_int(c, a.as_int() * b.as_int());
    case RingKind::Rationals:
      return Scalar::make_rat(c, a.as_rat() * b.as_rat());
    case RingKind::FiniteField:
      return Scalar::make_ff(c, ff_mul(*c, a.as_ff(), b.as_ff()));
    case RingKind::Modular:
      return Scalar::make_mod(c, a.as_mod() * b.as_mod());
    case RingKind::PolyExt: {
      const auto& x = a.terms();
      const auto& y = b.terms();
      if (x.empty() || y.empty()) return Scalar::make_poly(c, {});
      if (x.size() == 1 || y.size() == 1) {
        // translating every exponent vector by a fixed monomial keeps the
        // term order, so the result is canonical without re-sorting
        const auto& [me, mc] = x.size() == 1 ? x[0] : y[0];
        const auto& rest = x.size() == 1 ? y : x;
        std::vector<std::pair<Expv, Scalar>> out;
        out.reserve(rest.size());
        for (const auto& [e, s] : rest) {
          Scalar p = mc * s;
          if (!p.is_zero()) out.emplace_back(expv_add(e, me), std::move(p));
        }
        return poly_from_canonical(c, std::move(out));
      }
      std::unordered_map<Expv, Scalar> acc;
      acc.reserve(x.size() * y.size() / 2 + 8);
      for (const auto& tx : x)
        for (const auto& ty : y) {
          Expv e = expv_add(tx.first, ty.first);
          Scalar prod = tx.second * ty.second;
          auto it = acc.find(e);
          if (it == acc.end())
            acc.emplace(std::move(e), std::move(prod));
          else
            it->second += prod;
        }
      std::vector<std::pair<Expv, Scalar>> out;
      out.reserve(acc.size());
      for (auto& kv : acc) out.emplace_back(kv.first, std::move(kv.second));
      return Scalar::make_poly(c, std::move(out));
    }
  }
  throw AlbError("bad ring kind");
}

Scalar scalar_sum(const Ctx& ctx, std::vector<Scalar> parts) {
  if (parts.empty()) return ctx->zero();
  // balanced fold: each term takes part in O(log n) pairwise merges
  while (parts.size() > 1) {
    std::vector<Scalar> next;
    next.reserve(parts.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts[0];
}

bool operator==(const Scalar& a0, const Scalar& b0) {
  if (!same_ctx(a0.ctx(), b0.ctx())) {
    Scalar a1 = a0, b1 = b0;
    align(a1, b1);
    return a1 == b1;
  }
  const Scalar& a = a0;
  const Scalar& b = b0;
  const Ctx& c = a.ctx();
  switch (c->kind) {
    case RingKind::Integers:
      return a.as_int() == b.as_int();
    case RingKind::Rationals:
      return a.as_rat() == b.as_rat();
    case RingKind::FiniteField:
      return a.as_ff() == b.as_ff();
    case RingKind::Modular:
      return a.as_mod() == b.as_mod();
    case RingKind::PolyExt:
      return a.terms() == b.terms();
  }
  return false;
}

Scalar Scalar::div_exact(long long d) const {
  if (d == 0) throw AlbError("division by zero");
  switch (ctx_->kind) {
    case RingKind::Integers: {
      if (as_int() % d != 0) throw AlbError("inexact integer division");
      return make_int(ctx_, as_int() / d);
    }
    case RingKind::Rationals:
      return make_rat(ctx_, as_rat() / d);
    case RingKind::FiniteField:
    case RingKind::Modular:
      return *this * ctx_->from_int(d).inv();
    case RingKind::PolyExt: {
      auto ts = terms();
      for (auto& t : ts) t.second = t.second.div_exact(d);
      return make_poly(ctx_, std::move(ts));
    }
  }
  throw AlbError("bad ring kind");
}

// ---- printing -------------------------------------------------------------

std::string Scalar::str() const {
  std::ostringstream os;
  switch (ctx_->kind) {
    case RingKind::Integers:
      os << as_int();
      break;
    case RingKind::Rationals:
      os << as_rat();
      break;
    case RingKind::FiniteField: {
      const FFElem& e = as_ff();
      if (ctx_->deg == 1) {
        os << e.c[0];
      } else {
        os << "(" << e.c[0];
        for (int i = 1; i < ctx_->deg; ++i) os << "+" << e.c[i] << "w^" << i;
        os << ")";
      }
      break;
    }
    case RingKind::Modular:
      os << as_mod();
      break;
    case RingKind::PolyExt: {
      const auto& ts = terms();
      if (ts.empty()) {
        os << "0";
        break;
      }
      bool first = true;
      for (const auto& t : ts) {
        if (!first) os << " + ";
        first = false;
        os << t.second.str();
        for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
          int e = expv_get(t.first, i);
          if (e == 1)
            os << "*" << ctx_->vars[i];
          else if (e != 0)
            os << "*" << ctx_->vars[i] << "^" << e;
        }
      }
      break;
    }
  }
  return os.str();
}

// ---- coefficient extraction / substitution --------------------------------

Scalar coeff_of(const Scalar& s, const Expv& e) {
  const auto& ts = s.terms();
  for (const auto& t : ts)
    if (t.first == e) return t.second;
  return s.ctx()->base->zero();
}

Scalar subst(const Scalar& s, const std::vector<Scalar>& vals) {
  const Ctx& c = s.ctx();
  if (c->kind != RingKind::PolyExt) throw AlbError("subst needs a polynomial");
  if (vals.size() != c->nvars()) throw AlbError("substitution arity mismatch");
  Ctx target = vals.empty() ? c->base : vals[0].ctx();
  Scalar acc = target->zero();
  for (const auto& t : s.terms()) {
    Scalar m = t.second;  // lifts via align as needed
    for (std::size_t i = 0; i < vals.size(); ++i) {
      int e = expv_get(t.first, i);
      if (e != 0) m = m * vals[i].pow(e);
    }
    acc += m;
  }
  return acc;
}

Scalar scalar_from_string(const Ctx& ctx, const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (ctx->kind != RingKind::Rationals)
      throw AlbError("fraction literal needs rational context");
    if (den == 0) throw AlbError("zero denominator");
    return Scalar::make_rat(ctx, Rat(num) / Rat(den));
  }
  return ctx->from_int(Int(text));
}

// ---- vectors --------------------------------------------------------------

Vec vec_zero(const Ctx& c, std::size_t n) { return Vec(n, c->zero()); }

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& s : a)
    if (!s.is_zero()) return false;
  return true;
}

Vec vec_embed(const Ctx& target, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = embed(target, a[i]);
  return r;
}

Vec vec_basis(const Ctx& c, std::size_t n, std::size_t i) {
  Vec r = vec_zero(c, n);
  r[i] = c->one();
  return r;
}

Vec vec_generic(const Ctx& c, std::size_t n, std::size_t offset) {
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = c->indet(offset + i);
  return r;
}

}  // namespace alb

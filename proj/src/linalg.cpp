#include "albertine/linalg.hpp"

#include <numeric>

namespace alb {

Mat Mat::identity(const Ctx& c, std::size_t n) {
  Mat m(c, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c->one();
  return m;
}

Mat Mat::transpose() const {
  Mat m(ctx, cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw AlbError("matrix shape mismatch");
  Mat m(x.ctx, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        m.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    }
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw AlbError("matrix shape mismatch");
  Mat m(x.ctx, x.rows, x.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols) throw AlbError("matrix/vector shape mismatch");
  Vec r;
  r.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Scalar s;
    bool first = true;
    for (std::size_t j = 0; j < cols; ++j) {
      if (at(i, j).is_zero()) continue;
      Scalar t = at(i, j) * v[j];
      if (first) {
        s = std::move(t);
        first = false;
      } else {
        s += t;
      }
    }
    r.push_back(first ? (v.empty() ? ctx->zero() : v[0].ctx()->zero())
                      : std::move(s));
  }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

Mat mat_embed(const Ctx& target, const Mat& m) {
  Mat r(target, m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = embed(target, m.a[i]);
  return r;
}

IntMatrix mat_to_intmatrix(const Mat& m) {
  IntMatrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i].as_int();
  return r;
}

Mat mat_from_intmatrix(const Ctx& ctx, const IntMatrix& m) {
  Mat r(ctx, m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = ctx->from_int(m.a[i]);
  return r;
}

namespace {

// Gauss-Jordan on [m | I] with pivots restricted to units.
Mat unit_pivot_inverse(const Mat& m, bool* ok) {
  std::size_t n = m.rows;
  Mat w = m;
  Mat inv = Mat::identity(m.ctx, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (w.at(i, col).is_unit()) {
        piv = i;
        break;
      }
    if (piv == n) {
      *ok = false;
      return {};
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar d = w.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      w.at(col, j) = d * w.at(col, j);
      inv.at(col, j) = d * inv.at(col, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      Scalar f = w.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  *ok = true;
  return inv;
}

}  // namespace

Mat mat_inverse(const Mat& m) {
  if (m.rows != m.cols) throw AlbError("inverse needs a square matrix");
  if (m.ctx->kind == RingKind::Integers) {
    Ctx q = RingCtx::rationals();
    Mat mq(q, m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i)
      mq.a[i] = Scalar::make_rat(q, Rat(m.a[i].as_int()));
    bool ok = false;
    Mat invq = unit_pivot_inverse(mq, &ok);
    if (!ok) throw NotInvertible("singular matrix");
    Mat r(m.ctx, m.rows, m.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) {
      const Rat& v = invq.a[i].as_rat();
      if (denominator(v) != 1)
        throw NotInvertible("matrix not invertible over the integers");
      r.a[i] = m.ctx->from_int(numerator(v));
    }
    return r;
  }
  bool ok = false;
  Mat inv = unit_pivot_inverse(m, &ok);
  if (!ok) throw NotInvertible("no unit pivot found");
  return inv;
}

Scalar mat_det(const Mat& m) {
  if (m.rows != m.cols) throw AlbError("determinant needs a square matrix");
  if (m.ctx->kind == RingKind::Integers)
    return m.ctx->from_int(det(mat_to_intmatrix(m)));
  Mat w = m;
  std::size_t n = w.rows;
  Scalar d = w.ctx->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (w.at(i, col).is_unit()) {
        piv = i;
        break;
      }
    if (piv == n) {
      bool allzero = true;
      for (std::size_t i = col; i < n; ++i)
        if (!w.at(i, col).is_zero()) allzero = false;
      if (allzero) return w.ctx->zero();
      throw AlbError("determinant needs a unit pivot in this ring");
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(w.at(piv, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    Scalar pinv = w.at(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w.at(i, col).is_zero()) continue;
      Scalar f = w.at(i, col) * pinv;
      for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

bool mat_is_invertible(const Mat& m) {
  try {
    mat_inverse(m);
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

// ---- Span -----------------------------------------------------------------

Span::Span(Ctx ctx, std::size_t width) : ctx_(std::move(ctx)), width_(width) {
  if (!ctx_->is_field() && ctx_->kind != RingKind::Modular)
    throw AlbError("span requires a field or Z/n context");
}

namespace {

std::size_t leading(const Vec& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) return j;
  return v.size();
}

long long egcd_ll(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd_ll(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

bool Span::contains(const Vec& v0) const {
  Vec v = v0;
  if (ctx_->is_field()) {
    for (const Vec& r : rows_) {
      std::size_t p = leading(r);
      if (!v[p].is_zero()) v = vec_sub(v, vec_scale(v[p], r));
    }
    return vec_is_zero(v);
  }
  long long n = ctx_->n;
  for (const Vec& r : rows_) {
    std::size_t p = leading(r);
    long long piv = r[p].as_mod();
    long long val = v[p].as_mod();
    if (val == 0) continue;
    long long x, y;
    long long g = egcd_ll(piv, n, x, y);
    if (val % g != 0) return false;
    long long q = ((val / g) % n) * ((x % n + n) % n) % n;
    v = vec_sub(v, vec_scale(ctx_->from_int(q), r));
  }
  return vec_is_zero(v);
}

bool Span::add(const Vec& v) {
  if (v.size() != width_) throw AlbError("span width mismatch");
  if (ctx_->is_field()) {
    Vec w = v;
    for (const Vec& r : rows_) {
      std::size_t p = leading(r);
      if (!w[p].is_zero()) w = vec_sub(w, vec_scale(w[p], r));
    }
    std::size_t p = leading(w);
    if (p == width_) return false;
    w = vec_scale(w[p].inv(), w);
    for (Vec& r : rows_)
      if (!r[p].is_zero()) r = vec_sub(r, vec_scale(r[p], w));
    rows_.push_back(std::move(w));
    std::sort(rows_.begin(), rows_.end(), [](const Vec& a, const Vec& b) {
      return leading(a) < leading(b);
    });
    return true;
  }
  if (contains(v)) return false;
  rows_.push_back(v);
  rehowell();
  return true;
}

void Span::rehowell() {
  long long n = ctx_->n;
  // raw rows as residues
  std::vector<std::vector<long long>> work;
  for (const Vec& r : rows_) {
    std::vector<long long> w(width_);
    for (std::size_t j = 0; j < width_; ++j) w[j] = r[j].as_mod();
    work.push_back(std::move(w));
  }
  auto lead = [&](const std::vector<long long>& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] % n != 0) return j;
    return r.size();
  };
  std::vector<std::vector<long long>> result;
  for (std::size_t col = 0; col < width_; ++col) {
    // collect rows leading at col, gcd-combine them into one pivot row
    std::vector<std::vector<long long>> here;
    std::vector<std::vector<long long>> rest;
    for (auto& r : work) {
      for (auto& x : r) x = ((x % n) + n) % n;
      std::size_t l = lead(r);
      if (l == col)
        here.push_back(std::move(r));
      else if (l < r.size())
        rest.push_back(std::move(r));
    }
    work = std::move(rest);
    while (here.size() > 1) {
      auto a = std::move(here.back());
      here.pop_back();
      auto& b = here.back();
      long long x, y;
      long long g = egcd_ll(b[col], a[col], x, y);
      (void)g;
      // unimodular 2x2 combine: new pivot row and a leftover row
      long long u1 = a[col] / g, u2 = b[col] / g;
      std::vector<long long> piv(width_), rem(width_);
      for (std::size_t j = 0; j < width_; ++j) {
        piv[j] = (((x * b[j] + y * a[j]) % n) + n) % n;
        rem[j] = (((u1 * b[j] - u2 * a[j]) % n) + n) % n;
      }
      here.back() = std::move(piv);
      if (lead(rem) < width_) work.push_back(std::move(rem));
    }
    if (here.empty()) continue;
    auto piv = std::move(here[0]);
    // normalize pivot to the canonical divisor gcd(pivot, n)
    long long g = std::gcd(piv[col], n);
    for (long long m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      if ((m * piv[col]) % n == g % n) {
        for (auto& x : piv) x = (x * m) % n;
        break;
      }
    }
    // Howell closure: the annihilator multiple may lead further right
    long long u = n / std::gcd(piv[col], n);
    if (u != 1 && u != n) {
      std::vector<long long> ann(width_);
      for (std::size_t j = 0; j < width_; ++j) ann[j] = (piv[j] * u) % n;
      if (lead(ann) < width_) work.push_back(std::move(ann));
    }
    result.push_back(std::move(piv));
  }
  // reduce entries above each pivot into [0, pivot)
  for (std::size_t i = 0; i < result.size(); ++i) {
    std::size_t c = lead(result[i]);
    for (std::size_t j = 0; j < i; ++j) {
      long long q = result[j][c] / result[i][c];
      if (q)
        for (std::size_t t = 0; t < width_; ++t)
          result[j][t] =
              (((result[j][t] - q * result[i][t]) % n) + n) % n;
    }
  }
  rows_.clear();
  for (auto& r : result) {
    Vec v(width_);
    for (std::size_t j = 0; j < width_; ++j) v[j] = ctx_->from_int(r[j]);
    rows_.push_back(std::move(v));
  }
}

bool Span::operator==(const Span& o) const {
  if (width_ != o.width_ || rows_.size() != o.rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < width_; ++j)
      if (rows_[i][j] != o.rows_[i][j]) return false;
  return true;
}

}  // namespace alb

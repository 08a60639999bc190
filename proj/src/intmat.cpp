#include "albertine/intmat.hpp"

#include <sstream>

namespace alb {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw AlbError("matrix shape mismatch");
  IntMatrix m(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        m.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

HnfResult hnf(const IntMatrix& m0) {
  IntMatrix m = m0;
  IntMatrix u = IntMatrix::identity(m.rows);
  std::size_t cur = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  };
  for (std::size_t col = 0; col < m.cols && cur < m.rows; ++col) {
    // gcd elimination below the current row
    while (true) {
      std::size_t best = m.rows;
      for (std::size_t i = cur; i < m.rows; ++i) {
        if (m.at(i, col).is_zero()) continue;
        if (best == m.rows ||
            abs(m.at(i, col)) < abs(m.at(best, col)))
          best = i;
      }
      if (best == m.rows) break;  // column exhausted
      swap_rows(cur, best);
      bool done = true;
      for (std::size_t i = cur + 1; i < m.rows; ++i) {
        if (m.at(i, col).is_zero()) continue;
        Int q = m.at(i, col) / m.at(cur, col);  // truncated quotient
        addmul_row(i, cur, -q);
        if (!m.at(i, col).is_zero()) done = false;
      }
      if (done) break;
    }
    if (m.at(cur, col).is_zero()) continue;
    if (m.at(cur, col) < 0) negate_row(cur);
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < cur; ++i) {
      Int q = m.at(i, col) / m.at(cur, col);
      if (m.at(i, col) - q * m.at(cur, col) < 0) q -= 1;
      if (!q.is_zero()) addmul_row(i, cur, -q);
    }
    ++cur;
  }
  HnfResult res;
  res.h = IntMatrix(cur, m.cols);
  for (std::size_t i = 0; i < cur; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) res.h.at(i, j) = m.at(i, j);
  res.u = u;
  return res;
}

Int det(const IntMatrix& m0) {
  if (m0.rows != m0.cols) throw AlbError("determinant needs a square matrix");
  std::size_t n = m0.rows;
  if (n == 0) return 1;
  IntMatrix m = m0;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::tuple<std::size_t, std::size_t, std::size_t> ldl_signature(
    const IntMatrix& g) {
  if (!g.is_symmetric()) throw AlbError("signature needs a symmetric matrix");
  std::size_t n = g.rows;
  std::vector<Rat> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = Rat(g.a[i]);
  auto at = [&](std::size_t i, std::size_t j) -> Rat& { return a[i * n + j]; };
  std::size_t np = 0, nm = 0, nz = 0;
  std::size_t k = 0;
  while (k < n) {
    // prefer a nonzero diagonal pivot
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!at(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) {
      // all-zero diagonal: look for an off-diagonal coupling
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!at(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        nz += n - k;
        break;
      }
      // congruence: row/col j added to row/col i gives diagonal 2*a_ij
      for (std::size_t t = 0; t < n; ++t) at(oi, t) += at(oj, t);
      for (std::size_t t = 0; t < n; ++t) at(t, oi) += at(t, oj);
      continue;
    }
    if (piv != k) {
      for (std::size_t t = 0; t < n; ++t) std::swap(at(piv, t), at(k, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(at(t, piv), at(t, k));
    }
    Rat d = at(k, k);
    if (d > 0)
      ++np;
    else
      ++nm;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      Rat f = at(i, k) / d;
      for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) at(k, j) = 0;
    ++k;
  }
  return {np, nm, nz};
}

std::vector<Int> solve_hnf(const IntMatrix& h, const std::vector<Int>& target,
                           bool* ok) {
  *ok = false;
  std::vector<Int> t = target;
  std::vector<Int> x(h.rows);
  for (std::size_t i = 0; i < h.rows; ++i) {
    std::size_t p = 0;
    while (p < h.cols && h.at(i, p).is_zero()) ++p;
    if (p == h.cols) return {};
    if (t[p] % h.at(i, p) != 0) return {};
    x[i] = t[p] / h.at(i, p);
    if (!x[i].is_zero())
      for (std::size_t j = 0; j < h.cols; ++j) t[j] -= x[i] * h.at(i, j);
  }
  for (const Int& v : t)
    if (!v.is_zero()) return {};
  *ok = true;
  return x;
}

std::string intmat_to_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows << " " << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << " ";
      os << m.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

IntMatrix intmat_from_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t r, c;
  if (!(is >> r >> c)) throw AlbError("bad matrix header");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r * c; ++i) {
    std::string tok;
    if (!(is >> tok)) throw AlbError("truncated matrix body");
    m.a[i] = Int(tok);
  }
  return m;
}

}  // namespace alb

#pragma once

#include "albertine/intmat.hpp"
#include "albertine/ring.hpp"

namespace alb {

/** Dense matrix over a RingCtx, row-major. */
struct Mat {
  Ctx ctx;
  std::size_t rows = 0, cols = 0;
  Vec a;

  Mat() = default;
  Mat(Ctx c, std::size_t r, std::size_t cl)
      : ctx(std::move(c)), rows(r), cols(cl), a(r * cl, ctx->zero()) {}

  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  static Mat identity(const Ctx& c, std::size_t n);
  Mat transpose() const;
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  /** Column action: (M v)_i = sum_j M_ij v_j. */
  Vec apply(const Vec& v) const;
  bool operator==(const Mat& o) const;
};

/** Lift all entries into a tower ctx. */
Mat mat_embed(const Ctx& target, const Mat& m);

/** Inverse.  Over fields: Gaussian elimination.  Over the integers: solve
 *  over the rationals and demand integrality.  Otherwise: Gaussian
 *  elimination restricted to unit pivots (covers monomial/triangular
 *  matrices over polynomial rings).  Throws NotInvertible. */
Mat mat_inverse(const Mat& m);

bool mat_is_invertible(const Mat& m);

/** Determinant: Bareiss over the integers, Gaussian elimination over
 *  fields, unit-pivot elimination elsewhere (throws when stuck). */
Scalar mat_det(const Mat& m);

/** Convert an all-integer matrix over Integers ctx. */
IntMatrix mat_to_intmatrix(const Mat& m);
Mat mat_from_intmatrix(const Ctx& ctx, const IntMatrix& m);

/**
 * Canonically-based submodule of ctx^width, supporting span growth.  Over a
 * field the basis is kept in reduced row echelon form; over Z/n it is kept
 * in Howell form, so equal submodules compare equal structurally.
 */
class Span {
 public:
  Span(Ctx ctx, std::size_t width);

  /** Adds v to the span; returns true when the span grew. */
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vec>& basis() const { return rows_; }
  bool operator==(const Span& o) const;

 private:
  void rehowell();
  Ctx ctx_;
  std::size_t width_;
  std::vector<Vec> rows_;
};

}  // namespace alb

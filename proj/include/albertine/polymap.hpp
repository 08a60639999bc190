#pragma once

#include <functional>

#include "albertine/linalg.hpp"
#include "albertine/ring.hpp"

namespace alb {

/**
 * Homogeneous polynomial map between free modules, stored as explicit
 * monomial coefficients per output coordinate.  Coefficients live in ctx;
 * evaluation accepts coordinate vectors over any PolyExt tower above ctx,
 * which is what generic-point verification relies on.
 */
struct PolyMap {
  Ctx ctx;
  std::size_t dom = 0, cod = 0;
  int degree = 0;
  // comp[k]: sorted (exponent vector over the dom coordinates, coefficient)
  std::vector<std::vector<std::pair<Expv, Scalar>>> comp;

  Vec eval(const Vec& x) const;
  /** Single-output convenience (cod must be 1). */
  Scalar eval_scalar(const Vec& x) const;

  bool operator==(const PolyMap& o) const;
};

/** Capture fn (which must be polynomial, homogeneous of the stated degree)
 *  by evaluating it on a fresh generic vector and reading off monomials. */
PolyMap polymap_from_fn(const Ctx& ctx, std::size_t dom, std::size_t cod,
                        int degree,
                        const std::function<Vec(const Vec&)>& fn);

/** Same map with coefficients lifted into a tower ctx. */
PolyMap polymap_embed(const Ctx& target, const PolyMap& f);

/** Postcompose with a linear map: x -> m * f(x). */
PolyMap polymap_postcompose(const Mat& m, const PolyMap& f);

/** Scale every coefficient. */
PolyMap polymap_scale(const Scalar& s, const PolyMap& f);

/** n-th directional derivative: coefficient of t^n in f(x + t v). */
Vec dir_derivative(const PolyMap& f, unsigned n, const Vec& v, const Vec& x);

/** All t-coefficients of f(x + t v), degree 0..f.degree. */
std::vector<Vec> dir_expansion(const PolyMap& f, const Vec& v, const Vec& x);

}  // namespace alb

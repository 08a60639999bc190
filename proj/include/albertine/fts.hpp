#pragma once

#include "albertine/iso.hpp"

namespace alb {

/** Element of the rank-56 module R + J + J + R, coordinate order
 *  (alpha, x-block, x'-block, alpha'). */
struct FTVec {
  Scalar alpha;
  Vec x;
  Vec xp;
  Scalar alpha_prime;
};

/**
 * Freudenthal triple structure on R + J + J + R for a 27-dimensional J
 * whose trace form has unit determinant.  Carries the alternating form b,
 * the quartic q, and the 4-linear forms derived from q by polarization;
 * nothing is materialized as a dense tensor, every evaluation goes through
 * the closed-form building blocks.
 */
struct FTSystem {
  CubicJordan j;

  std::size_t dim() const { return 2 * j.dim + 2; }

  Scalar b(const FTVec& X, const FTVec& Y) const;
  Scalar q(const FTVec& X) const;

  /**
   * Full polarization L of q: the t1 t2 t3 t4 coefficient of
   * q(sum t_i X_i), assembled from cross/trace building blocks.
   * Symmetric; L(X,X,X,X) = 24 q(X).
   */
  Scalar quadlin(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                 const FTVec& X4) const;
  /** theta = quadlin / 2 (exact halving; throws when not divisible). */
  Scalar theta(const FTVec& X1, const FTVec& X2, const FTVec& X3,
               const FTVec& X4) const;
  /** psi = (theta + phi1 + phi2 + phi3) / 2. */
  Scalar psi(const FTVec& X1, const FTVec& X2, const FTVec& X3,
             const FTVec& X4) const;
  /** phi1 + phi2 + phi3, the pairwise b-products. */
  Scalar phi_sum(const FTVec& X1, const FTVec& X2, const FTVec& X3,
                 const FTVec& X4) const;
};

/** Requires dim 27 and unit det(T). */
FTSystem fts_of(const CubicJordan& j);

/** Flat 56-vector <-> structured element, in the fixed coordinate order. */
Vec ft_flat(const FTVec& X);
FTVec ft_unflat(const FTSystem& F, const Vec& v);
/** Generic element over a PolyExt tower, coordinates [offset, offset+56). */
FTVec ft_generic(const FTSystem& F, const Ctx& g, std::size_t offset);

/** Oracle for quadlin: literal t1 t2 t3 t4 coefficient extraction over a
 *  4-indeterminate extension. */
Scalar ft_quadlin_oracle(const FTSystem& F, const FTVec& X1, const FTVec& X2,
                         const FTVec& X3, const FTVec& X4);

/**
 * Integrality sweep over all unordered basis 4-tuples (Integers ctx only):
 * L is even, and theta + sum phi_i is even.  The building blocks
 * T(e_i x e_j, e_k x e_l) etc. are tabulated once.
 */
Report ft_divisibility(const FTSystem& F);

/** (alpha, phi x, phi^dagger x', alpha'); phi must carry multiplier 1. */
Mat ft_e6_embed(const FTSystem& F, const Isometry& phi);
/** (beta^-3 alpha, beta x, beta^-1 x', beta^3 alpha'); beta a unit. */
Mat ft_torus(const FTSystem& F, const Scalar& beta);
/** Unipotent shift by y through the x-block. */
Mat ft_trans_up(const FTSystem& F, const Vec& y);
/** The mirror shift through the x'-block. */
Mat ft_trans_down(const FTSystem& F, const Vec& y);
/** (alpha/mu, mu x, x', mu^2 alpha'); scales b by mu and q by mu^2. */
Mat ft_similarity(const FTSystem& F, const Scalar& mu);

std::string ft_to_json(const FTVec& X);
FTVec ft_from_json(const FTSystem& F, const std::string& text);

}  // namespace alb

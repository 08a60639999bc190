#pragma once

#include "albertine/her3.hpp"

namespace alb {

/** Matrix of y |-> U_x y. */
Mat u_matrix(const CubicJordan& j, const Vec& x);

/**
 * The isotope J^(u) as a full cubic structure on the same module:
 * unit u^{-1}, adjoint N(u) U_{u^{-1}} sharp, norm N(u) N.
 * Requires N(u) to be a unit.
 */
CubicJordan isotope(const CubicJordan& j, const Vec& u);

enum class MapKind { Isomorphism, Isotopy, Neither };

/**
 * Verdict on a linear map phi: J -> J'.
 *   Isomorphism: phi invertible, phi(1) = 1', N' phi = N generically.
 *   Isotopy:     phi invertible, N' phi = multiplier N with multiplier a
 *                unit; u = phi(1)^{-1} and phi is a verified isomorphism
 *                J -> (J')^(u).
 *   Neither:     everything else.
 */
struct MapClass {
  MapKind kind = MapKind::Neither;
  Scalar multiplier;
  Vec u;
  std::string detail;
};

MapClass classify_map(const Mat& phi, const CubicJordan& j,
                      const CubicJordan& jp);

/** phi^dagger = U_{phi(1)^{-1}} phi; requires phi(1) invertible. */
Mat dagger(const Mat& phi, const CubicJordan& j);

/** The norm similarity N(x) U_{x^{-1}}, with multiplier N(x). */
Isometry round_witness(const CubicJordan& j, const Vec& x);

/**
 * Over a field, Gamma = Id: returns a composite g of tau/permutation norm
 * isometries with g(u) diagonal and N(g(u)) = N(u).  j must be her3(layout).
 */
std::pair<Isometry, Vec> diagonalize(const HerLayout& layout,
                                     const CubicJordan& j, const Vec& u);

}  // namespace alb

#pragma once

#include <array>

#include "albertine/cns.hpp"
#include "albertine/comp.hpp"

namespace alb {

/**
 * Coordinate layout of Her3(C, Gamma): basis (eps1, eps2, eps3, then the
 * delta_1, delta_2, delta_3 blocks, each in the order of C's basis).
 */
struct HerLayout {
  CompAlg comp;
  std::array<Scalar, 3> gamma;

  std::size_t dim() const { return 3 + 3 * comp.rank; }
  /** 1-based diagonal slot. */
  std::size_t eps(int i) const { return i - 1; }
  /** 1-based block, coordinate k of C. */
  std::size_t delta(int i, std::size_t k) const {
    return 3 + (i - 1) * comp.rank + k;
  }

  Vec element(const std::array<Scalar, 3>& alphas,
              const std::array<Vec, 3>& cs) const;
  Scalar alpha(const Vec& x, int i) const { return x[eps(i)]; }
  Vec cblock(const Vec& x, int i) const;
  bool diag_gamma_id() const;
};

HerLayout her_layout(CompAlg comp, std::array<Scalar, 3> gamma);
/** Gamma = identity. */
HerLayout her_layout(CompAlg comp);

/** The cubic norm structure of Example-type hermitian 3x3 matrices over C
 *  with diagonal scaling Gamma (all gamma_i units). */
CubicJordan her3(const HerLayout& layout);

/** (Mat3(R), Id, classical adjoint, det) as a 9-dim structure, basis E_ij
 *  in row-major order. */
CubicJordan mat3_plus(const Ctx& ctx);

/** The coordinate shuffle Her3(R x R) -> Mat3(R)+ (projections of the
 *  off-diagonal pairs); unital and norm-preserving. */
Mat mat39_iso(const HerLayout& layout);

/** Linear map with N compose m = multiplier * N. */
struct Isometry {
  Mat m;
  Scalar multiplier;
  std::string provenance;
};

/** A |-> (I + q E_st) A (I + conj(q) E_ts); requires Gamma = Id, s != t. */
Isometry isom_tau(const HerLayout& layout, int s, int t, const Vec& q);
/** x |-> P x P^T for the permutation pi (1-based images); Gamma = Id. */
Isometry isom_perm(const HerLayout& layout, const std::array<int, 3>& pi);
/** eps1, eps2 scaled by alpha, eps3 by alpha^{-1}, delta3-block by alpha;
 *  multiplier alpha; any Gamma. */
Isometry isom_scale(const HerLayout& layout, const Scalar& alpha);
/** f after g; multipliers multiply. */
Isometry isom_compose(const Isometry& f, const Isometry& g);
/** N(m x) == multiplier * N(x) at a generic point. */
bool isom_check(const CubicJordan& j, const Isometry& iso);

/** Rescaling gamma_i by s^2 (unit s): returns the new layout and the
 *  norm-preserving coordinate map from the old algebra to the new one. */
std::pair<HerLayout, Mat> gamma_square_rescale(const HerLayout& layout, int i,
                                               const Scalar& s);
/** Rescaling all of Gamma by a unit lambda. */
std::pair<HerLayout, Mat> gamma_global_rescale(const HerLayout& layout,
                                               const Scalar& lambda);

/**
 * For split C of rank >= 2 and any unit Gamma: the matrix of a verified
 * isomorphism Her3(C) -> Her3(C, Gamma), built from the isotope C^(p,q)
 * with diagonal p, q.  Throws when the generic-point verification fails.
 */
Mat split_gamma_iso(const HerLayout& layout);

enum class IdealMode { outer, full };

/** Smallest submodule containing gens and closed under U_J I + {J J I}
 *  (mode full additionally closes under U_I J).  ctx must be a field or
 *  Modular. */
Span outer_ideal_closure(const CubicJordan& j, const std::vector<Vec>& gens,
                         IdealMode mode);

/** The span of (I cap R.1) J, for comparison against the closure. */
Span ideal_from_scalars(const CubicJordan& j, const Span& closure);

std::string her_elem_to_json(const HerLayout& layout, const Vec& x);
Vec her_elem_from_json(const HerLayout& layout, const std::string& text);

}  // namespace alb

#pragma once

#include "albertine/linalg.hpp"
#include "albertine/report.hpp"
#include "albertine/ring.hpp"

namespace alb {

enum class CompKind {
  rank1,
  split_etale,
  mat2,
  zorn,
  real_octonions,
  coxeter_order,
};

/**
 * Composition algebra as a structure-constant algebra with designated norm.
 * mul[i*rank+j] lists the coordinates of b_i b_j; the norm is kept as
 * quadratic-form coefficients q_ij (i <= j) of sum q_ij x_i x_j.
 */
struct CompAlg {
  Ctx ctx;
  std::size_t rank = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> mul;
  Vec unit;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> normq;

  /** Product of coordinate vectors (over any tower ctx). */
  Vec times(const Vec& x, const Vec& y) const;
  Scalar norm(const Vec& x) const;
  /** Bilinearization n(x,y) = n(x+y) - n(x) - n(y). */
  Scalar bil(const Vec& x, const Vec& y) const;
  Scalar trace(const Vec& x) const;
  Vec conj(const Vec& x) const;
  /** x^{-1} = conj(x)/n(x); requires n(x) a unit. */
  Vec inverse(const Vec& x) const;
  /** Bilinear Gram matrix over ctx. */
  Mat gram() const;
  /** Lift the whole structure into a tower ctx. */
  CompAlg extend(const Ctx& target) const;
};

CompAlg comp_construct(CompKind kind, const Ctx& ctx);

/** The twisted product x . y := (x p)(q y) on the same module. */
CompAlg comp_isotope(const CompAlg& c, const Vec& p, const Vec& q);

/** Generic-point verification of the composition-algebra axioms. */
Report comp_verify(const CompAlg& c);

/** Orthonormal-frame data for the Coxeter order: basis rows (doubled
 *  coordinates in the octave frame, from the spanning-set HNF). */
struct CoxeterFrame {
  IntMatrix doubled_basis;  // 8x8, rows are 2*b_i in the e-frame
  /** Doubled orthonormal coordinates -> order coordinates; fails when the
   *  vector is not in the lattice. */
  std::vector<Int> to_order(const std::vector<Int>& doubled, bool* ok) const;
};
const CoxeterFrame& coxeter_frame();

/** Coordinates (in the order basis) of beta = (-1+e1+...+e7)/2. */
Vec coxeter_beta(const CompAlg& coxeter);

std::string comp_to_json(const CompAlg& c);
CompAlg comp_from_json(const Ctx& ctx, const std::string& text);

}  // namespace alb

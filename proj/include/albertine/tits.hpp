#pragma once

#include "albertine/cns.hpp"

namespace alb {

enum class AssocKind { split_etale3, gf_cubic, mat3 };

/**
 * Degree-3 separable associative algebra with its generic norm and trace:
 * F x F x F componentwise, GF(8) over GF(2) (basis 1, w, w^2 with
 * w^3 = w + 1), or Mat3 with N = det.
 */
struct CubicAssoc {
  Ctx ctx;
  AssocKind kind = AssocKind::split_etale3;
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> mul;
  Vec unit;
  PolyMap norm;  // degree 3
  Mat tmat;
  Vec trvec;
  PolyMap smap;  // quadratic trace, one output

  Vec times(const Vec& x, const Vec& y) const;
  Scalar norm_of(const Vec& x) const;
  Scalar trace(const Vec& x) const;
  Scalar t_form(const Vec& x, const Vec& y) const;
  Scalar s_of(const Vec& x) const;
  /** Cayley-Hamilton adjoint x^2 - Tr(x) x + S(x) 1. */
  Vec sharp(const Vec& x) const;
};

CubicAssoc assoc_construct(AssocKind kind, const Ctx& ctx);

/**
 * First Tits construction J(A, mu) on A x A x A: base point (1,0,0),
 * adjoint (x0# - x1 x2, mu^{-1} x2# - x0 x1, mu x1# - x2 x0), norm
 * N(x0) + mu N(x1) + mu^{-1} N(x2) - Tr(x0 x1 x2).  mu must be a unit.
 */
CubicJordan tits1(const CubicAssoc& a, const Scalar& mu);

/** Smallest subspace containing gens and 1 that is closed under U (and so
 *  under braces); ctx must be a field.  Stops early at full dimension. */
Span subalgebra_generated(const CubicJordan& j, const std::vector<Vec>& gens);

struct PairCensus {
  std::size_t max_pair_dim = 0;
  std::vector<Vec> witness;  // a generating 3-subset
};

/** Exhaustive closure of all 2-subsets of Mat2(GF(2))+ (never generating),
 *  plus a found generating 3-subset. */
PairCensus generator_census_mat2();

/** A pair generating Mat3(F)+ under U-closure: a companion-type matrix plus
 *  a searched partner.  ctx must be a field. */
std::vector<Vec> mat3_generating_pair(const Ctx& ctx);

}  // namespace alb

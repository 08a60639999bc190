#pragma once

#include "albertine/iso.hpp"

namespace alb {

/** Positive-definite integral quadratic lattice (Gram matrix). */
struct IntLattice {
  IntMatrix gram;
  std::size_t dim = 0;
  std::string provenance;
};

/**
 * The two rank-27 lattice models that the idempotent census compares: the
 * trace form of the hermitian algebra over the octonion order, and the
 * same module with the trace form twisted through U_v.
 */
struct CensusData {
  CompAlg oct;       // the octonion maximal order over the integers
  HerLayout layout;  // hermitian 3x3 layout over oct
  CubicJordan j;
  Vec beta;  // in oct coordinates
  Vec v;     // in j coordinates: diagonal (2,2,2), all blocks beta
  IntLattice her;
  IntLattice lambda;
  Report certificates;
};

/** Builds beta, v and both Gram matrices; every certificate failure is a
 *  fatal error (it would mean the structure tables are corrupt). */
CensusData build_census_lattices();

/**
 * All integer vectors with x^T G x = value, by exact rational
 * Fincke-Pohst; both signs listed, deterministic order.  Rejects
 * indefinite input.
 */
std::vector<std::vector<Int>> enumerate_norm(const IntLattice& L,
                                             const Int& value);

enum class CensusWhich { her, lambda };

struct CensusResult {
  std::size_t count = 0;
  std::vector<Vec> witnesses;  // j-coordinates
  Report report;
};

/** Counts x with x# = 0 and trace 1 in the chosen model. */
CensusResult idempotent_census(const CensusData& C, CensusWhich which);

/** Witness list as a JSON array of coordinate arrays. */
std::string census_witnesses_json(const CensusResult& r);

}  // namespace alb

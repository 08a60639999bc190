#pragma once

#include "albertine/her3.hpp"

namespace alb {

/** Substructure on a subset of basis indices; products, the unit and the
 *  norm must not leave the subset's span. */
CompAlg comp_restrict(const CompAlg& c, const std::vector<std::size_t>& keep);

/** The definite composition algebra of rank 2^r (r = 0..3) over ctx,
 *  cut out of the octave multiplication table. */
CompAlg definite_comp(const Ctx& ctx, int r);

struct SigEntry {
  std::string name;
  int computed = 0;
  int expected = 0;
};

/** Trace-form signatures of the eleven rational models: the definite
 *  hermitian algebras with diagonal (1,1,1) and (1,1,-1), and the three
 *  split models of ranks 9, 15, 27. */
std::vector<SigEntry> signature_table();

/** Seeded search for a 3-element set whose U-closure is all of j; ctx must
 *  be a field.  Throws when no triple is found within the attempt budget. */
std::vector<Vec> generating_triple(const CubicJordan& j, unsigned seed);

}  // namespace alb

#pragma once

#include <string>
#include <vector>

#include "scop/core.hpp"
#include "scop/poset.hpp"

namespace scop::fixtures {

// A meet or join the fixture commits to: result is the infimum (or
// supremum) of left and right in the context order.
struct BoundClaim {
  std::string left, right, result;
};

struct GardenFixture {
  Scop scop;
  std::vector<BoundClaim> meet_claims;
  std::vector<BoundClaim> join_claims;
};

// A small hand-built 'pet' system around garden scenarios. Context ids:
//   e3   the pet runs through the garden
//   e7   ... trying to catch a cat            (= e9 and e3)
//   e8   ... trying to catch a cat while barking loudly
//   e9   the pet tries to catch a cat
//   e10  ... runs through the garden barking loudly to be fed
//   e11  e7 or e10 (the superposition context)
//   e12  the pet barks loudly to be fed
//   e3'  the pet does not run through the garden
// Its eigenstate structure realizes the quantum signature: the union of
// the eigenstate sets of e7 and e10 is strictly contained in the
// eigenstate set of e11, witnessed by the disjunction state p11.
GardenFixture garden();

// A system whose interest is on the property side: feathered (a3), able
// to swim (a7), their conjunction (a15) and the complements (a3', a7',
// a15'). The actuality sets satisfy a15 = a3 and a7, and the actuality
// set of a15' strictly exceeds the union for a3' and a7'.
Scop feathered_swimmer();

// The garden contexts as symbolic lattice elements, with e7 = e3 ^ e9 and
// e11 = (e3 ^ e9) v e10 and the side relations of the narrative
// (e8 below e7, e10 below e3 and e12, e11 below e3).
lattice::OrthoPoset garden_term_poset();

}  // namespace scop::fixtures

#pragma once

#include <vector>

#include "unicusp/semigroup.hpp"

namespace unicusp {

// K = { a : c - 1 - a is not a member }.  Every integer >= c belongs
// to K and no negative integer does, so the sorted slice on [0, c)
// determines the set.
struct KunzData {
  NumericalSemigroup semigroup;
  std::vector<long long> k_below_c;
};

KunzData kunz_set(const NumericalSemigroup& s);

// Additive decomposition n = k1 + k2 with both parts in K and below
// the conductor; k1 is minimal among witnesses.
struct NoetherWitness {
  long long n = 0;
  bool found = false;
  long long k1 = 0;
  long long k2 = 0;
};

struct NoetherReport {
  NumericalSemigroup semigroup;
  long long lo = 0;  // c
  long long hi = 0;  // 2c - 3; range empty when hi < lo
  std::vector<NoetherWitness> entries;
  long long failures = 0;
};

// Scans every n in [c, 2c-3].  Failures are reported in the result,
// never thrown.
NoetherReport max_noether_check(const NumericalSemigroup& s);

// Variable/equation counts for the degree-k pencil system at a point
// of multiplicity m on a genus-g curve.  The solvability flag
// n_v > n_e is heuristic only.
struct CoveringCounts {
  long long n_v = 0;
  long long n_e = 0;
  bool heuristic_solvable = false;
};

CoveringCounts covering_counts(long long genus, long long multiplicity, long long k);

// ceil((g+1)/2), the conjectured covering-gonality bound.
long long covering_bound(long long genus);

}  // namespace unicusp

#pragma once

#include <map>
#include <set>
#include <string>

#include "unicusp/semigroup.hpp"

namespace unicusp::render {

struct BettiMark {
  long long phi = 0;
  long long rho = 0;
};

// ASCII version of the genus x genus Dyck diagram.  Columns follow the
// members of [1, 2g]; below-path cells show '#' in ramification
// columns and '.' elsewhere, above-path cells show '*' in marked Betti
// columns.  Betti columns get phi/rho annotations beneath the grid.
std::string dyck_diagram(const NumericalSemigroup& s,
                         const std::set<long long>& profile,
                         const std::map<long long, BettiMark>& betti);

std::string generator_list(const NumericalSemigroup& s);

}  // namespace unicusp::render

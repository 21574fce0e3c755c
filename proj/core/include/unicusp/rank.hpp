#pragma once

#include <vector>

namespace unicusp {

// Exact rank of an integer matrix via fraction-free (Bareiss)
// elimination.  No floating point anywhere; intermediate entries are
// minors of the input.  Throws std::overflow_error if a minor leaves
// the 64-bit range and std::invalid_argument on ragged input.
long long integer_rank(std::vector<std::vector<long long>> matrix);

}  // namespace unicusp

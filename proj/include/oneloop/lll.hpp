#pragma once

#include "oneloop/realnum.hpp"

#include <vector>

namespace oneloop {

using RealVector = std::vector<Real>;

// LLL reduction (delta in (1/4, 1)) of the rows of `basis`, in place, at the current working
// precision.  Rows must be linearly independent.  Returns the number of swaps performed.
long lll_reduce(std::vector<RealVector>& basis, double delta = 0.99);

}  // namespace oneloop

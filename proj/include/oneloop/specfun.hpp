#pragma once

#include "oneloop/realnum.hpp"

namespace oneloop {

// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

// Principal-branch dilogarithm, cut on [1, inf) (values on the cut are the limit from below).
Complex li2(const Complex& z, unsigned digits);
// Im Li2(e^{i theta}) = Cl2(theta), at the current working precision.
Real im_li2_unit(const Real& theta);
Real catalan_constant(unsigned digits);

}  // namespace oneloop

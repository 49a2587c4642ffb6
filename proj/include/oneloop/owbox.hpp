#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/linalg.hpp"
#include "oneloop/realnum.hpp"

#include <array>
#include <string>
#include <vector>

namespace oneloop {

using RealMatrix = std::vector<std::vector<Real>>;

RealMatrix to_real_matrix(const QMatrix& m);
Real real_det(RealMatrix m);
RealMatrix real_inverse(const RealMatrix& m);  // throws SingularMatrixError

struct OWTerm {
    std::array<int, 3> perm{};       // (r, s, t), 1-based
    std::array<Real, 4> nu;          // nu^0..nu^3
    std::array<Real, 7> clausen;     // Cl2(2nu0), Cl2(2nu0 + 2nu^l), Cl2(2nu0 - 2nu^l) for l = 1..3
    std::array<int, 7> weight{};     // 2, then (-1)^l twice per l
    Real sum;                        // weighted sum of the seven
};

struct OWResult {
    Real value;
    Real prefactor;  // 1/(16 sqrt|det C|)
    std::vector<OWTerm> terms;
    int evaluations = 0;  // number of Im Li2 evaluations (42)
};

// The 42-dilogarithm expression for the box at a point, evaluated from C and U = C^{-1}.
// Throws std::domain_error naming the nu whose radicand is negative.
OWResult ow_box_value(const RealMatrix& c);
OWResult ow_box_value(const FeynmanGraph& g, const KinematicPoint& p, unsigned digits);

// The box quadric matrix at a point given by the free s-values (upper triangle of the 3x3 Gram
// of q1..q3, row-major) and the four squared masses.
RealMatrix box_matrix(const std::array<Real, 6>& s, const std::array<Real, 4>& msq);

}  // namespace oneloop

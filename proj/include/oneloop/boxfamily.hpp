#pragma once

#include "oneloop/owbox.hpp"
#include "oneloop/relations.hpp"

#include <random>
#include <string>
#include <vector>

namespace oneloop {

// Parameters of the box family: the six free s-values (upper triangle of the Gram of q1..q3)
// followed by the four squared masses.
constexpr int kBoxParameters = 10;

// A generic Euclidean point: Gram = L L^T with L lower triangular (diag in [0.5, 1.5], off-diagonal
// in [-0.3, 0.3]), masses in [0.5, 2].  Points where some OW radicand is negative are redrawn.
RealVector sample_box_parameters(std::mt19937_64& rng);

struct BoxFamilies {
    // columns 0..5: the six pairs (j,k) = (1,2),(1,3),(1,4),(2,3),(2,4),(3,4);
    // columns 6..47: the 42 phases 2nu^0, 2nu^0 +- 2nu^l in the order of ow_box_value.
    LogFamily motivic;  // log|[p0p1|u0u1]_{jk}| and log(4 sin^2 phi)
    LogFamily derham;   // arg f_{jk} and 2 phi
    // Coaction of the 42 dilogs (as Li2 -> -(1/2) log^m(4 sin^2) (x) 2phi per unit weight),
    // in units of 1/(16 sqrt|det C|).
    std::vector<TensorTerm> terms;
};

BoxFamilies box_families();

struct BoxReduction {
    RelationSet motivic, derham;
    ReducedTensor tensor;
    int survivors = 0;
    bool diagonal = false;       // every survivor pairs column jk with column jk, jk < 6
    Rational survivor_coefficient;  // common coefficient when all survivors agree, else 0
    std::string render() const;
};

BoxReduction reduce_box_coaction(const RelationOptions& opt = {});

}  // namespace oneloop

#pragma once

#include "oneloop/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace oneloop {

struct Check {
    std::string name;
    bool passed = false;
    std::string measured;  // residual or verdict, human readable
    std::string detail;
};

// Random Euclidean point with exact rational data: Gram of q_1..q_{F-1} = L L^T with L lower
// triangular (entries multiples of 1/20), squared masses in [1/2, 2].  Redraws until generic.
KinematicPoint random_euclidean_point(const FeynmanGraph& g, std::mt19937_64& rng);

// Copy of p with the kinematic symbol `symbol` (s[i,j] or m^2) shifted by eps.
KinematicPoint perturb(const FeynmanGraph& g, const KinematicPoint& p, const std::string& symbol, const Rational& eps);

// (1/(2 sqrt|det D_jk|)) P_jk - 1/(16 sqrt|det C|) for all six pairs: symbolically, then at pts.
Check check_prefactor_identity(const FeynmanGraph& box, const std::vector<KinematicPoint>& pts, double tol = 1e-12);

// Decomposition residual, exterior-derivative identity, and the homogeneous relation for
// h = 1/sqrt|det C| (literal sign and sign-resolved), by central differences of step `step`.
std::vector<Check> check_picard_fuchs(const FeynmanGraph& g, const std::string& param, const std::vector<KinematicPoint>& pts,
                                      double tol = 1e-9, const Rational& step = Rational(1, 1000000));

// a_jk from the beta face restriction against (sqrt|det D_jk|/(4 sqrt|det C|)) (1/f) df/dparam:
// the literal comparison and the one with the measured constant ratio divided out.
std::vector<Check> check_ajk(const FeynmanGraph& box, const std::string& param, const std::vector<KinematicPoint>& pts,
                             double tol = 1e-9);

// Every vanishing-mass triangle configuration and every admissible chart, plus the printed chart.
std::vector<Check> check_blowups();

}  // namespace oneloop

#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/symanzik.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oneloop {

enum class QuadMethod { Adaptive, MonteCarlo };
std::string to_string(QuadMethod m);

struct QuadratureOptions {
    QuadMethod method = QuadMethod::Adaptive;
    long budget = 5'000'000;  // function evaluations (adaptive) or samples (monte-carlo)
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::uint64_t seed = 1;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    QuadMethod method = QuadMethod::Adaptive;
    long evaluations = 0;
    long subdivisions = 0;
    std::uint64_t seed = 0;
    bool converged = false;
};

// Counter-based generator: value depends only on (seed, counter).
std::uint64_t splitmix64(std::uint64_t x);
double uniform_double(std::uint64_t seed, std::uint64_t counter);

// Integral over the unit cube [0,1]^dim.
QuadratureResult integrate_cube(int dim, const std::function<double(const double*)>& f, const QuadratureOptions& opt);

// Integral of F(x) over {x_i >= 0, sum x_i = 1} in m projective coordinates, with the
// measure dx_0..dx_{m-2}.  F must be homogeneous of degree -m for this to equal the
// projective integral of F * Omega.
QuadratureResult integrate_simplex(int m, const std::function<double(const double*)>& f, const QuadratureOptions& opt);

// Fast double evaluation of a KPoly with rational coefficients.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const KPoly& p);
    double operator()(const double* x) const;
    int arity() const { return arity_; }

private:
    int arity_ = 0;
    std::vector<double> coeff_;
    std::vector<std::vector<int>> exps_;
};

// Projective integral of num * Psi^{a} / Xi^{b} over the simplex, kinematics pinned.
QuadratureResult parametric_quadrature(const ParametricIntegrand& ig, const KinematicPoint& p,
                                       const QuadratureOptions& opt = {});
QuadratureResult integrate_form(const KPoly& numerator, const KPoly& xi, int xi_power, const QuadratureOptions& opt = {});

}  // namespace oneloop

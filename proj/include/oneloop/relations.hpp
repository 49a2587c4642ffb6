#pragma once

#include "oneloop/lll.hpp"
#include "oneloop/poly.hpp"
#include "oneloop/realnum.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oneloop {

struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RelationSearch {
    std::vector<std::vector<long>> relations;  // all short lattice vectors with vanishing tail
    Real worst_relation_residual;              // largest |sum v_i x_i| among relations
    Real best_nonrelation_residual;            // smallest among the remaining reduced vectors
    long swaps = 0;
};

// Integer relations among the columns of `rows` (each row one evaluation of the same n
// quantities), by LLL on the stacked embedding e_i (+) W x_i.  A reduced vector counts as a
// relation when its residual is below 10^-tol_digits and its coefficients are within max_coeff.
RelationSearch find_relations(const std::vector<RealVector>& rows, int tol_digits, long max_coeff);

// Single-vector form: a relation for `values`, or nullopt.  Uses 10^-(digits/2) as tolerance.
std::optional<std::vector<long>> integer_relations(const RealVector& values, int digits, long max_coeff);

// A family of logarithms sampled at generic points.  evaluate returns all columns at a
// parameter vector; sample draws a generic parameter vector.
struct LogFamily {
    std::string name;
    std::vector<std::string> names;
    int parameter_dim = 0;
    std::function<RealVector(const RealVector&)> evaluate;
    std::function<RealVector(std::mt19937_64&)> sample;
    // Columns listed first are kept in the basis whenever possible.
    std::vector<int> preferred;
};

struct RelationOptions {
    int digits = 60;          // accuracy target of the derivative rows
    long max_coeff = 10000;
    int heldout = 10;
    int extra_rows = 5;       // rows = columns + extra_rows
    std::uint64_t seed = 20240601;
};

struct RelationSet {
    std::vector<std::string> names;
    std::vector<std::vector<long>> relations;  // integer relation lattice basis (LLL output)
    std::vector<int> basis;                    // retained columns
    // dependent column -> (basis column, rational coefficient); column = sum coeff * basis (mod constants)
    std::map<int, std::vector<std::pair<int, Rational>>> expressions;
    std::vector<Real> heldout_residuals;       // per relation, max over held-out points
    Real heldout_tolerance;
    bool verified = false;
    Real worst_relation_residual, best_nonrelation_residual;
    int rows = 0;
    long swaps = 0;
    std::string render() const;
};

// Directional-derivative rows: relations are found modulo additive constants, which is what the
// de Rham angle columns need (they jump by multiples of pi between sample points).
RelationSet log_basis(const LogFamily& fam, const RelationOptions& opt = {});

// Row-style Hermite normal form of an integer matrix (zero rows dropped).  Two relation sets
// generate the same lattice iff their HNFs agree.
std::vector<std::vector<Integer>> hermite_normal_form(const std::vector<std::vector<long>>& rows);

struct TensorTerm {
    int motivic = 0;  // column in the motivic family
    int derham = 0;   // column in the de Rham family
    Rational coefficient;
};

struct ReducedTensor {
    std::map<std::pair<int, int>, Rational> terms;  // (motivic basis column, de Rham basis column)
    std::string render(const std::vector<std::string>& mot_names, const std::vector<std::string>& dr_names) const;
};

ReducedTensor coaction_reduce(const std::vector<TensorTerm>& terms, const RelationSet& motivic, const RelationSet& derham);

}  // namespace oneloop

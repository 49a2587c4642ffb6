#pragma once

#include "oneloop/poly.hpp"

#include <optional>
#include <vector>

namespace oneloop {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using PolyMatrix = std::vector<std::vector<Poly>>;

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QMatrix identity_matrix(int n);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, const QVector& v);
QMatrix transpose(const QMatrix& a);
QMatrix submatrix(const QMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

// Fraction-free (Bareiss) determinant.
Rational det_bareiss(const QMatrix& m);

struct DetInverse {
    Rational det;
    QMatrix inverse;
};
DetInverse det_and_inverse(const QMatrix& m);  // throws SingularMatrixError

struct LinearSolution {
    bool consistent = false;
    QVector particular;
    std::vector<QVector> nullspace;
    // When inconsistent: row combination y with y^T M = 0 and y^T rhs != 0.
    QVector certificate;
    int rank = 0;
};

// Exact solve of M x = rhs.  pivot_order lists the preferred column order
// for pivots; free variables are set to zero in the particular solution.
LinearSolution linear_solve(const QMatrix& m, const QVector& rhs, const std::vector<int>& pivot_order = {});
std::vector<LinearSolution> linear_solve(const QMatrix& m, const std::vector<QVector>& rhs,
                                         const std::vector<int>& pivot_order = {});

// Symmetric matrix of a homogeneous quadratic, entries polynomial in kinematic symbols.
struct QuadricForm {
    int dim = 0;
    PolyMatrix entries;

    QMatrix specialize(const std::map<int, Rational>& values) const;
    KPoly to_kpoly() const;  // alpha C alpha^T
};

QuadricForm quadratic_form_matrix(const KPoly& q);

// Symbolic determinant and cofactor by Laplace expansion (small sizes only).
Poly det_laplace(const PolyMatrix& m);
Poly cofactor(const PolyMatrix& m, int i, int j);

}  // namespace oneloop

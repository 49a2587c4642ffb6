#include "oneloop/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace oneloop {

QMatrix identity_matrix(int n) {
    QMatrix m(n, QVector(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty()) return {};
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    if (a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
    QMatrix r(n, QVector(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < p; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
    QVector r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix r(a[0].size(), QVector(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

QMatrix submatrix(const QMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    QMatrix r(rows.size(), QVector(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r[i][j] = a.at(rows[i]).at(cols[j]);
    return r;
}

Rational det_bareiss(const QMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
    // Clear denominators so that Bareiss runs over the integers.
    mpz_class scale = 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class total_scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den_mpz_t());
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
        total_scale *= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1] * sign, total_scale);
    d.canonicalize();
    return d;
}

DetInverse det_and_inverse(const QMatrix& m) {
    int n = static_cast<int>(m.size());
    DetInverse out;
    out.det = det_bareiss(m);
    if (out.det == 0) throw SingularMatrixError("singular matrix (determinant 0)");
    QMatrix a = m;
    QMatrix inv = identity_matrix(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw SingularMatrixError("singular matrix during elimination");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        Rational piv = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    out.inverse = std::move(inv);
    return out;
}

std::vector<LinearSolution> linear_solve(const QMatrix& m, const std::vector<QVector>& rhs,
                                         const std::vector<int>& pivot_order) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("linear_solve: ragged matrix");
    for (const auto& b : rhs)
        if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("linear_solve: rhs size mismatch");

    std::vector<int> order = pivot_order;
    if (order.empty()) {
        order.resize(cols);
        std::iota(order.begin(), order.end(), 0);
    } else {
        std::vector<int> seen(cols, 0);
        for (int c : order) {
            if (c < 0 || c >= cols || seen[c]) throw std::invalid_argument("linear_solve: bad pivot order");
            seen[c] = 1;
        }
        for (int c = 0; c < cols; ++c)
            if (!seen[c]) order.push_back(c);
    }

    // Augment with rhs columns and an identity block tracking row operations.
    int nb = static_cast<int>(rhs.size());
    QMatrix a(rows, QVector(cols + nb + rows, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
        for (int k = 0; k < nb; ++k) a[i][cols + k] = rhs[k][i];
        a[i][cols + nb + i] = 1;
    }
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c : order) {
        if (r == rows) break;
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rational piv = a[r][c];
        for (auto& x : a[r]) x /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    int rank = r;
    std::vector<int> is_pivot(cols, -1);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_cols[i]] = i;

    std::vector<QVector> null_basis;
    for (int f : order) {
        if (is_pivot[f] >= 0) continue;
        QVector v(cols, 0);
        v[f] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_cols[i]] = -a[i][f];
        null_basis.push_back(v);
    }

    std::vector<LinearSolution> out(nb);
    for (int k = 0; k < nb; ++k) {
        auto& s = out[k];
        s.rank = rank;
        s.consistent = true;
        for (int i = rank; i < rows; ++i) {
            if (a[i][cols + k] != 0) {
                s.consistent = false;
                s.certificate.assign(a[i].begin() + cols + nb, a[i].end());
                break;
            }
        }
        if (!s.consistent) continue;
        s.particular.assign(cols, 0);
        for (int i = 0; i < rank; ++i) s.particular[pivot_cols[i]] = a[i][cols + k];
        s.nullspace = null_basis;
    }
    return out;
}

LinearSolution linear_solve(const QMatrix& m, const QVector& rhs, const std::vector<int>& pivot_order) {
    return linear_solve(m, std::vector<QVector>{rhs}, pivot_order)[0];
}

QMatrix QuadricForm::specialize(const std::map<int, Rational>& values) const {
    QMatrix r(dim, QVector(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r[i][j] = entries[i][j].evaluate(values);
    return r;
}

KPoly QuadricForm::to_kpoly() const {
    KPoly q(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            KPoly::Exponents e(dim, 0);
            e[i] += 1;
            e[j] += 1;
            q.add_term(e, entries[i][j]);
        }
    return q;
}

QuadricForm quadratic_form_matrix(const KPoly& q) {
    int d = 0;
    if (!q.is_homogeneous(&d) || (d != 2 && !q.is_zero()))
        throw std::invalid_argument("quadratic_form_matrix: input is not a homogeneous quadratic");
    QuadricForm f;
    f.dim = q.arity();
    f.entries.assign(f.dim, std::vector<Poly>(f.dim));
    for (const auto& [e, c] : q.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < f.dim; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            f.entries[idx[0]][idx[0]] += c;
        } else {
            Poly h = c * Rational(1, 2);
            f.entries[idx[0]][idx[1]] += h;
            f.entries[idx[1]][idx[0]] += h;
        }
    }
    return f;
}

namespace {
Poly laplace(const PolyMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
    size_t n = rows.size();
    if (n == 0) return Poly(1);
    if (n == 1) return m[rows[0]][cols[0]];
    Poly sum;
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        const Poly& a = m[r0][cols[j]];
        if (a.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Poly minor = laplace(m, sub_rows, sub_cols);
        if (j % 2) sum -= a * minor;
        else sum += a * minor;
    }
    return sum;
}
}  // namespace

Poly det_laplace(const PolyMatrix& m) {
    std::vector<int> rows(m.size()), cols(m.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return laplace(m, rows, cols);
}

Poly cofactor(const PolyMatrix& m, int i, int j) {
    std::vector<int> rows, cols;
    for (int k = 0; k < static_cast<int>(m.size()); ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
    }
    Poly minor = laplace(m, rows, cols);
    return ((i + j) % 2) ? -minor : minor;
}

}  // namespace oneloop

#include "oneloop/owbox.hpp"

#include "oneloop/specfun.hpp"
#include "oneloop/symanzik.hpp"

#include <algorithm>

namespace oneloop {

namespace bmp = boost::multiprecision;

RealMatrix to_real_matrix(const QMatrix& m) {
    RealMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) out[i].push_back(to_real(x));
    return out;
}

Real real_det(RealMatrix m) {
    int n = static_cast<int>(m.size());
    Real det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (bmp::abs(m[r][c]) > bmp::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0) return Real(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            Real f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

RealMatrix real_inverse(const RealMatrix& a) {
    int n = static_cast<int>(a.size());
    RealMatrix m = a, inv(n, std::vector<Real>(n, Real(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (bmp::abs(m[r][c]) > bmp::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0) throw SingularMatrixError("singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Real d = m[c][c];
        for (int k = 0; k < n; ++k) {
            m[c][k] /= d;
            inv[c][k] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Real f = m[r][c];
            for (int k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

RealMatrix box_matrix(const std::array<Real, 6>& s, const std::array<Real, 4>& m) {
    // Gram of q1..q3: [[s0 s1 s2], [s1 s3 s4], [s2 s4 s5]]
    Real S[3][3] = {{s[0], s[1], s[2]}, {s[1], s[3], s[4]}, {s[2], s[4], s[5]}};
    auto sq = [&](std::initializer_list<int> legs) {
        Real v = 0;
        for (int i : legs)
            for (int j : legs) v += S[i][j];
        return v;
    };
    // edges e_i = (v_i, v_{i+1}); the alpha_i alpha_j coefficient is the square of the momenta
    // entering between the two edges
    RealMatrix c(4, std::vector<Real>(4, Real(0)));
    for (int i = 0; i < 4; ++i) c[i][i] = m[i];
    auto set = [&](int i, int j, const Real& v) { c[i][j] = c[j][i] = (v + m[i] + m[j]) / 2; };
    set(0, 3, sq({0}));
    set(0, 1, sq({1}));
    set(1, 2, sq({2}));
    set(2, 3, sq({0, 1, 2}));
    set(0, 2, sq({1, 2}));
    set(1, 3, sq({0, 1}));
    return c;
}

OWResult ow_box_value(const RealMatrix& c) {
    if (c.size() != 4) throw std::invalid_argument("ow_box_value expects a 4x4 matrix");
    Real detc = real_det(c);
    if (detc == 0) throw SingularMatrixError("det C = 0");
    RealMatrix u = real_inverse(c);
    Real sdu = bmp::sqrt(bmp::abs(real_det(u)));
    OWResult out;
    out.prefactor = Real(1) / (16 * bmp::sqrt(bmp::abs(detc)));
    out.value = 0;
    auto need = [](const Real& x, const std::string& what) -> Real {
        if (x < 0) throw std::domain_error("negative radicand in " + what);
        return bmp::sqrt(x);
    };
    std::array<int, 3> perm{0, 1, 2};
    do {
        int r = perm[0], s = perm[1], t = perm[2];
        std::string tag = "(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
        Real den = u[r][s] * u[r][3] - u[r][r] * u[s][3];
        if (den == 0) throw std::domain_error("vanishing denominator in nu^0" + tag);
        OWTerm term;
        term.perm = {r + 1, s + 1, t + 1};
        term.nu[0] = bmp::atan(c[t][3] * u[r][3] * sdu / den);
        Real r1 = need(1 - c[3][3] * u[3][3], "nu^1" + tag);
        term.nu[1] = bmp::atan(c[t][3] * u[r][3] * sdu / (den * r1));
        Real r2 = need(u[r][r] * u[s][s] - u[r][s] * u[r][s], "nu^2" + tag);
        term.nu[2] = bmp::atan(u[r][3] * r2 / den);
        Real r3 = need(u[r][r] * u[3][3] - u[r][3] * u[r][3], "nu^3" + tag);
        if (r3 == 0) throw std::domain_error("vanishing denominator in nu^3" + tag);
        term.nu[3] = bmp::atan(u[r][3] / r3);
        term.clausen[0] = im_li2_unit(2 * term.nu[0]);
        term.weight[0] = 2;
        for (int l = 1; l <= 3; ++l) {
            int sg = (l % 2) ? -1 : 1;
            term.clausen[2 * l - 1] = im_li2_unit(2 * term.nu[0] + 2 * term.nu[l]);
            term.clausen[2 * l] = im_li2_unit(2 * term.nu[0] - 2 * term.nu[l]);
            term.weight[2 * l - 1] = sg;
            term.weight[2 * l] = sg;
        }
        term.sum = 0;
        for (int i = 0; i < 7; ++i) term.sum += term.weight[i] * term.clausen[i];
        out.evaluations += 7;
        out.value += term.sum;
        out.terms.push_back(term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.value *= out.prefactor;
    return out;
}

OWResult ow_box_value(const FeynmanGraph& g, const KinematicPoint& p, unsigned digits) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 4) throw std::invalid_argument("ow_box_value expects a box");
    PrecisionGuard guard(digits);
    auto vals = symbol_values(g, p);
    QMatrix c = quadratic_form_matrix(symanzik(g).xi).specialize(vals);
    return ow_box_value(to_real_matrix(c));
}

}  // namespace oneloop

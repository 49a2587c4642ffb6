#include "oneloop/lll.hpp"

#include <stdexcept>

namespace oneloop {

namespace {

Real dot(const RealVector& a, const RealVector& b) {
    Real s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

// Schnorr-Euchner variant: the Gram-Schmidt row of b_k is recomputed from dot products every time
// k is visited, so rounding errors do not pile up across swaps.
long lll_reduce(std::vector<RealVector>& b, double delta) {
    int n = static_cast<int>(b.size());
    if (n <= 1) return 0;
    std::vector<RealVector> mu(n, RealVector(n, Real(0))), r(n, RealVector(n, Real(0)));
    RealVector B(n);
    auto gso_row = [&](int k) {
        for (int j = 0; j < k; ++j) {
            Real v = dot(b[k], b[j]);
            for (int i = 0; i < j; ++i) v -= mu[j][i] * r[k][i];
            r[k][j] = v;
            mu[k][j] = v / B[j];
        }
        Real v = dot(b[k], b[k]);
        for (int j = 0; j < k; ++j) v -= mu[k][j] * r[k][j];
        if (v <= 0) throw std::invalid_argument("lll_reduce: dependent basis vectors");
        B[k] = v;
    };
    gso_row(0);
    long swaps = 0;
    int k = 1;
    Real half("0.51");
    while (k < n) {
        gso_row(k);
        for (int round = 0; round < 64; ++round) {
            bool changed = false;
            for (int l = k - 1; l >= 0; --l) {
                Real q = boost::multiprecision::round(mu[k][l]);
                if (q == 0) continue;
                for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
                for (int j = 0; j < l; ++j) mu[k][j] -= q * mu[l][j];
                mu[k][l] -= q;
                changed = true;
            }
            if (!changed) break;
            gso_row(k);
            bool ok = true;
            for (int l = 0; l < k; ++l)
                if (boost::multiprecision::abs(mu[k][l]) > half) ok = false;
            if (ok) break;
        }
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            ++swaps;
            if (k > 1) {
                --k;
            } else {
                gso_row(0);
            }
        } else {
            ++k;
        }
    }
    return swaps;
}

}  // namespace oneloop

#include "oneloop/specfun.hpp"

#include <mutex>
#include <vector>

namespace oneloop {

namespace {
std::mutex bern_mu;
std::vector<Rational> bern_cache = {Rational(1)};
}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    std::lock_guard<std::mutex> lock(bern_mu);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (static_cast<int>(bern_cache.size()) <= n) {
        int m = static_cast<int>(bern_cache.size());
        Rational s = 0;
        mpz_class binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            s += Rational(binom) * bern_cache[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        bern_cache.push_back(b);
    }
    return bern_cache[n];
}

namespace {

// Li2 via sum_{n>=0} B_n u^{n+1}/(n+1)!, u = -log(1-z); needs |u| < 2 pi.
Complex li2_series(const Complex& z) {
    Complex u = -log(Complex(Real(1)) - z);
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(working_digits()) - 2);
    Complex sum;
    Complex upow = u;  // u^{n+1}
    Real fact = 1;     // (n+1)!
    for (int n = 0; n < 10000; ++n) {
        if (n > 0) {
            upow = upow * u;
            fact *= (n + 1);
        }
        Rational b = bernoulli(n);
        if (b == 0) continue;
        Complex term = upow * Complex(to_real(b) / fact);
        sum = sum + term;
        if (n > 2 && abs(term) < eps * (abs(sum) + 1)) break;
    }
    return sum;
}

}  // namespace

Complex li2(const Complex& z, unsigned digits) {
    if (digits > kMaxDigits) throw std::invalid_argument("precision request beyond configured maximum");
    PrecisionGuard guard(digits + 10);
    Complex w = z;
    Real pi = real_pi();
    Real zeta2 = pi * pi / 6;
    if (w.re == 0 && w.im == 0) return Complex();
    if (w.im == 0 && w.re == 1) return Complex(zeta2);
    if (w.im == 0 && w.re > 1) {
        Real x = w.re;
        Real lx = boost::multiprecision::log(x);
        Complex inv = li2(Complex(Real(1) / x), digits + 5);
        return Complex(pi * pi / 3 - lx * lx / 2 - inv.re, -pi * lx);
    }
    Real r = abs(w);
    if (r > 1) {
        Complex l = log(-w);
        return Complex(-zeta2) - l * l * Complex(Real(0.5)) - li2(Complex(Real(1)) / w, digits + 5);
    }
    if (w.re > Real(0.5)) {
        Complex one(Real(1));
        Complex omz = one - w;
        return Complex(zeta2) - log(w) * log(omz) - li2_series(omz);
    }
    return li2_series(w);
}

Real im_li2_unit(const Real& theta) {
    Real pi = real_pi();
    Real two_pi = 2 * pi;
    // reduce to (-pi, pi]
    Real t = theta - two_pi * boost::multiprecision::floor((theta + pi) / two_pi);
    if (t <= -pi) t += two_pi;
    if (t > pi) t -= two_pi;
    if (t == 0 || t == pi) return Real(0);
    bool neg = t < 0;
    if (neg) t = -t;
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(working_digits()) - 2);
    // Cl2(t) = t - t log t + sum_{k>=1} |B_2k| t^{2k+1} / (2k (2k+1)!)
    Real sum = t - t * boost::multiprecision::log(t);
    Real t2 = t * t;
    Real tp = t;     // t^{2k+1}
    Real fact = 1;   // (2k+1)!
    for (int k = 1; k < 5000; ++k) {
        tp *= t2;
        fact *= (2 * k) * (2 * k + 1);
        Rational b = bernoulli(2 * k);
        Real term = to_real(abs(b)) * tp / (fact * (2 * k));
        sum += term;
        if (term < eps * sum) break;
    }
    return neg ? Real(-sum) : sum;
}

Real catalan_constant(unsigned digits) {
    PrecisionGuard guard(digits + 10);
    // G = sum_{k>=0} (-1)^k / (2k+1)^2 accelerated: G = pi/8 log(2+sqrt3) + 3/8 sum 1/((2k+1)^2 C(2k,k))
    Real pi = real_pi();
    Real s = 0;
    Real binom = 1;
    Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) - 8);
    for (int k = 0; k < 100000; ++k) {
        if (k > 0) binom = binom * (2 * k) * (2 * k - 1) / (Real(k) * k);
        Real term = 1 / ((Real(2 * k + 1) * (2 * k + 1)) * binom);
        s += term;
        if (term < eps) break;
    }
    return pi / 8 * boost::multiprecision::log(2 + boost::multiprecision::sqrt(Real(3))) + 3 * s / 8;
}

}  // namespace oneloop

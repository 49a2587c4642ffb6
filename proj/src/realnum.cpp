#include "oneloop/realnum.hpp"

#include <iomanip>
#include <sstream>

namespace oneloop {

PrecisionGuard::PrecisionGuard(unsigned digits) : old_(Real::default_precision()) {
    if (digits == 0 || digits > kMaxDigits)
        throw std::invalid_argument("precision " + std::to_string(digits) + " outside 1.." + std::to_string(kMaxDigits));
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(old_); }

unsigned working_digits() { return Real::default_precision(); }

Real real_pi() {
    Real x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

Real to_real(const Rational& q) {
    Real x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

std::string to_decimal(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << std::scientific << x;
    return os.str();
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d == 0) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, -z.im}; }
Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}
Complex log(const Complex& z) {
    if (z.re == 0 && z.im == 0) throw std::domain_error("log(0)");
    return {boost::multiprecision::log(abs(z)), arg(z)};
}
Complex sqrt(const Complex& z) {
    if (z.im == 0) {
        if (z.re >= 0) return {boost::multiprecision::sqrt(z.re), Real(0)};
        return {Real(0), boost::multiprecision::sqrt(-z.re)};
    }
    Real r = abs(z);
    Real a = boost::multiprecision::sqrt((r + z.re) / 2);
    Real b = boost::multiprecision::sqrt((r - z.re) / 2);
    if (z.im < 0) b = -b;
    return {a, b};
}
std::string to_decimal(const Complex& z, int digits) {
    if (z.im == 0) return to_decimal(z.re, digits);
    return to_decimal(z.re, digits) + (z.im < 0 ? " - " : " + ") + to_decimal(boost::multiprecision::abs(z.im), digits) + "i";
}

}  // namespace oneloop

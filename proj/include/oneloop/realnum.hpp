#pragma once

#include "oneloop/poly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace oneloop {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kMaxDigits = 2000;

// Sets the default working precision (decimal digits) for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned old_;
};

unsigned working_digits();
Real real_pi();
Real to_real(const Rational& q);
std::string to_decimal(const Real& x, int digits);

struct Complex {
    Real re;
    Real im;
    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch
std::string to_decimal(const Complex& z, int digits);

}  // namespace oneloop

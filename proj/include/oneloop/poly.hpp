#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oneloop {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Global symbol table for kinematic symbols ("s[1,2]", "m1^2", ...).
int symbol_id(const std::string& name);
const std::string& symbol_name(int id);

// Sparse polynomial over Q in kinematic symbols.
class Poly {
public:
    using Monomial = std::vector<std::pair<int, int>>;  // (symbol id, exponent), sorted by id

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly symbol(const std::string& name);
    static Poly var(int id);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws if not constant
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::set<int> symbols() const;
    int total_degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    Poly derivative(int sym) const;
    // Replace symbols by polynomials; symbols not in the map are kept.
    Poly substitute(const std::map<int, Poly>& values) const;
    // Full evaluation; throws std::out_of_range naming the missing symbol.
    Rational evaluate(const std::map<int, Rational>& values) const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

// Polynomial in alpha variables with Poly coefficients.
class KPoly {
public:
    using Exponents = std::vector<int>;

    KPoly() = default;
    explicit KPoly(int arity) : arity_(arity) {}

    static KPoly alpha(int arity, int i);
    static KPoly constant(int arity, const Poly& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Poly>& terms() const { return terms_; }
    void add_term(const Exponents& e, const Poly& c);
    Poly coefficient(const Exponents& e) const;

    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const Poly& c, const KPoly& a);
    friend KPoly operator*(const KPoly& a, const Poly& c) { return c * a; }
    KPoly operator-() const;
    bool operator==(const KPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const KPoly& o) const { return !(*this == o); }

    KPoly partial(int i) const;
    KPoly derivative_symbol(int sym) const;
    KPoly map_coefficients(const std::map<int, Poly>& values) const;
    KPoly specialize(const std::map<int, Rational>& values) const;
    // Set the listed alpha variables to zero and drop them from the arity.
    KPoly restrict_zero(const std::set<int>& vars) const;
    // Substitute every alpha_i by a polynomial in a (possibly different) set of variables.
    KPoly compose(const std::vector<KPoly>& images) const;
    // Exact division by alpha_i^k; throws if not divisible.
    KPoly divide_alpha(int i, int k) const;
    int min_alpha_degree(int i) const;
    KPoly pow(int k) const;

    bool is_homogeneous(int* degree = nullptr) const;
    bool has_constant_coefficients() const;
    std::set<int> symbols() const;

    template <class T, class F>
    T evaluate_with(const std::vector<T>& alpha, F coeff) const {
        T sum = T(0);
        for (const auto& [e, c] : terms_) {
            T t = coeff(c);
            for (int i = 0; i < arity_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * alpha[i];
            sum = sum + t;
        }
        return sum;
    }
    Rational evaluate(const std::vector<Rational>& alpha) const;

    // Rendering with alpha names a1..aN (1-based) unless names given.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int arity_ = 0;
    std::map<Exponents, Poly> terms_;
    void check(const KPoly& o) const;
};

}  // namespace oneloop

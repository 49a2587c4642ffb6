#pragma once

#include "oneloop/poly.hpp"
#include "oneloop/realnum.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace oneloop {

// Expression over kinematic polynomials closed under field operations, |.| and formal square roots.
class SqrtExpr {
public:
    enum class Kind { Leaf, Add, Mul, Neg, Inv, Sqrt, Abs };

    SqrtExpr();  // zero
    SqrtExpr(const Rational& q);
    SqrtExpr(long v) : SqrtExpr(Rational(v)) {}
    SqrtExpr(int v) : SqrtExpr(Rational(v)) {}
    SqrtExpr(const Poly& p);

    static SqrtExpr symbol(const std::string& name);
    static SqrtExpr sqrt(const SqrtExpr& x);
    static SqrtExpr abs(const SqrtExpr& x);

    Kind kind() const;
    const Poly& leaf() const;  // Leaf only
    const std::vector<SqrtExpr>& children() const;

    bool is_leaf() const { return kind() == Kind::Leaf; }
    // Syntactic zero: a leaf equal to the zero polynomial.
    bool is_syntactic_zero() const;

    friend SqrtExpr operator+(const SqrtExpr& a, const SqrtExpr& b);
    friend SqrtExpr operator-(const SqrtExpr& a, const SqrtExpr& b);
    friend SqrtExpr operator*(const SqrtExpr& a, const SqrtExpr& b);
    friend SqrtExpr operator/(const SqrtExpr& a, const SqrtExpr& b);  // throws on syntactic zero divisor
    SqrtExpr operator-() const;
    SqrtExpr inverse() const;

    // Canonical prefix serialization of the flattened, sorted tree.
    std::string canonical() const;
    // Infix rendering for humans.
    std::string to_string() const;
    bool structurally_equal(const SqrtExpr& o) const { return canonical() == o.canonical(); }

    std::set<int> symbols() const;
    SqrtExpr substitute(const std::map<int, Rational>& values) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit SqrtExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static SqrtExpr make(Kind k, std::vector<SqrtExpr> ch);
};

// Exact zero test: rewrites into num/den over kinematic symbols plus square-root atoms t with
// t^2 = radicand, and |x| atoms, then checks the reduced numerator.  Sound for radicands that
// are multiplicatively independent non-squares (the situation for generic kinematics).
bool is_zero_symbolic(const SqrtExpr& e);
bool equal_symbolic(const SqrtExpr& a, const SqrtExpr& b);

struct ExprValue {
    Complex value;
    bool negative_radicand = false;
};

// Principal-branch evaluation at the current working precision.  Throws std::domain_error on
// numeric division by zero and std::out_of_range for unassigned symbols.
ExprValue eval_expr(const SqrtExpr& e, const std::map<int, Rational>& values);
ExprValue eval_expr(const SqrtExpr& e, const std::map<int, Rational>& values, unsigned digits);
// Evaluation with real symbol values (used on sampled points).
ExprValue eval_expr_real(const SqrtExpr& e, const std::map<int, Real>& values);

}  // namespace oneloop

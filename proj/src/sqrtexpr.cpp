#include "oneloop/sqrtexpr.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace oneloop {

struct SqrtExpr::Node {
    Kind kind = Kind::Leaf;
    Poly leaf;
    std::vector<SqrtExpr> children;
    std::string canon;
};

namespace {

std::string kind_tag(SqrtExpr::Kind k) {
    switch (k) {
        case SqrtExpr::Kind::Leaf: return "leaf";
        case SqrtExpr::Kind::Add: return "+";
        case SqrtExpr::Kind::Mul: return "*";
        case SqrtExpr::Kind::Neg: return "neg";
        case SqrtExpr::Kind::Inv: return "inv";
        case SqrtExpr::Kind::Sqrt: return "sqrt";
        case SqrtExpr::Kind::Abs: return "abs";
    }
    return "?";
}

bool perfect_square(const Rational& q, Rational* root) {
    if (q < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (root) *root = Rational(rn, rd);
    return true;
}

}  // namespace

SqrtExpr::SqrtExpr() : SqrtExpr(Poly()) {}
SqrtExpr::SqrtExpr(const Rational& q) : SqrtExpr(Poly(q)) {}
SqrtExpr::SqrtExpr(const Poly& p) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->leaf = p;
    n->canon = "[" + p.to_string() + "]";
    node_ = n;
}

SqrtExpr SqrtExpr::symbol(const std::string& name) { return SqrtExpr(Poly::symbol(name)); }

SqrtExpr::Kind SqrtExpr::kind() const { return node_->kind; }
const Poly& SqrtExpr::leaf() const {
    if (node_->kind != Kind::Leaf) throw std::logic_error("SqrtExpr::leaf on non-leaf");
    return node_->leaf;
}
const std::vector<SqrtExpr>& SqrtExpr::children() const { return node_->children; }
bool SqrtExpr::is_syntactic_zero() const { return node_->kind == Kind::Leaf && node_->leaf.is_zero(); }
std::string SqrtExpr::canonical() const { return node_->canon; }

SqrtExpr SqrtExpr::make(Kind k, std::vector<SqrtExpr> ch) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    if (k == Kind::Add || k == Kind::Mul)
        std::sort(ch.begin(), ch.end(), [](const SqrtExpr& a, const SqrtExpr& b) { return a.canonical() < b.canonical(); });
    n->children = std::move(ch);
    std::string s = "(" + kind_tag(k);
    for (const auto& c : n->children) s += " " + c.canonical();
    n->canon = s + ")";
    return SqrtExpr(std::shared_ptr<const Node>(n));
}

SqrtExpr operator+(const SqrtExpr& a, const SqrtExpr& b) {
    std::vector<SqrtExpr> flat;
    Poly leaf;
    for (const SqrtExpr* x : {&a, &b}) {
        if (x->kind() == SqrtExpr::Kind::Add) {
            for (const auto& c : x->children()) {
                if (c.is_leaf()) leaf += c.leaf();
                else flat.push_back(c);
            }
        } else if (x->is_leaf()) {
            leaf += x->leaf();
        } else {
            flat.push_back(*x);
        }
    }
    if (!leaf.is_zero()) flat.push_back(SqrtExpr(leaf));
    if (flat.empty()) return SqrtExpr();
    if (flat.size() == 1) return flat[0];
    return SqrtExpr::make(SqrtExpr::Kind::Add, std::move(flat));
}

SqrtExpr SqrtExpr::operator-() const {
    if (is_leaf()) return SqrtExpr(-leaf());
    if (kind() == Kind::Neg) return children()[0];
    return make(Kind::Neg, {*this});
}

SqrtExpr operator-(const SqrtExpr& a, const SqrtExpr& b) { return a + (-b); }

SqrtExpr operator*(const SqrtExpr& a, const SqrtExpr& b) {
    std::vector<SqrtExpr> flat;
    Poly leaf(1);
    bool neg = false;
    std::vector<SqrtExpr> stack{a, b};
    while (!stack.empty()) {
        SqrtExpr x = stack.back();
        stack.pop_back();
        if (x.kind() == SqrtExpr::Kind::Mul) {
            for (const auto& c : x.children()) stack.push_back(c);
        } else if (x.kind() == SqrtExpr::Kind::Neg) {
            neg = !neg;
            stack.push_back(x.children()[0]);
        } else if (x.is_leaf()) {
            leaf *= x.leaf();
        } else {
            flat.push_back(x);
        }
    }
    if (leaf.is_zero()) return SqrtExpr();
    if (neg) leaf = -leaf;
    if (flat.empty()) return SqrtExpr(leaf);
    if (leaf != Poly(1)) {
        if (leaf == Poly(-1) && flat.size() == 1) return SqrtExpr::make(SqrtExpr::Kind::Neg, {flat[0]});
        flat.push_back(SqrtExpr(leaf));
    }
    if (flat.size() == 1) return flat[0];
    return SqrtExpr::make(SqrtExpr::Kind::Mul, std::move(flat));
}

SqrtExpr SqrtExpr::inverse() const {
    if (is_syntactic_zero()) throw std::domain_error("division by the syntactic zero");
    if (is_leaf() && leaf().is_constant()) return SqrtExpr(Rational(1) / leaf().constant_value());
    if (kind() == Kind::Inv) return children()[0];
    if (kind() == Kind::Neg) return -children()[0].inverse();
    return make(Kind::Inv, {*this});
}

SqrtExpr operator/(const SqrtExpr& a, const SqrtExpr& b) { return a * b.inverse(); }

SqrtExpr SqrtExpr::sqrt(const SqrtExpr& x) {
    if (x.is_leaf() && x.leaf().is_constant()) {
        Rational r;
        if (perfect_square(x.leaf().constant_value(), &r)) return SqrtExpr(r);
    }
    return make(Kind::Sqrt, {x});
}

SqrtExpr SqrtExpr::abs(const SqrtExpr& x) {
    if (x.is_leaf() && x.leaf().is_constant()) {
        Rational v = x.leaf().constant_value();
        return SqrtExpr(v < 0 ? Rational(-v) : v);
    }
    if (x.kind() == Kind::Abs || x.kind() == Kind::Sqrt) return x;
    if (x.kind() == Kind::Neg) return abs(x.children()[0]);
    return make(Kind::Abs, {x});
}

namespace {
// no operator outside parentheses
bool atomic_text(const std::string& t) {
    int depth = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && (c == '*' || c == '/' || c == '+' || c == ' ' || (c == '-' && i > 0))) return false;
    }
    return true;
}
}  // namespace

std::string SqrtExpr::to_string() const {
    switch (kind()) {
        case Kind::Leaf: {
            std::string s = leaf().to_string();
            bool simple = leaf().terms().size() <= 1 && s.find('-') == std::string::npos && s.find('/') == std::string::npos;
            return simple ? s : "(" + s + ")";
        }
        case Kind::Add: {
            std::string s;
            for (size_t i = 0; i < children().size(); ++i) s += (i ? " + " : "") + children()[i].to_string();
            return "(" + s + ")";
        }
        case Kind::Mul: {
            // numerator factors first, inverted factors collected into one denominator
            std::string num, den;
            int nden = 0;
            for (const auto& c : children()) {
                if (c.kind() == Kind::Inv) {
                    const SqrtExpr& d = c.children()[0];
                    den += (den.empty() ? "" : "*") + d.to_string();
                    nden += d.kind() == Kind::Mul ? 2 : 1;
                } else {
                    num += (num.empty() ? "" : "*") + c.to_string();
                }
            }
            if (den.empty()) return num;
            if (num.empty()) num = "1";
            return num + "/" + (nden > 1 || !atomic_text(den) ? "(" + den + ")" : den);
        }
        case Kind::Neg: return "-" + children()[0].to_string();
        case Kind::Inv: {
            const SqrtExpr& d = children()[0];
            std::string t = d.to_string();
            return atomic_text(t) ? "1/" + t : "1/(" + t + ")";
        }
        case Kind::Sqrt:
        case Kind::Abs: {
            const SqrtExpr& c = children()[0];
            std::string inner = c.is_leaf() ? c.leaf().to_string() : c.to_string();
            if (inner.size() > 2 && inner.front() == '(' && inner.back() == ')' && c.kind() == Kind::Add)
                inner = inner.substr(1, inner.size() - 2);
            return kind() == Kind::Sqrt ? "sqrt(" + inner + ")" : "|" + inner + "|";
        }
    }
    return "?";
}

std::set<int> SqrtExpr::symbols() const {
    if (is_leaf()) return leaf().symbols();
    std::set<int> out;
    for (const auto& c : children()) {
        auto s = c.symbols();
        out.insert(s.begin(), s.end());
    }
    return out;
}

SqrtExpr SqrtExpr::substitute(const std::map<int, Rational>& values) const {
    if (is_leaf()) {
        std::map<int, Poly> sub;
        for (const auto& [k, v] : values) sub.emplace(k, Poly(v));
        return SqrtExpr(leaf().substitute(sub));
    }
    std::vector<SqrtExpr> ch;
    for (const auto& c : children()) ch.push_back(c.substitute(values));
    switch (kind()) {
        case Kind::Add: {
            SqrtExpr s;
            for (const auto& c : ch) s = s + c;
            return s;
        }
        case Kind::Mul: {
            SqrtExpr s(1);
            for (const auto& c : ch) s = s * c;
            return s;
        }
        case Kind::Neg: return -ch[0];
        case Kind::Inv: return ch[0].inverse();
        case Kind::Sqrt: return sqrt(ch[0]);
        case Kind::Abs: return abs(ch[0]);
        default: break;
    }
    return *this;
}

// ---------------------------------------------------------------- symbolic zero test

namespace {

struct AtomTable {
    std::mutex mu;
    std::map<int, Poly> radicand;  // sqrt atom id -> t^2
};
AtomTable& atoms() {
    static AtomTable t;
    return t;
}

Poly reduce_atoms(const Poly& p) {
    std::map<int, Poly> rad;
    {
        auto& t = atoms();
        std::lock_guard<std::mutex> lock(t.mu);
        rad = t.radicand;
    }
    Poly cur = p;
    for (int guard = 0; guard < 64; ++guard) {
        bool changed = false;
        Poly next;
        for (const auto& [mono, c] : cur.terms()) {
            Poly term(c);
            for (auto [sym, e] : mono) {
                auto it = rad.find(sym);
                if (it != rad.end() && e >= 2) {
                    changed = true;
                    for (int k = 0; k < e / 2; ++k) term *= it->second;
                    e %= 2;
                }
                for (int k = 0; k < e; ++k) term *= Poly::var(sym);
            }
            next += term;
        }
        cur = next;
        if (!changed) return cur;
    }
    throw std::runtime_error("square-root atom reduction did not terminate");
}

// q = a^2 * b with b squarefree (trial division; a large cofactor is left in b)
void square_split(const mpz_class& n, mpz_class& a, mpz_class& b) {
    a = 1;
    b = 1;
    mpz_class m = abs(n);
    for (unsigned long p = 2; p < 20000 && p * p <= m; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
            m /= p * p;
            a *= p;
        }
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        a *= r;
        m = 1;
    }
    b = n < 0 ? mpz_class(-m) : m;
}

Rational leading_coefficient(const Poly& p) { return p.terms().rbegin()->second; }

int atom_symbol(const std::string& prefix, const Poly& body) {
    return symbol_id(prefix + "{" + body.to_string() + "}");
}

struct NF {
    Poly num, den;
};

NF nf_of(const SqrtExpr& e);

Poly abs_atom(const Poly& p) {
    if (p.is_constant()) {
        Rational v = p.constant_value();
        return Poly(v < 0 ? Rational(-v) : v);
    }
    Poly q = leading_coefficient(p) < 0 ? -p : p;
    return Poly::var(atom_symbol("@abs", q));
}

Poly sqrt_atom(const Poly& r) {
    if (r.is_zero()) return Poly();
    Rational c = r.is_constant() ? r.constant_value() : leading_coefficient(r);
    Poly body = r * (Rational(1) / c);  // leading coefficient 1 (or the constant 1)
    // c = n/d ; sqrt(c) = sqrt(n d)/d
    mpz_class nd = c.get_num() * c.get_den(), a, b;
    square_split(nd, a, b);
    Rational outer(a, c.get_den());
    outer.canonicalize();
    Poly inner = body * Rational(b);
    if (inner == Poly(1)) return Poly(outer);
    int id = atom_symbol("@sqrt", inner);
    {
        auto& t = atoms();
        std::lock_guard<std::mutex> lock(t.mu);
        t.radicand.emplace(id, inner);
    }
    return Poly::var(id) * outer;
}

NF nf_of(const SqrtExpr& e) {
    using K = SqrtExpr::Kind;
    switch (e.kind()) {
        case K::Leaf: return {e.leaf(), Poly(1)};
        case K::Add: {
            NF acc{Poly(), Poly(1)};
            for (const auto& c : e.children()) {
                NF x = nf_of(c);
                acc = {reduce_atoms(acc.num * x.den + x.num * acc.den), reduce_atoms(acc.den * x.den)};
            }
            return acc;
        }
        case K::Mul: {
            NF acc{Poly(1), Poly(1)};
            for (const auto& c : e.children()) {
                NF x = nf_of(c);
                acc = {reduce_atoms(acc.num * x.num), reduce_atoms(acc.den * x.den)};
            }
            return acc;
        }
        case K::Neg: {
            NF x = nf_of(e.children()[0]);
            return {-x.num, x.den};
        }
        case K::Inv: {
            NF x = nf_of(e.children()[0]);
            if (x.num.is_zero()) throw std::domain_error("division by an expression that simplifies to zero");
            return {x.den, x.num};
        }
        case K::Sqrt: {
            NF x = nf_of(e.children()[0]);
            // sqrt(n/d) = sqrt(n d)/d
            return {sqrt_atom(reduce_atoms(x.num * x.den)), x.den};
        }
        case K::Abs: {
            NF x = nf_of(e.children()[0]);
            if (x.num.is_zero()) return {Poly(), Poly(1)};
            if (x.den.is_constant()) {
                Rational d = x.den.constant_value();
                return {abs_atom(x.num), Poly(d < 0 ? Rational(-d) : d)};
            }
            return {abs_atom(x.num), abs_atom(x.den)};
        }
    }
    throw std::logic_error("nf_of");
}

}  // namespace

bool is_zero_symbolic(const SqrtExpr& e) { return reduce_atoms(nf_of(e).num).is_zero(); }
bool equal_symbolic(const SqrtExpr& a, const SqrtExpr& b) { return is_zero_symbolic(a - b); }

// ---------------------------------------------------------------- numeric evaluation

namespace {

template <class Lookup>
ExprValue eval_impl(const SqrtExpr& e, const Lookup& sym) {
    using K = SqrtExpr::Kind;
    switch (e.kind()) {
        case K::Leaf: {
            Real sum = 0;
            for (const auto& [mono, c] : e.leaf().terms()) {
                Real t = to_real(c);
                for (auto [s, k] : mono) {
                    Real v = sym(s);
                    for (int i = 0; i < k; ++i) t *= v;
                }
                sum += t;
            }
            return {Complex(sum), false};
        }
        case K::Add:
        case K::Mul: {
            ExprValue acc{Complex(Real(e.kind() == K::Add ? 0 : 1)), false};
            for (const auto& c : e.children()) {
                ExprValue x = eval_impl(c, sym);
                acc.value = e.kind() == K::Add ? acc.value + x.value : acc.value * x.value;
                acc.negative_radicand = acc.negative_radicand || x.negative_radicand;
            }
            return acc;
        }
        case K::Neg: {
            ExprValue x = eval_impl(e.children()[0], sym);
            return {-x.value, x.negative_radicand};
        }
        case K::Inv: {
            ExprValue x = eval_impl(e.children()[0], sym);
            if (x.value.re == 0 && x.value.im == 0) throw std::domain_error("numeric division by zero in " + e.to_string());
            return {Complex(Real(1)) / x.value, x.negative_radicand};
        }
        case K::Sqrt: {
            ExprValue x = eval_impl(e.children()[0], sym);
            bool neg = x.value.im == 0 && x.value.re < 0;
            return {sqrt(x.value), x.negative_radicand || neg};
        }
        case K::Abs: {
            ExprValue x = eval_impl(e.children()[0], sym);
            return {Complex(abs(x.value)), x.negative_radicand};
        }
    }
    throw std::logic_error("eval_impl");
}

}  // namespace

ExprValue eval_expr(const SqrtExpr& e, const std::map<int, Rational>& values) {
    return eval_impl(e, [&](int s) {
        auto it = values.find(s);
        if (it == values.end()) throw std::out_of_range("no value for symbol " + symbol_name(s));
        return to_real(it->second);
    });
}

ExprValue eval_expr(const SqrtExpr& e, const std::map<int, Rational>& values, unsigned digits) {
    PrecisionGuard g(digits);
    return eval_expr(e, values);
}

ExprValue eval_expr_real(const SqrtExpr& e, const std::map<int, Real>& values) {
    return eval_impl(e, [&](int s) {
        auto it = values.find(s);
        if (it == values.end()) throw std::out_of_range("no value for symbol " + symbol_name(s));
        return it->second;
    });
}

}  // namespace oneloop

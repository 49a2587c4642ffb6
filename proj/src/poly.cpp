#include "oneloop/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace oneloop {

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string body = text;
    bool neg = false;
    if (body[0] == '+' || body[0] == '-') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    Rational q;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string a = body.substr(0, slash), b = body.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b)) throw std::invalid_argument("bad rational '" + raw + "'");
        mpz_class den(b);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
        q = Rational(mpz_class(a), den);
    } else if (dot != std::string::npos) {
        std::string a = body.substr(0, dot), b = body.substr(dot + 1);
        if ((!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)) || (a.empty() && b.empty()))
            throw std::invalid_argument("bad decimal '" + raw + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        q = Rational(mpz_class(a.empty() ? "0" : a) * scale + mpz_class(b.empty() ? "0" : b), scale);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("bad rational '" + raw + "'");
        q = Rational(mpz_class(body));
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {
struct SymbolTable {
    std::mutex mu;
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
};
SymbolTable& table() {
    static SymbolTable t;
    return t;
}
}  // namespace

int symbol_id(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& symbol_name(int id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    if (id < 0 || id >= static_cast<int>(t.names.size())) throw std::out_of_range("unknown symbol id");
    return t.names[id];
}

// ---------------- Poly ----------------

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

Poly Poly::symbol(const std::string& name) { return var(symbol_id(name)); }

Poly Poly::var(int id) {
    Poly p;
    p.terms_[{{id, 1}}] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial '" + to_string() + "' is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::set<int> Poly::symbols() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m) out.insert(s);
    return out;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [s, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

static Poly::Monomial mono_mul(const Poly::Monomial& a, const Poly::Monomial& b) {
    Poly::Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    r *= Rational(-1);
    return r;
}

Poly Poly::derivative(int sym) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k].first != sym) continue;
            Monomial n = m;
            int e = n[k].second;
            if (e == 1)
                n.erase(n.begin() + static_cast<long>(k));
            else
                n[k].second = e - 1;
            r.add_term(n, c * e);
        }
    }
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        Monomial kept;
        for (const auto& [s, e] : m) {
            auto it = values.find(s);
            if (it == values.end()) {
                kept.emplace_back(s, e);
            } else {
                for (int k = 0; k < e; ++k) t = t * it->second;
            }
        }
        if (!kept.empty()) {
            Poly mono;
            mono.terms_[kept] = 1;
            t = t * mono;
        }
        r += t;
    }
    return r;
}

Rational Poly::evaluate(const std::map<int, Rational>& values) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [s, e] : m) {
            auto it = values.find(s);
            if (it == values.end()) throw std::out_of_range("no value for symbol " + symbol_name(s));
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        sum += t;
    }
    return sum;
}

namespace {
using NamedMono = std::vector<std::pair<std::string, int>>;

NamedMono named(const Poly::Monomial& m) {
    NamedMono out;
    for (const auto& [s, e] : m) out.emplace_back(symbol_name(s), e);
    std::sort(out.begin(), out.end());
    return out;
}

int degree(const NamedMono& m) {
    int d = 0;
    for (const auto& p : m) d += p.second;
    return d;
}

std::string mono_text(const NamedMono& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        bool wrap = m[i].second != 1 && m[i].first.find('^') != std::string::npos;  // (m1^2)^2
        s += wrap ? "(" + m[i].first + ")" : m[i].first;
        if (m[i].second != 1) s += "^" + std::to_string(m[i].second);
    }
    return s;
}
}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<NamedMono, Rational>> rows;
    for (const auto& [m, c] : terms_) rows.emplace_back(named(m), c);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        int da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : rows) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << oneloop::to_string(a);
        } else {
            if (a != 1) os << oneloop::to_string(a) << "*";
            os << mono_text(m);
        }
    }
    return os.str();
}

// ---------------- KPoly ----------------

void KPoly::check(const KPoly& o) const {
    if (arity_ != o.arity_)
        throw std::invalid_argument("alpha arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
}

KPoly KPoly::alpha(int arity, int i) {
    if (i < 0 || i >= arity) throw std::out_of_range("alpha index out of range");
    KPoly p(arity);
    Exponents e(arity, 0);
    e[i] = 1;
    p.terms_[e] = Poly(1);
    return p;
}

KPoly KPoly::constant(int arity, const Poly& c) {
    KPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

void KPoly::add_term(const Exponents& e, const Poly& c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("exponent vector has wrong arity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly KPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly() : it->second;
}

KPoly& KPoly::operator+=(const KPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    a.check(b);
    KPoly r(a.arity_);
    KPoly::Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

KPoly operator*(const Poly& c, const KPoly& a) {
    KPoly r(a.arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
}

KPoly KPoly::operator-() const { return Poly(-1) * *this; }

KPoly KPoly::partial(int i) const {
    if (i < 0 || i >= arity_) throw std::out_of_range("unknown alpha variable a" + std::to_string(i + 1));
    KPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents n = e;
        n[i] -= 1;
        r.add_term(n, c * Rational(e[i]));
    }
    return r;
}

KPoly KPoly::derivative_symbol(int sym) const {
    KPoly r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.derivative(sym));
    return r;
}

KPoly KPoly::map_coefficients(const std::map<int, Poly>& values) const {
    KPoly r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute(values));
    return r;
}

KPoly KPoly::specialize(const std::map<int, Rational>& values) const {
    KPoly r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, Poly(c.evaluate(values)));
    return r;
}

KPoly KPoly::restrict_zero(const std::set<int>& vars) const {
    for (int v : vars)
        if (v < 0 || v >= arity_) throw std::out_of_range("unknown alpha variable in restriction");
    KPoly r(arity_ - static_cast<int>(vars.size()));
    for (const auto& [e, c] : terms_) {
        bool vanish = false;
        Exponents n;
        for (int i = 0; i < arity_; ++i) {
            if (vars.count(i)) {
                if (e[i] > 0) vanish = true;
            } else {
                n.push_back(e[i]);
            }
        }
        if (!vanish) r.add_term(n, c);
    }
    return r;
}

KPoly KPoly::compose(const std::vector<KPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_) throw std::invalid_argument("compose: wrong number of images");
    int target = images.empty() ? 0 : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != target) throw std::invalid_argument("compose: inconsistent image arity");
    std::vector<std::vector<KPoly>> powers(arity_);
    KPoly r(target);
    for (const auto& [e, c] : terms_) {
        KPoly t = KPoly::constant(target, c);
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(KPoly::constant(target, Poly(1)));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            t = t * pw[e[i]];
        }
        r += t;
    }
    return r;
}

int KPoly::min_alpha_degree(int i) const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = (m < 0) ? e[i] : std::min(m, e[i]);
    return m < 0 ? 0 : m;
}

KPoly KPoly::divide_alpha(int i, int k) const {
    KPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[i] < k) throw std::domain_error("polynomial not divisible by a" + std::to_string(i + 1) + "^" + std::to_string(k));
        Exponents n = e;
        n[i] -= k;
        r.add_term(n, c);
    }
    return r;
}

KPoly KPoly::pow(int k) const {
    KPoly r = KPoly::constant(arity_, Poly(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool KPoly::is_homogeneous(int* degree) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    if (degree) *degree = d < 0 ? 0 : d;
    return true;
}

bool KPoly::has_constant_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

std::set<int> KPoly::symbols() const {
    std::set<int> out;
    for (const auto& [e, c] : terms_) {
        auto s = c.symbols();
        out.insert(s.begin(), s.end());
    }
    return out;
}

Rational KPoly::evaluate(const std::vector<Rational>& alpha) const {
    if (static_cast<int>(alpha.size()) != arity_) throw std::invalid_argument("evaluate: wrong number of alpha values");
    return evaluate_with<Rational>(alpha, [](const Poly& c) { return c.constant_value(); });
}

std::string KPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto name = [&](int i) { return names.empty() ? "a" + std::to_string(i + 1) : names.at(i); };
    // Graded, then lexicographically by exponent vector (larger powers of earlier variables first).
    std::vector<std::pair<Exponents, Poly>> rows(terms_.begin(), terms_.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a.first) da += x;
        for (int x : b.first) db += x;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : rows) {
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = c.to_string();
        bool single = c.terms().size() == 1;
        bool neg = single && c.terms().begin()->second < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (neg) coeff = (-c).to_string();
        if (mono.empty()) {
            os << (single ? coeff : "(" + coeff + ")");
        } else if (coeff == "1") {
            os << mono;
        } else {
            os << (single ? coeff : "(" + coeff + ")") << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace oneloop

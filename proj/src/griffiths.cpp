#include "oneloop/griffiths.hpp"

#include "oneloop/symanzik.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <regex>

namespace oneloop {

namespace {

void monomials(int n, int deg, std::vector<int>& cur, int pos, std::vector<KPoly::Exponents>& out) {
    if (pos == n - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int k = deg; k >= 0; --k) {
        cur[pos] = k;
        monomials(n, deg - k, cur, pos + 1, out);
    }
}

std::vector<KPoly::Exponents> monomials(int n, int deg) {
    std::vector<KPoly::Exponents> out;
    if (deg < 0) return out;
    std::vector<int> cur(n, 0);
    if (n == 0) return out;
    monomials(n, deg, cur, 0, out);
    return out;
}

}  // namespace

std::vector<KPoly> jacobian_decompose(const KPoly& numerator, const KPoly& xi, const std::vector<int>& pivot_order) {
    int n = xi.arity();
    if (numerator.arity() != n) throw std::invalid_argument("jacobian_decompose: arity mismatch");
    if (!xi.has_constant_coefficients() || !numerator.has_constant_coefficients())
        throw std::invalid_argument("jacobian_decompose: specialize kinematics first");
    int deg = 0;
    if (!numerator.is_homogeneous(&deg)) throw std::invalid_argument("jacobian_decompose: numerator not homogeneous");
    std::vector<KPoly> A(n, KPoly(n));
    if (numerator.is_zero()) return A;
    if (deg == 0) throw std::domain_error("degree-0 numerator is not in the Jacobian ideal");
    QMatrix C = quadratic_form_matrix(xi).specialize({});
    if (det_bareiss(C) == 0) throw SingularMatrixError("quadric matrix is singular");

    auto basis = monomials(n, deg - 1);
    auto rows = monomials(n, deg);
    std::map<KPoly::Exponents, int> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);
    int nb = static_cast<int>(basis.size());
    // unknown (i, b): coefficient of basis[b] in A_i
    QMatrix M(rows.size(), QVector(n * nb, 0));
    std::vector<KPoly> dxi(n);
    for (int i = 0; i < n; ++i) dxi[i] = xi.partial(i);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < nb; ++b)
            for (const auto& [e, c] : dxi[i].terms()) {
                KPoly::Exponents t = e;
                for (int v = 0; v < n; ++v) t[v] += basis[b][v];
                M[row_of.at(t)][i * nb + b] += c.constant_value();
            }
    QVector rhs(rows.size(), 0);
    for (const auto& [e, c] : numerator.terms()) rhs[row_of.at(e)] = c.constant_value();
    std::vector<int> order;
    if (!pivot_order.empty()) {
        // pivot_order permutes the alpha index; expand to unknown columns
        for (int i : pivot_order)
            for (int b = 0; b < nb; ++b) order.push_back(i * nb + b);
    }
    auto sol = linear_solve(M, rhs, order);
    if (!sol.consistent) throw std::domain_error("numerator is not in the Jacobian ideal");
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < nb; ++b) A[i].add_term(basis[b], Poly(sol.particular[i * nb + b]));
    // postcondition
    KPoly check(n);
    for (int i = 0; i < n; ++i) check += A[i] * dxi[i];
    if (check != numerator)
        throw std::logic_error("jacobian_decompose: re-substitution failed: " + (check - numerator).to_string());
    return A;
}

std::vector<KPoly> jacobian_decompose(const KPoly& numerator, const KPoly& xi, const std::map<int, Rational>& values,
                                      const std::vector<int>& pivot_order) {
    return jacobian_decompose(numerator.specialize(values), xi.specialize(values), pivot_order);
}

PolyForm griffiths_beta(const std::vector<KPoly>& A) {
    int n = static_cast<int>(A.size());
    PolyForm beta(n, n - 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            KPoly c = KPoly::alpha(n, j) * A[i] - KPoly::alpha(n, i) * A[j];
            if ((i + j) % 2) c = -c;
            PolyForm::Index idx;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) idx.push_back(k);
            beta.add(idx, c);
        }
    return beta;
}

int griffiths_exterior_sign(const std::vector<KPoly>& A, const KPoly& xi, int k) {
    int n = xi.arity();
    RationalForm rf{griffiths_beta(A), xi, k};
    RationalForm d = rf.d();  // over Xi^{k+1}
    KPoly sum_adxi(n), trace(n);
    for (int i = 0; i < n; ++i) {
        sum_adxi += A[i] * xi.partial(i);
        trace += A[i].partial(i);
    }
    KPoly bracket = trace * xi - KPoly::constant(n, Poly(Rational(k))) * sum_adxi;
    PolyForm rhs = PolyForm::omega(n) * bracket;
    if (d.numerator == rhs) return 1;
    PolyForm neg = PolyForm::omega(n) * (-bracket);
    if (d.numerator == neg) return -1;
    return 0;
}

std::string resolve_parameter(const FeynmanGraph& g, const std::string& param) {
    int f = g.num_legs();
    for (int i = 0; i < f; ++i)
        if (g.legs[i].momentum == param) {
            if (i + 1 == f) throw std::invalid_argument("parameter '" + param + "' is the dependent momentum");
            return s_symbol(i + 1, i + 1);
        }
    for (const auto& e : g.edges)
        if (!e.massless() && e.mass == param) return msq_symbol(e.mass);
    return param;
}

PicardFuchsData picard_fuchs_B(const FeynmanGraph& g, const std::string& param, const KinematicPoint& p,
                               const std::vector<int>& pivot_order) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 4) throw std::invalid_argument("picard_fuchs_B expects a box graph");
    PicardFuchsData out;
    out.param = resolve_parameter(g, param);
    auto vals = symbol_values(g, p);
    auto sp = symanzik(g);
    out.xi = sp.xi.specialize(vals);
    int n = out.xi.arity();
    KPoly dxi = sp.xi.derivative_symbol(symbol_id(out.param)).specialize(vals);
    out.numerator = KPoly::constant(n, Poly(-2)) * dxi;
    out.A = jacobian_decompose(out.numerator, out.xi, pivot_order);
    KPoly check(n), trace(n);
    for (int i = 0; i < n; ++i) {
        check += out.A[i] * out.xi.partial(i);
        trace += out.A[i].partial(i);
    }
    out.decomposition_exact = check == out.numerator;
    out.B = trace.is_zero() ? Rational(0) : trace.coefficient(KPoly::Exponents(n, 0)).constant_value() / 2;
    out.beta = griffiths_beta(out.A);
    out.exterior_sign = griffiths_exterior_sign(out.A, out.xi, 2);
    out.exterior_literal = out.exterior_sign == 1;
    return out;
}

namespace {

// Restrict the numerator of a form (over base^k) to coordinate position `pos` = 0 and return h with
// restricted numerator = h * Omega_K.
KPoly restrict_and_divide(const PolyForm& num, int pos) {
    PolyForm r = num.restrict_zero(pos);
    auto h = r.divide_by_omega();
    if (!h) throw std::logic_error("restricted form is not a multiple of Omega");
    return *h;
}

}  // namespace

std::map<std::pair<int, int>, Rational> beta_edge_coefficients(const PicardFuchsData& pf) {
    int n = pf.xi.arity();
    if (n != 4) throw std::invalid_argument("beta_edge_coefficients expects a box");
    std::map<std::pair<int, int>, Rational> out;
    for (int l = 0; l < n; ++l) {
        // face alpha_l = 0; coordinates K = all but l, in order
        std::vector<int> K;
        for (int i = 0; i < n; ++i)
            if (i != l) K.push_back(i);
        KPoly h = restrict_and_divide(pf.beta, l);
        KPoly xi_l = pf.xi.restrict_zero({l});
        int s_l = (l % 2 == 0) ? 1 : -1;
        if (h.is_zero()) continue;
        auto Bv = jacobian_decompose(h, xi_l);
        PolyForm gamma = griffiths_beta(Bv);  // over xi_l^1
        int sigma = griffiths_exterior_sign(Bv, xi_l, 1);
        if (sigma == 0) throw std::logic_error("face primitive failed");
        // d(gamma/xi_l) = sigma * [ -h + trace xi_l ] Omega / xi_l^2 ; trace = 0 for constant B
        KPoly trace(n - 1);
        for (int i = 0; i < n - 1; ++i) trace += Bv[i].partial(i);
        if (!trace.is_zero()) throw std::logic_error("face primitive has non-constant coefficients");
        // so h Omega/xi_l^2 = -sigma d(gamma/xi_l)
        for (int pk = 0; pk < n - 1; ++pk) {
            int k = K[pk];
            KPoly c = restrict_and_divide(gamma, pk);
            if (!c.has_constant_coefficients() || (!c.is_zero() && c.terms().begin()->first != KPoly::Exponents(n - 2, 0)))
                throw std::logic_error("edge restriction is not a constant multiple of theta^1");
            Rational cv = c.is_zero() ? Rational(0) : c.terms().begin()->second.constant_value();
            int s_k = (pk % 2 == 0) ? 1 : -1;
            Rational contrib = Rational(s_l * s_k * (-sigma)) * cv;
            auto key = std::make_pair(std::min(l, k), std::max(l, k));
            out[key] += contrib;
        }
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) out.emplace(std::make_pair(j, k), Rational(0));
    return out;
}

ReductionResult reduce_to_boxes(const FeynmanGraph& g, const KinematicPoint& p, bool compute_residual,
                                const QuadratureOptions& opt) {
    if (!g.is_one_loop_cycle()) throw std::invalid_argument("reduce_to_boxes expects a one-loop cycle graph");
    int N = g.num_edges();
    if (N < 4) throw std::invalid_argument("reduce_to_boxes needs N >= 4");
    if (N > 6) throw std::invalid_argument("reduce_to_boxes is capped at N = 6");
    auto gen = validate_generic(g, p);
    if (!gen.generic) throw std::domain_error("non-generic kinematics: " + gen.violations.front());
    auto vals = symbol_values(g, p);
    auto sp = symanzik(g);
    KPoly xi = sp.xi.specialize(vals);
    KPoly psi = sp.psi.specialize(vals);
    if (det_bareiss(quadratic_form_matrix(xi).specialize({})) == 0) throw SingularMatrixError("singular C at the point");

    struct Pending {
        std::vector<int> coords;  // original edge indices still present
        KPoly h;
        int k;
        Rational coeff;
    };
    ReductionResult out;
    std::vector<Pending> work{{[&] {
                                   std::vector<int> c(N);
                                   for (int i = 0; i < N; ++i) c[i] = i;
                                   return c;
                               }(),
                               psi.pow(N - 4), N - 2, Rational(1)}};
    auto key_of = [&](const std::vector<int>& coords) {
        std::set<std::string> key;
        for (int i = 0; i < N; ++i)
            if (std::find(coords.begin(), coords.end(), i) == coords.end()) key.insert(g.edges[i].id);
        return key;
    };
    auto face_xi = [&](const std::vector<int>& coords) {
        std::set<int> drop;
        for (int i = 0; i < N; ++i)
            if (std::find(coords.begin(), coords.end(), i) == coords.end()) drop.insert(i);
        return xi.restrict_zero(drop);
    };
    while (!work.empty()) {
        Pending t = work.back();
        work.pop_back();
        if (t.coeff == 0 || t.h.is_zero()) continue;
        int m = static_cast<int>(t.coords.size());
        int deg = 0;
        t.h.is_homogeneous(&deg);
        if (m == 4 && t.k == 2) {
            out.coefficients[key_of(t.coords)] += t.coeff * t.h.coefficient(KPoly::Exponents(4, 0)).constant_value();
            continue;
        }
        if (deg == 0) {
            auto key = key_of(t.coords);
            out.remainder[key] += t.coeff * t.h.coefficient(KPoly::Exponents(m, 0)).constant_value();
            out.remainder_pole_order[key] = t.k;
            continue;
        }
        KPoly fx = face_xi(t.coords);
        if (det_bareiss(quadratic_form_matrix(fx).specialize({})) == 0)
            throw SingularMatrixError("non-generic face quadric");
        auto A = jacobian_decompose(t.h, fx);
        int kk = t.k - 1;
        int sigma = griffiths_exterior_sign(A, fx, kk);
        if (sigma == 0) throw std::logic_error("Griffiths identity failed during reduction");
        // h Omega / X^k = (1/kk) [ trace Omega / X^kk - sigma d(beta/X^kk) ]
        KPoly trace(m);
        for (int i = 0; i < m; ++i) trace += A[i].partial(i);
        Rational inv = Rational(1) / Rational(kk);
        if (!trace.is_zero()) work.push_back({t.coords, trace, kk, t.coeff * inv});
        PolyForm beta = griffiths_beta(A);
        for (int pos = 0; pos < m; ++pos) {
            KPoly hp = restrict_and_divide(beta, pos);
            if (hp.is_zero()) continue;
            std::vector<int> sub = t.coords;
            sub.erase(sub.begin() + pos);
            int s = (pos % 2 == 0) ? 1 : -1;
            work.push_back({sub, hp, kk, t.coeff * inv * Rational(-sigma * s)});
        }
    }
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c)
                for (int d = c + 1; d < N; ++d) out.coefficients.emplace(key_of({a, b, c, d}), Rational(0));
    // keys must be exactly the C(N, N-4) contractions
    if (!out.remainder.empty())
        out.note = "irreducible top-weight remainder present (constant numerator on a face of dimension >= 5)";

    if (compute_residual) {
        QuadratureOptions o = opt;
        o.method = QuadMethod::Adaptive;
        auto lhs = integrate_form(psi.pow(N - 4), xi, N - 2, o);
        double rhs = 0, err = lhs.error_estimate;
        for (const auto& [key, a] : out.coefficients) {
            if (a == 0) continue;
            std::vector<int> coords;
            for (int i = 0; i < N; ++i)
                if (!key.count(g.edges[i].id)) coords.push_back(i);
            KPoly fx = face_xi(coords);
            auto r = integrate_form(KPoly::constant(4, Poly(1)), fx, 2, o);
            rhs += a.get_d() * r.value;
            err += std::abs(a.get_d()) * r.error_estimate;
        }
        for (const auto& [key, a] : out.remainder) {
            std::vector<int> coords;
            for (int i = 0; i < N; ++i)
                if (!key.count(g.edges[i].id)) coords.push_back(i);
            KPoly fx = face_xi(coords);
            int m = static_cast<int>(coords.size());
            auto r = integrate_form(KPoly::constant(m, Poly(1)), fx, out.remainder_pole_order.at(key), o);
            rhs += a.get_d() * r.value;
            err += std::abs(a.get_d()) * r.error_estimate;
        }
        out.residual_computed = true;
        out.lhs = lhs.value;
        out.rhs = rhs;
        out.residual = std::abs(lhs.value - rhs) / std::abs(lhs.value);
        out.quadrature_error = err;
    }
    return out;
}

}  // namespace oneloop

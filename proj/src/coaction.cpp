#include "oneloop/coaction.hpp"

#include "oneloop/symanzik.hpp"

#include <sstream>

namespace oneloop {

namespace {

SqrtExpr E(const Poly& p) { return SqrtExpr(p); }

bool structurally_zero(const SqrtExpr& e) {
    try {
        return is_zero_symbolic(e);
    } catch (const std::domain_error&) {
        return false;
    }
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

PolyMatrix face_matrix(const PolyMatrix& c, int a, int b) { return {{c[a][a], c[a][b]}, {c[b][a], c[b][b]}}; }

Poly det2(const PolyMatrix& d) { return d[0][0] * d[1][1] - d[0][1] * d[1][0]; }

PolyMatrix specialize_entries(const PolyMatrix& c, const std::map<int, Rational>& values) {
    if (values.empty()) return c;
    std::map<int, Poly> sub;
    for (const auto& [k, v] : values) sub.emplace(k, Poly(v));
    PolyMatrix out = c;
    for (auto& row : out)
        for (auto& x : row) x = x.substitute(sub);
    return out;
}

}  // namespace

SqrtExpr cross_ratio(const LinePoint& p0, const LinePoint& p1, const LinePoint& p2, const LinePoint& p3) {
    int inf = 0;
    for (const auto* p : {&p0, &p1, &p2, &p3})
        if (!p->has_value()) ++inf;
    if (inf > 1) throw std::domain_error("cross-ratio with more than one point at infinity");
    // num: (p2-p0)(p3-p1), den: (p2-p1)(p3-p0); drop both factors containing the point at infinity
    auto diff = [](const LinePoint& a, const LinePoint& b) -> std::optional<SqrtExpr> {
        if (!a || !b) return std::nullopt;
        return *a - *b;
    };
    SqrtExpr num(1), den(1);
    for (const auto& f : {diff(p2, p0), diff(p3, p1)})
        if (f) num = num * *f;
    for (const auto& f : {diff(p2, p1), diff(p3, p0)})
        if (f) den = den * *f;
    bool nz = structurally_zero(num), dz = structurally_zero(den);
    if (dz && nz) throw std::domain_error("cross-ratio of coincident points is 0/0");
    if (dz) throw std::domain_error("cross-ratio has a vanishing denominator");
    if (nz) return SqrtExpr();
    return num / den;
}

std::pair<SqrtExpr, SqrtExpr> quadric_roots(const Poly& a, const Poly& b, const Poly& c) {
    if (a.is_zero()) throw std::domain_error("leading coefficient vanishes");
    Poly disc = b * b - a * c;
    if (disc.is_zero()) throw std::domain_error("degenerate quadric: double root");
    SqrtExpr sq = SqrtExpr::sqrt(E(disc));
    SqrtExpr minus = (-E(b) - sq) / E(a);
    SqrtExpr plus = (-E(b) + sq) / E(a);
    return {minus, plus};
}

BubblePeriod bubble_period(const FeynmanGraph& g, BubbleVariant variant) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 2) throw std::invalid_argument("bubble_period expects a bubble graph");
    auto sp = symanzik(g);
    PolyMatrix c = quadratic_form_matrix(sp.xi).entries;
    bool m1 = !g.edges[0].massless(), m2 = !g.edges[1].massless();
    BubblePeriod out;
    if (variant == BubbleVariant::TwoMass) {
        if (!m1 || !m2) throw std::invalid_argument("theta^1 period needs two non-vanishing masses");
        // chart alpha2 = 1, coordinate x = alpha1: C11 x^2 + 2 C12 x + C22
        auto [u0, u1] = quadric_roots(c[0][0], c[0][1], c[1][1]);
        out.prefactor = SqrtExpr(1) / SqrtExpr::sqrt(SqrtExpr(4) * SqrtExpr::abs(E(det2(c))));
        out.argument = cross_ratio(SqrtExpr(), std::nullopt, u0, u1);
        out.x = u1;
        out.y = u0;
        out.note = "two-mass theta^1: prefactor 1/sqrt(4|det C|)";
        return out;
    }
    if (m1 == m2) throw std::invalid_argument("theta^2 period needs exactly one vanishing mass");
    // chart alpha1 = 1, t = alpha2/alpha1: C22 t^2 + 2 C12 t + C11; L = {alpha1 + alpha2 = 0} sits at t = -1
    SqrtExpr x = m1 ? -E(c[0][0]) / (SqrtExpr(2) * E(c[0][1])) : SqrtExpr(-2) * E(c[0][1]) / E(c[1][1]);
    out.x = x;
    out.y = SqrtExpr(-1);
    out.prefactor = SqrtExpr(1);
    out.argument = out.y / out.x;
    out.note = "one-mass theta^2: the (x-y) numerator cancels the 1/(x-y) of the integral, period log(y/x)";
    return out;
}

// ---------------------------------------------------------------- rendering

std::string CoactionFactor::render(const std::string& side) const {
    std::string s;
    switch (kind) {
        case Kind::Amplitude: s = label.empty() ? "I^" + side + "_G" : label; break;
        case Kind::Unit: s = "1"; break;
        case Kind::LefschetzSquared: s = "(L^" + side + ")^2"; break;
        case Kind::Label: s = label; break;
        case Kind::Logs: {
            for (size_t i = 0; i < pieces.size(); ++i) {
                const auto& p = pieces[i];
                std::string coeff;
                if (p.coefficient.canonical() != SqrtExpr(1).canonical()) coeff = p.coefficient.to_string() + "*";
                if (!p.marker.empty()) coeff += p.marker + "*";
                s += (i ? " + " : "") + coeff + p.function + "^" + side + "(" + p.argument.to_string() + ")";
            }
            if (pieces.size() > 1) s = "(" + s + ")";
            break;
        }
    }
    if (times_lefschetz) s += " L^" + side;
    return s;
}

std::string CoactionTerm::render() const {
    std::string s = motivic.render("m") + "  (x)  " + derham.render("dr");
    s += "    [weights " + std::to_string(motivic_weight) + "|" + std::to_string(derham_weight) + "]";
    if (divergent) s += " [divergent]";
    return s;
}

std::string Coaction::render() const {
    std::ostringstream os;
    os << "coaction of " << graph << ": " << terms.size() << " terms\n";
    for (size_t i = 0; i < terms.size(); ++i) {
        os << "  " << (i + 1) << ". " << terms[i].render() << "\n";
        if (!terms[i].provenance.empty()) os << "       from: " << terms[i].provenance << "\n";
        if (!terms[i].note.empty()) os << "       note: " << terms[i].note << "\n";
    }
    for (const auto& u : undetermined) os << "  undetermined constant: " << u << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

// ---------------------------------------------------------------- box

std::vector<std::vector<SqrtExpr>> inverse_expr(const PolyMatrix& c) {
    int n = static_cast<int>(c.size());
    Poly det = det_laplace(c);
    if (det.is_zero()) throw SingularMatrixError("quadric matrix is singular");
    SqrtExpr d = E(det);
    std::vector<std::vector<SqrtExpr>> u(n, std::vector<SqrtExpr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i][j] = E(cofactor(c, j, i)) / d;
    return u;
}

SqrtExpr f_jk_expr(const std::vector<std::vector<SqrtExpr>>& u, int j, int k) {
    SqrtExpr w = SqrtExpr::sqrt(u[j][k] * u[j][k] - u[j][j] * u[k][k]);
    return (w - u[j][k]) / (w + u[j][k]);
}

SqrtExpr p_jk_expr(const Poly& det_d, const Poly& det_c) {
    return SqrtExpr::sqrt(SqrtExpr::abs(E(det_d))) / (SqrtExpr(8) * SqrtExpr::sqrt(SqrtExpr::abs(E(det_c))));
}

BoxCoactionData box_coaction_data(const FeynmanGraph& g, const std::map<int, Rational>& values) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 4) throw std::invalid_argument("box coaction expects a one-loop 4-edge graph");
    for (const auto& e : g.edges)
        if (e.massless()) throw std::invalid_argument("box coaction needs non-vanishing masses (edge " + e.id + ")");
    BoxCoactionData out;
    out.c = specialize_entries(quadratic_form_matrix(symanzik(g).xi).entries, values);
    out.det_c = det_laplace(out.c);
    if (out.det_c.is_zero()) throw SingularMatrixError("degenerate quadric: det C = 0");
    out.u = inverse_expr(out.c);
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
            BoxPairData p;
            p.j = j;
            p.k = k;
            std::vector<int> rest;
            for (int i = 0; i < 4; ++i)
                if (i != j && i != k) rest.push_back(i);
            p.a = rest[0];
            p.b = rest[1];
            PolyMatrix d = face_matrix(out.c, p.a, p.b);
            p.det_d = det2(d);
            p.motivic_prefactor = SqrtExpr(1) / SqrtExpr::sqrt(SqrtExpr(4) * SqrtExpr::abs(E(p.det_d)));
            auto [u0, u1] = quadric_roots(d[0][0], d[0][1], d[1][1]);
            p.motivic_argument = cross_ratio(SqrtExpr(), std::nullopt, u0, u1);
            p.p = p_jk_expr(p.det_d, out.det_c);
            p.f = f_jk_expr(out.u, j, k);
            out.pairs.push_back(p);
        }
    return out;
}

Coaction box_coaction(const FeynmanGraph& g, const std::map<int, Rational>& values) {
    auto data = box_coaction_data(g, values);
    Coaction co;
    co.graph = g.name;
    CoactionTerm first;
    first.motivic.kind = CoactionFactor::Kind::Amplitude;
    first.derham.kind = CoactionFactor::Kind::LefschetzSquared;
    first.motivic_weight = 4;
    first.derham_weight = 0;
    first.provenance = "leading term of the box coaction";
    co.terms.push_back(first);
    for (const auto& p : data.pairs) {
        CoactionTerm t;
        t.motivic.kind = CoactionFactor::Kind::Logs;
        t.motivic.pieces.push_back({p.motivic_prefactor, "", "log", p.motivic_argument});
        t.derham.kind = CoactionFactor::Kind::Logs;
        t.derham.pieces.push_back({p.p, "", "log", p.f});
        t.derham.times_lefschetz = true;
        t.motivic_weight = 2;
        t.derham_weight = 2;
        t.provenance = "face G/{" + g.edges[p.j].id + "," + g.edges[p.k].id + "}: bubble period (x) f_jk from U = C^-1";
        co.terms.push_back(t);
    }
    CoactionTerm last;
    last.motivic.kind = CoactionFactor::Kind::Unit;
    last.derham.kind = CoactionFactor::Kind::Amplitude;
    last.motivic_weight = 0;
    last.derham_weight = 4;
    last.provenance = "trailing term of the box coaction";
    co.terms.push_back(last);
    co.notes.push_back("P_jk = sqrt|det D_jk| / (8 sqrt|det C|); middle prefactor product = 1/(16 sqrt|det C|)");
    return co;
}

// ---------------------------------------------------------------- triangle

MasslessTriangleGeometry massless_triangle_geometry(const FeynmanGraph& g) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 3) throw std::invalid_argument("expects a triangle graph");
    for (const auto& e : g.edges)
        if (!e.massless()) throw std::invalid_argument("expects all internal masses to vanish");
    auto sp = symanzik(g);
    const KPoly& xi = sp.xi;
    // q_i^2 is the coefficient of alpha_j alpha_k (i, j, k distinct)
    auto coeff2 = [&](int j, int k) {
        KPoly::Exponents e(3, 0);
        e[j] += 1;
        e[k] += 1;
        return xi.coefficient(e);
    };
    Poly q1 = coeff2(1, 2), q2 = coeff2(0, 2), q3 = coeff2(0, 1);
    MasslessTriangleGeometry out;
    Poly printed = q1 * q1 + q2 * q2 + q3 * q3 - Poly(2) * q1 * q3 - Poly(2) * q2 * q3;
    Poly kallen = printed - Poly(2) * q1 * q2;
    out.printed_radicand = E(printed);
    out.kallen = E(kallen);
    SqrtExpr sp_printed = SqrtExpr::sqrt(E(printed));
    SqrtExpr b = E(q1 + q2 - q3);
    out.printed_f1 = (b + sp_printed) * (b + sp_printed) / (SqrtExpr(4) * E(q1) * E(q2));
    SqrtExpr c_printed = E(q1 + q3 - q2);
    out.printed_f2_correction = (c_printed - sp_printed) / (c_printed + sp_printed);

    // L = V(alpha1 + alpha2 + alpha3), chart alpha2 = 1, coordinate t = alpha1, alpha3 = -1 - t.
    KPoly t = KPoly::alpha(1, 0), one = KPoly::constant(1, Poly(1));
    KPoly on_line = xi.compose({t, one, -t - one});
    Poly qa = on_line.coefficient({2}), qb = on_line.coefficient({1}), qc = on_line.coefficient({0});
    // qa t^2 + qb t + qc = qa t^2 + 2 (qb/2) t + qc
    auto [r_minus, r_plus] = quadric_roots(qa, qb * Rational(1, 2), qc);
    // f0, f1 labelled so that [f0 f1|d1 d3] / [f0 f1|d1 d2] has the printed (c - sqrt)/(c + sqrt) shape
    SqrtExpr f0 = r_plus, f1 = r_minus;
    // D_i cap L: d1 (alpha1 = 0) -> t = 0, d2 (alpha2 = 0) -> infinity, d3 (alpha3 = 0) -> t = -1
    SqrtExpr d1(0), d3(-1);
    out.geometric_d1d2 = cross_ratio(f0, f1, d1, std::nullopt);
    out.geometric_d1d3 = cross_ratio(f0, f1, d1, d3);
    out.geometric_f2_correction = out.geometric_d1d3 / out.geometric_d1d2;
    out.line_points = {f0, f1, d1, d3};

    // Exceptional divisor D_{-i} over the vertex alpha_i = 1: coordinate x = alpha_j / alpha_k.
    // The strict transform of Q meets it along the tangent cone (linear part of Xi at the vertex).
    for (int i = 0; i < 2; ++i) {
        int j = i == 0 ? 1 : 0, k = 2;
        KPoly::Exponents ej(3, 0), ek(3, 0);
        ej[i] = 1, ej[j] = 1;
        ek[i] = 1, ek[k] = 1;
        Poly cj = xi.coefficient(ej), ck = xi.coefficient(ek);
        SqrtExpr u = -E(ck) / E(cj);  // cj x + ck = 0
        // F_i = V(alpha_j + alpha_k) meets D_{-i} at x = -1; p0 = D_j (x = 0), p1 = D_k (x = infinity)
        out.geometric_motivic.push_back(cross_ratio(SqrtExpr(-1), u, SqrtExpr(0), std::nullopt));
    }
    out.printed_motivic = {E(q2) / E(q3), E(q1) / E(q3)};
    return out;
}

namespace {

struct FaceInfo {
    int i, j, k;  // face alpha_i = 0, remaining j < k
    PolyMatrix d;
    bool mj, mk;  // masses non-vanishing
};

CoactionTerm face_term(const FeynmanGraph& g, const FaceInfo& f, int theta) {
    CoactionTerm t;
    t.motivic.kind = CoactionFactor::Kind::Logs;
    t.motivic_weight = 2;
    t.derham_weight = 2;
    std::string face = "G/" + g.edges[f.i].id;
    if (theta == 1) {
        auto [u0, u1] = quadric_roots(f.d[0][0], f.d[0][1], f.d[1][1]);
        SqrtExpr pre = SqrtExpr(1) / SqrtExpr::sqrt(SqrtExpr(4) * SqrtExpr::abs(E(det2(f.d))));
        t.motivic.pieces.push_back({pre, "", "log", cross_ratio(SqrtExpr(), std::nullopt, u0, u1)});
    } else {
        // chart alpha_j = 1, coordinate alpha_k/alpha_j; L|face at -1
        SqrtExpr x;
        if (f.mj && f.mk) x = quadric_roots(f.d[1][1], f.d[0][1], f.d[0][0]).second;
        else if (f.mk) x = SqrtExpr(-2) * E(f.d[0][1]) / E(f.d[1][1]);  // m_j = 0: other root is 0
        else x = -E(f.d[0][0]) / (SqrtExpr(2) * E(f.d[0][1]));          // m_k = 0: other root is infinity
        t.motivic.pieces.push_back({SqrtExpr(1), "", "log", SqrtExpr(-1) / x});
    }
    t.derham.kind = CoactionFactor::Kind::Label;
    t.derham.label = "[mot_G, [omega^" + std::to_string(theta) + "_" + std::to_string(f.i + 1) + "]^v, [omega_G]]^dr";
    t.provenance = "I^m_" + face + "(theta^" + std::to_string(theta) + ")";
    return t;
}

}  // namespace

Coaction triangle_coaction(const FeynmanGraph& g) {
    if (!g.is_one_loop_cycle() || g.num_edges() != 3) throw std::invalid_argument("triangle coaction expects a one-loop 3-edge graph");
    auto sp = symanzik(g);
    PolyMatrix c = quadratic_form_matrix(sp.xi).entries;
    int v = static_cast<int>(g.massless_edges().size());
    Coaction co;
    co.graph = g.name;
    CoactionTerm first;
    first.motivic.kind = CoactionFactor::Kind::Amplitude;
    first.derham.kind = CoactionFactor::Kind::LefschetzSquared;
    first.motivic_weight = 4;
    first.provenance = "leading term";
    co.terms.push_back(first);

    std::vector<FaceInfo> faces;
    for (int i = 0; i < 3; ++i) {
        FaceInfo f;
        f.i = i;
        f.j = i == 0 ? 1 : 0;
        f.k = i == 2 ? 1 : 2;
        f.d = face_matrix(c, f.j, f.k);
        f.mj = !g.edges[f.j].massless();
        f.mk = !g.edges[f.k].massless();
        faces.push_back(f);
    }
    if (v == 0) {
        co.terms.push_back(face_term(g, faces[0], 1));
        for (int i = 1; i < 3; ++i)
            for (int th = 1; th <= 2; ++th) co.terms.push_back(face_term(g, faces[i], th));
        co.notes.push_back("six face classes omega^j_i satisfy one linear relation; omega^2_1 is the dropped one");
    } else if (v == 1) {
        int z = g.massless_edges()[0];
        // the face opposite the massless edge keeps both classes, the two faces through the blown-up vertex keep theta^2
        co.terms.push_back(face_term(g, faces[z], 1));
        co.terms.push_back(face_term(g, faces[z], 2));
        for (int i = 0; i < 3; ++i)
            if (i != z) co.terms.push_back(face_term(g, faces[i], 2));
        co.notes.push_back("vanishing mass m" + std::to_string(z + 1) + ": vertex V(alpha_j) cap V(alpha_k) blown up");
    } else if (v == 2) {
        for (const auto& f : faces) {
            if (f.mj && f.mk) {
                co.terms.push_back(face_term(g, f, 1));
                co.terms.push_back(face_term(g, f, 2));
            } else if (f.mj || f.mk) {
                co.terms.push_back(face_term(g, f, 2));
            }
        }
        int middle = static_cast<int>(co.terms.size()) - 1;
        if (middle != 5 - v)
            co.notes.push_back("face rule gives " + std::to_string(middle) + " middle terms but gr^W_2 has rank " +
                               std::to_string(5 - v) + "; with two vanishing masses the weight-2 periods are not all face periods");
    } else {
        auto geo = massless_triangle_geometry(g);
        for (int which = 0; which < 2; ++which) {
            CoactionTerm t;
            t.motivic.kind = CoactionFactor::Kind::Logs;
            t.motivic.pieces.push_back({SqrtExpr(1), "a1", "log", geo.printed_motivic[0]});
            t.motivic.pieces.push_back({SqrtExpr(1), "a2", "log", geo.printed_motivic[1]});
            t.derham.kind = CoactionFactor::Kind::Logs;
            SqrtExpr arg = which == 0 ? geo.printed_f1 : geo.printed_f1 * geo.printed_f2_correction;
            t.derham.pieces.push_back({SqrtExpr(1), "", "log", arg});
            t.motivic_weight = 2;
            t.derham_weight = 2;
            t.provenance = which == 0 ? "massless triangle, [f0f1|d1d2] as printed" : "massless triangle, [f0f1|d1d3] as printed";
            co.terms.push_back(t);
        }
        co.undetermined = {"a1", "a2"};
        co.notes.push_back("geometric [f0f1|d1d2] = " + geo.geometric_d1d2.to_string());
        co.notes.push_back("geometric [f0f1|d1d3]/[f0f1|d1d2] = " + geo.geometric_f2_correction.to_string());
        co.notes.push_back("geometric motivic cross-ratios: " + geo.geometric_motivic[0].to_string() + ", " +
                           geo.geometric_motivic[1].to_string());
    }
    CoactionTerm last;
    last.motivic.kind = CoactionFactor::Kind::Unit;
    last.derham.kind = CoactionFactor::Kind::Amplitude;
    last.derham_weight = 4;
    last.provenance = "trailing term";
    co.terms.push_back(last);
    return co;
}

// ---------------------------------------------------------------- dilogarithm

std::vector<CoactionTerm> dilog_coaction(const SqrtExpr& x) {
    std::vector<CoactionTerm> out(3);
    out[0].motivic.kind = CoactionFactor::Kind::Logs;
    out[0].motivic.pieces.push_back({SqrtExpr(1), "", "Li2", x});
    out[0].derham.kind = CoactionFactor::Kind::Label;
    out[0].derham.label = "L^dr";
    out[0].motivic_weight = 4;
    out[1].motivic.kind = CoactionFactor::Kind::Logs;
    out[1].motivic.pieces.push_back({SqrtExpr(1), "", "Li1", x});
    out[1].derham.kind = CoactionFactor::Kind::Logs;
    out[1].derham.pieces.push_back({SqrtExpr(1), "", "log", x});
    out[1].derham.times_lefschetz = true;
    out[1].motivic_weight = 2;
    out[1].derham_weight = 2;
    if (structurally_zero(x - SqrtExpr(1))) {
        out[1].divergent = true;
        out[1].note = "Li1(1) = -log(0) diverges; not evaluated";
    }
    out[2].motivic.kind = CoactionFactor::Kind::Unit;
    out[2].derham.kind = CoactionFactor::Kind::Logs;
    out[2].derham.pieces.push_back({SqrtExpr(1), "", "Li2", x});
    out[2].derham_weight = 4;
    for (auto& t : out) t.provenance = "coaction of Li2";
    return out;
}

std::vector<CoactionTerm> dilog_coaction_im_unit(const SqrtExpr& z) {
    SqrtExpr zbar = SqrtExpr(1) / z;
    std::vector<CoactionTerm> out(3);
    // Im is (1/2i)(. - conj); on the unit circle conj z = 1/z
    SqrtExpr half_i_inv(Rational(1, 2));  // times 1/i, carried in the marker
    out[0].motivic.kind = CoactionFactor::Kind::Logs;
    out[0].motivic.pieces.push_back({half_i_inv, "1/i", "Li2", z});
    out[0].motivic.pieces.push_back({-half_i_inv, "1/i", "Li2", zbar});
    out[0].derham.kind = CoactionFactor::Kind::LefschetzSquared;
    out[0].motivic_weight = 4;
    // Li1(z) (x) log z - Li1(1/z) (x) log(1/z) = (Li1(z) + Li1(1/z)) (x) log z
    //   = -log((1-z)(1-1/z)) (x) log z = -log(-(1-z)^2/z) (x) log z
    out[1].motivic.kind = CoactionFactor::Kind::Logs;
    SqrtExpr arg = (SqrtExpr(1) - z) * (SqrtExpr(1) - z) / z;
    out[1].motivic.pieces.push_back({-half_i_inv, "1/i", "log", arg});
    out[1].derham.kind = CoactionFactor::Kind::Logs;
    out[1].derham.pieces.push_back({SqrtExpr(1), "", "log", z});
    out[1].motivic_weight = 2;
    out[1].derham_weight = 2;
    out[1].note = "Li1(z) and Li1(1/z) collapse to one log; (1-z)(1-1/z) = -(1-z)^2/z, so the sign in front is negative";
    out[2].motivic.kind = CoactionFactor::Kind::Unit;
    out[2].derham.kind = CoactionFactor::Kind::Logs;
    out[2].derham.pieces.push_back({half_i_inv, "1/i", "Li2", z});
    out[2].derham.pieces.push_back({-half_i_inv, "1/i", "Li2", zbar});
    out[2].derham_weight = 4;
    for (auto& t : out) t.provenance = "coaction of Im Li2 on the unit circle";
    return out;
}

std::vector<long> weight_graded_dims(int n) {
    if (n < 3) throw std::invalid_argument("weight_graded_dims needs n >= 3");
    if (n > 60) throw std::invalid_argument("weight_graded_dims: n too large");
    std::vector<long> out{1, binom(n + 1, n - 1), binom(n + 1, n - 3)};
    if (n >= 5) out.push_back(binom(n + 1, n - 5) - binom(n + 1, n - 6));
    return out;
}

std::vector<long> triangle_graded_dims(int v) {
    if (v < 0 || v > 3) throw std::invalid_argument("number of vanishing masses must be 0..3");
    return {1, 5 - v, 1};
}

}  // namespace oneloop

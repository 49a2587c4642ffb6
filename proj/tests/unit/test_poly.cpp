#include <doctest.h>

#include "oneloop/linalg.hpp"
#include "oneloop/symanzik.hpp"

#include <random>

using namespace oneloop;

namespace {

KPoly a(int n, int i) { return KPoly::alpha(n, i); }

Rational rnd_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

QMatrix random_matrix(int n, std::mt19937_64& rng) {
    QMatrix m(n, QVector(n));
    for (auto& row : m)
        for (auto& x : row) x = rnd_q(rng);
    return m;
}

// plain Gauss-Jordan on an augmented matrix
QMatrix gauss_jordan_inverse(QMatrix m) {
    int n = static_cast<int>(m.size());
    QMatrix inv = identity_matrix(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational d = m[c][c];
        for (int j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Rational det_cofactor(const QMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Rational s = 0;
    for (int j = 0; j < n; ++j) {
        QMatrix minor;
        for (int r = 1; r < n; ++r) {
            QVector row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Rational t = m[0][j] * det_cofactor(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("binomial square") {
    KPoly s = a(2, 0) + a(2, 1);
    KPoly expect = a(2, 0) * a(2, 0) + KPoly::constant(2, Poly(2)) * a(2, 0) * a(2, 1) + a(2, 1) * a(2, 1);
    CHECK(s * s == expect);
    CHECK(s.pow(2) == expect);
}

TEST_CASE("triangle second Symanzik assembled by hand") {
    auto g = triangle_graph();
    auto sp = symanzik(g);
    KPoly mass = Poly::symbol("m1^2") * a(3, 0) + Poly::symbol("m2^2") * a(3, 1) + Poly::symbol("m3^2") * a(3, 2);
    CHECK(sp.psi * mass + sp.phi == sp.xi);
}

TEST_CASE("products match a naive convolution") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ex(0, 3);
    for (int trial = 0; trial < 5; ++trial) {
        KPoly p(3), q(3);
        std::vector<std::pair<KPoly::Exponents, Rational>> tp, tq;
        for (int k = 0; k < 10; ++k) {
            KPoly::Exponents e1{ex(rng), ex(rng), ex(rng)}, e2{ex(rng), ex(rng), ex(rng)};
            Rational c1 = rnd_q(rng), c2 = rnd_q(rng);
            p.add_term(e1, Poly(c1));
            q.add_term(e2, Poly(c2));
            tp.emplace_back(e1, c1);
            tq.emplace_back(e2, c2);
        }
        std::map<KPoly::Exponents, Rational> naive;
        for (auto& [e1, c1] : tp)
            for (auto& [e2, c2] : tq) {
                KPoly::Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
                naive[e] += c1 * c2;
            }
        KPoly expect(3);
        for (auto& [e, c] : naive)
            if (c != 0) expect.add_term(e, Poly(c));
        CHECK(p * q == expect);
    }
}

TEST_CASE("partial derivatives") {
    KPoly p = a(2, 0) * a(2, 0) + KPoly::constant(2, Poly(4)) * a(2, 0) * a(2, 1);
    CHECK(p.partial(0) == KPoly::constant(2, Poly(2)) * a(2, 0) + KPoly::constant(2, Poly(4)) * a(2, 1));
    CHECK(KPoly::constant(2, Poly::symbol("m1^2")).partial(0).is_zero());
}

TEST_CASE("partials of the box quadric are 2 C alpha") {
    auto xi = symanzik(box_graph()).xi;
    auto qf = quadratic_form_matrix(xi);
    for (int i = 0; i < 4; ++i) {
        KPoly row(4);
        for (int j = 0; j < 4; ++j) row += KPoly::constant(4, qf.entries[i][j] * Rational(2)) * a(4, j);
        CHECK(xi.partial(i) == row);
    }
}

TEST_CASE("quadratic form matrices") {
    auto m = quadratic_form_matrix(a(2, 0) * a(2, 1));
    CHECK(m.entries[0][0].is_zero());
    CHECK(m.entries[0][1] == Poly(Rational(1, 2)));
    CHECK(m.entries[1][0] == Poly(Rational(1, 2)));

    auto xi = symanzik(bubble_graph()).xi;
    auto c = quadratic_form_matrix(xi);
    Poly off = (Poly::symbol("s[1,1]") + Poly::symbol("m1^2") + Poly::symbol("m2^2")) * Rational(1, 2);
    CHECK(c.entries[0][0] == Poly::symbol("m1^2"));
    CHECK(c.entries[1][1] == Poly::symbol("m2^2"));
    CHECK(c.entries[0][1] == off);

    // box: C_{1,3} = ((q2+q3)^2 + m1^2 + m3^2)/2
    auto cb = quadratic_form_matrix(symanzik(box_graph()).xi);
    Poly q23 = momentum_square(4, {2, 3});
    CHECK(cb.entries[0][2] == (q23 + Poly::symbol("m1^2") + Poly::symbol("m3^2")) * Rational(1, 2));
}

TEST_CASE("alpha C alpha^T reproduces the quadric and the Euler identity holds") {
    for (const auto& g : {bubble_graph(), triangle_graph(), box_graph(), pentagon_graph(), triangle_graph({1})}) {
        auto xi = symanzik(g).xi;
        CHECK(quadratic_form_matrix(xi).to_kpoly() == xi);
        KPoly euler(xi.arity());
        for (int i = 0; i < xi.arity(); ++i) euler += a(xi.arity(), i) * xi.partial(i);
        CHECK(euler == KPoly::constant(xi.arity(), Poly(2)) * xi);
    }
}

TEST_CASE("determinant and inverse") {
    auto id = det_and_inverse(identity_matrix(3));
    CHECK(id.det == 1);
    CHECK(id.inverse == identity_matrix(3));

    QMatrix m{{0, Rational(1, 2)}, {Rational(1, 2), 0}};
    auto r = det_and_inverse(m);
    CHECK(r.det == Rational(-1, 4));
    CHECK(r.inverse == QMatrix{{0, 2}, {2, 0}});

    CHECK_THROWS_AS(det_and_inverse(QMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("inverse against Gauss-Jordan, determinant against cofactor expansion") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 4;
        auto m = random_matrix(n, rng);
        Rational d = det_cofactor(m);
        CHECK(det_bareiss(m) == d);
        if (d == 0) continue;
        CHECK(det_and_inverse(m).inverse == gauss_jordan_inverse(m));
        ++checked;
    }
    CHECK(checked > 80);
}

TEST_CASE("linear solve") {
    auto id = linear_solve(identity_matrix(3), QVector{1, 2, 3});
    CHECK(id.consistent);
    CHECK(id.particular == QVector{1, 2, 3});
    CHECK(id.nullspace.empty());

    // rank 1: x + y = 2, 2x + 2y = 4
    auto def = linear_solve(QMatrix{{1, 1}, {2, 2}}, QVector{2, 4});
    REQUIRE(def.consistent);
    CHECK(def.rank == 1);
    REQUIRE(def.nullspace.size() == 1);
    CHECK(def.particular[0] + def.particular[1] == 2);
    CHECK(def.nullspace[0][0] + def.nullspace[0][1] == 0);

    QMatrix bad{{1, 1}, {1, 1}};
    QVector rhs{0, 1};
    auto inc = linear_solve(bad, rhs);
    CHECK_FALSE(inc.consistent);
    REQUIRE(inc.certificate.size() == 2);
    Rational yb = inc.certificate[0] * rhs[0] + inc.certificate[1] * rhs[1];
    CHECK(yb != 0);
    for (int c = 0; c < 2; ++c) CHECK(inc.certificate[0] * bad[0][c] + inc.certificate[1] * bad[1][c] == 0);
}

TEST_CASE("symbol substitution and evaluation") {
    Poly p = Poly::symbol("x") * Poly::symbol("x") - Poly(3);
    int x = symbol_id("x");
    CHECK(p.evaluate({{x, Rational(2)}}) == 1);
    CHECK(p.substitute({{x, Poly::symbol("y") + Poly(1)}}).evaluate({{symbol_id("y"), Rational(1)}}) == 1);
    CHECK_THROWS_AS(p.evaluate({}), std::out_of_range);
    CHECK(p.derivative(x) == Poly::symbol("x") * Rational(2));
}

TEST_CASE("exact division by alpha powers") {
    KPoly p = a(2, 0) * a(2, 0) * a(2, 1) + a(2, 0) * a(2, 1) * a(2, 1);
    CHECK(p.min_alpha_degree(0) == 1);
    CHECK(p.divide_alpha(0, 1) == a(2, 0) * a(2, 1) + a(2, 1) * a(2, 1));
    CHECK_THROWS(p.divide_alpha(0, 2));
}

}

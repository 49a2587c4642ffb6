#include <doctest.h>

#include "oneloop/coaction.hpp"
#include "oneloop/owbox.hpp"
#include "oneloop/quadrature.hpp"
#include "oneloop/specfun.hpp"
#include "oneloop/verify.hpp"

#include <cmath>

using namespace oneloop;

namespace {

Real tenpow(int e) { return boost::multiprecision::pow(Real(10), e); }

// Catalan's constant from the binomial series
Real catalan_by_series() {
    // G = pi/8 log(2+sqrt3) + 3/8 sum_{k>=0} 1/((2k+1)^2 binom(2k,k))
    Real s = 0, binom = 1;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) binom = binom * (2 * k) * (2 * k - 1) / (Real(k) * k);
        s += 1 / (Real(2 * k + 1) * (2 * k + 1) * binom);
    }
    return real_pi() / 8 * boost::multiprecision::log(2 + boost::multiprecision::sqrt(Real(3))) + Real(3) / 8 * s;
}

KinematicPoint symmetric_box_point() {
    KinematicPoint p;
    for (int i = 1; i <= 3; ++i) {
        p.s[{i, i}] = 1;
        for (int j = i + 1; j <= 3; ++j) p.s[{i, j}] = Rational(-1, 7);
    }
    for (int i = 1; i <= 4; ++i) p.msq["m" + std::to_string(i)] = 1;
    return p;
}

KinematicPoint bubble_point(Rational m1, Rational m2, Rational s11) {
    KinematicPoint p;
    p.msq["m1"] = m1;
    p.msq["m2"] = m2;
    p.s[{1, 1}] = s11;
    return p;
}

}  // namespace

TEST_SUITE("numeval") {

TEST_CASE("classical dilogarithm values") {
    PrecisionGuard g(40);
    Real pi2 = real_pi() * real_pi();
    auto one = li2(Complex(Real(1)), 30);
    CHECK(boost::multiprecision::abs(one.re - pi2 / 6) < tenpow(-25));
    CHECK(boost::multiprecision::abs(one.im) < tenpow(-25));
    auto m1 = li2(Complex(Real(-1)), 30);
    CHECK(boost::multiprecision::abs(m1.re + pi2 / 12) < tenpow(-25));
    auto half = li2(Complex(Real(1) / 2), 30);
    Real l2 = boost::multiprecision::log(Real(2));
    CHECK(boost::multiprecision::abs(half.re - (pi2 / 12 - l2 * l2 / 2)) < tenpow(-25));
    CHECK(li2(Complex(Real(0)), 30).re == 0);
    CHECK_THROWS(li2(Complex(Real(1) / 3), kMaxDigits + 1));
}

TEST_CASE("reflection identity at random points") {
    PrecisionGuard g(30);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3, 3);
    Real pi2 = real_pi() * real_pi();
    for (int k = 0; k < 20; ++k) {
        Complex z(Real(u(rng)), Real(u(rng)));
        Complex one_minus = Complex(Real(1)) - z;
        Complex lhs = li2(z, 30) + li2(one_minus, 30);
        Complex rhs = Complex(pi2 / 6) - log(z) * log(one_minus);
        CHECK(abs(lhs - rhs) < tenpow(-25));
    }
}

TEST_CASE("Clausen function") {
    PrecisionGuard g(40);
    CHECK(boost::multiprecision::abs(im_li2_unit(Real(0))) < tenpow(-35));
    CHECK(boost::multiprecision::abs(im_li2_unit(real_pi())) < tenpow(-35));
    Real g_ref = catalan_by_series();
    CHECK(boost::multiprecision::abs(im_li2_unit(real_pi() / 2) - g_ref) < tenpow(-30));
    CHECK(boost::multiprecision::abs(catalan_constant(40) - g_ref) < tenpow(-30));
    CHECK(im_li2_unit(real_pi() / 2).convert_to<double>() == doctest::Approx(0.9159655942).epsilon(1e-10));
}

TEST_CASE("Clausen function is odd and periodic, and matches Im Li2 on the circle") {
    PrecisionGuard g(30);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int k = 0; k < 50; ++k) {
        Real t(u(rng));
        Real v = im_li2_unit(t);
        CHECK(boost::multiprecision::abs(v + im_li2_unit(-t)) < tenpow(-25));
        CHECK(boost::multiprecision::abs(v - im_li2_unit(t + 2 * real_pi())) < tenpow(-25));
    }
    for (double t : {0.3, 1.7, 2.9, -1.1}) {
        Complex z(boost::multiprecision::cos(Real(t)), boost::multiprecision::sin(Real(t)));
        CHECK(boost::multiprecision::abs(li2(z, 30).im - im_li2_unit(Real(t))) < tenpow(-25));
    }
}

TEST_CASE("the box expression has 42 dilogarithms") {
    auto ow = ow_box_value(box_graph(), symmetric_box_point(), 30);
    CHECK(ow.evaluations == 42);
    CHECK(ow.terms.size() == 6);
    for (const auto& t : ow.terms) CHECK(t.weight[0] == 2);
}

TEST_CASE("dihedral relabelling leaves the box expression unchanged") {
    auto g = box_graph();
    std::mt19937_64 rng(51);
    PrecisionGuard guard(30);
    const int perms[][4] = {{1, 2, 3, 0}, {3, 2, 1, 0}, {2, 3, 0, 1}, {0, 3, 2, 1}};
    for (int k = 0; k < 3; ++k) {
        auto p = random_euclidean_point(g, rng);
        auto c = quadratic_form_matrix(symanzik(g).xi.specialize(symbol_values(g, p))).specialize({});
        auto rc = to_real_matrix(c);
        Real base;
        try {
            base = ow_box_value(rc).value;
        } catch (const std::domain_error&) {
            continue;
        }
        for (const auto& pm : perms) {
            RealMatrix pc(4, std::vector<Real>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) pc[i][j] = rc[pm[i]][pm[j]];
            CHECK(boost::multiprecision::abs(ow_box_value(pc).value - base) < 1e-9 * boost::multiprecision::abs(base));
        }
    }
}

TEST_CASE("box quadrature is twice the printed 42-dilogarithm value") {
    // frozen from cross-evaluation: the printed prefactor is half the simplex integral
    auto g = box_graph();
    auto ig = build_integrand(g, 4);
    auto p = symmetric_box_point();
    QuadratureOptions o;
    o.rel_tol = 1e-8;
    auto q = parametric_quadrature(ig, p, o);
    double ow = ow_box_value(g, p, 30).value.convert_to<double>();
    CHECK(q.value / ow == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("bubble integrals") {
    auto b4 = build_integrand(bubble_graph(), 4);
    auto q = parametric_quadrature(b4, bubble_point(Rational(3, 2), 2, Rational(5, 4)));
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(q.error_estimate >= 0);

    auto b2 = build_integrand(bubble_graph(), 2);
    auto q2 = parametric_quadrature(b2, bubble_point(1, 1, 2));
    CHECK(q2.value == doctest::Approx(std::log(7 + 4 * std::sqrt(3.0)) / (2 * std::sqrt(3.0))).epsilon(1e-8));
}

TEST_CASE("bubble d=2 quadrature equals the exact period at generic masses") {
    auto g = bubble_graph();
    auto ig = build_integrand(g, 2);
    auto bp = bubble_period(g, BubbleVariant::TwoMass);
    PrecisionGuard guard(30);
    for (auto [m1, m2, s] : {std::tuple{Rational(3, 2), Rational(2), Rational(5, 4)}, std::tuple{Rational(1, 2), Rational(3), Rational(7)}}) {
        auto p = bubble_point(m1, m2, s);
        auto vals = symbol_values(g, p);
        Complex v = eval_expr(bp.prefactor, vals).value * log(eval_expr(bp.argument, vals).value);
        double exact = std::abs(v.re.convert_to<double>());
        auto q = parametric_quadrature(ig, p);
        CHECK(q.value == doctest::Approx(exact).epsilon(1e-8));
    }
}

TEST_CASE("Monte Carlo is reproducible and its error bars are honest") {
    auto ig = build_integrand(bubble_graph(), 4);
    auto p = bubble_point(Rational(3, 2), 2, Rational(5, 4));
    QuadratureOptions o;
    o.method = QuadMethod::MonteCarlo;
    o.budget = 4000;
    o.seed = 77;
    auto a = parametric_quadrature(ig, p, o);
    auto b = parametric_quadrature(ig, p, o);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.seed == 77);

    int covered = 0;
    for (int s = 1; s <= 100; ++s) {
        o.seed = static_cast<std::uint64_t>(s);
        auto r = parametric_quadrature(ig, p, o);
        CHECK(r.error_estimate >= 0);
        covered += std::abs(r.value - 1) <= 3 * r.error_estimate;
    }
    CHECK(covered >= 95);
}

TEST_CASE("counter-based generator") {
    CHECK(uniform_double(5, 10) == uniform_double(5, 10));
    CHECK(uniform_double(5, 10) != uniform_double(6, 10));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        double x = uniform_double(1, i);
        CHECK(x >= 0);
        CHECK(x < 1);
    }
}

TEST_CASE("cube integration of a polynomial") {
    QuadratureOptions o;
    auto r = integrate_cube(3, [](const double* x) { return x[0] * x[1] * x[1] + x[2]; }, o);
    CHECK(r.value == doctest::Approx(1.0 / 6 + 0.5).epsilon(1e-12));
}

TEST_CASE("expression evaluation") {
    PrecisionGuard guard(60);
    int x = symbol_id("x"), y = symbol_id("y");
    auto X = SqrtExpr::symbol("x"), Y = SqrtExpr::symbol("y");
    auto e = SqrtExpr::sqrt(X + SqrtExpr::sqrt(Y)) / SqrtExpr::sqrt(X * Y + 1);
    std::map<int, Rational> v{{x, Rational(3, 7)}, {y, Rational(11, 5)}};
    Real xr = to_real(v[x]), yr = to_real(v[y]);
    Real ref = boost::multiprecision::sqrt(xr + boost::multiprecision::sqrt(yr)) / boost::multiprecision::sqrt(xr * yr + 1);
    auto got = eval_expr(e, v, 50);
    CHECK(boost::multiprecision::abs(got.value.re - ref) < tenpow(-45));
    CHECK_FALSE(got.negative_radicand);

    auto neg = eval_expr(SqrtExpr::sqrt(X), {{x, Rational(-4)}}, 30);
    CHECK(neg.negative_radicand);
    CHECK(neg.value.im.convert_to<double>() == doctest::Approx(2.0));

    CHECK_THROWS_AS(eval_expr(SqrtExpr(1) / (X - 1), {{x, Rational(1)}}, 30), std::domain_error);
    CHECK_THROWS_AS(eval_expr(X, {}, 30), std::out_of_range);
    CHECK_THROWS(SqrtExpr(1) / SqrtExpr(0));
}

}

#include <doctest.h>

#include "oneloop/blowup.hpp"
#include "oneloop/coaction.hpp"
#include "oneloop/symanzik.hpp"
#include "oneloop/verify.hpp"

#include <cmath>

using namespace oneloop;

namespace {

double re(const SqrtExpr& e, const std::map<int, Rational>& vals) {
    PrecisionGuard g(30);
    return eval_expr(e, vals).value.re.convert_to<double>();
}

Complex val(const SqrtExpr& e, const std::map<int, Rational>& vals) { return eval_expr(e, vals, 30).value; }

std::map<int, Rational> bubble_values(Rational m1, Rational m2, Rational s11) {
    return {{symbol_id("m1^2"), m1}, {symbol_id("m2^2"), m2}, {symbol_id("s[1,1]"), s11}};
}

}  // namespace

TEST_SUITE("coaction") {

TEST_CASE("cross-ratios") {
    auto x = SqrtExpr::symbol("x"), y = SqrtExpr::symbol("y");
    CHECK(equal_symbolic(cross_ratio(SqrtExpr(0), std::nullopt, x, y), x / y));
    auto p0 = SqrtExpr::symbol("p"), p1 = SqrtExpr::symbol("r"), p3 = SqrtExpr::symbol("t");
    CHECK(is_zero_symbolic(cross_ratio(p0, p1, p0, p3)));
    CHECK_THROWS(cross_ratio(p0, p0, p0, p3));
}

TEST_CASE("bubble roots and cross-ratio at m1 = m2 = 1, q^2 = 2") {
    auto vals = bubble_values(1, 1, 2);
    auto bp = bubble_period(bubble_graph(), BubbleVariant::TwoMass);
    // roots of a^2 + 4a + 1 are -2 +- sqrt 3
    double x = re(bp.x, vals), y = re(bp.y, vals);
    CHECK(std::min(x, y) == doctest::Approx(-2 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::max(x, y) == doctest::Approx(-2 + std::sqrt(3.0)).epsilon(1e-14));
    double arg = re(bp.argument, vals);
    CHECK(std::max(arg, 1 / arg) == doctest::Approx(7 + 4 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(re(bp.prefactor, vals) == doctest::Approx(1 / (2 * std::sqrt(3.0))).epsilon(1e-14));
    double period = re(bp.prefactor, vals) * std::abs(std::log(arg));
    CHECK(period == doctest::Approx(0.76035).epsilon(1e-5));
    CHECK(std::log(y / x) / (x - y) == doctest::Approx(period).epsilon(1e-12));
}

TEST_CASE("double roots are rejected") {
    CHECK_THROWS(quadric_roots(Poly(1), Poly(1), Poly(1)));
    CHECK_THROWS(quadric_roots(Poly(0), Poly(1), Poly(1)));
}

TEST_CASE("box coaction has eight terms") {
    auto co = box_coaction(box_graph());
    CHECK(co.terms.size() == 8);
    CHECK(co.terms.front().motivic.kind == CoactionFactor::Kind::Amplitude);
    CHECK(co.terms.back().derham.kind == CoactionFactor::Kind::Amplitude);
    for (const auto& t : co.terms) CHECK(t.motivic_weight + t.derham_weight == 4);
    CHECK_THROWS(box_coaction(triangle_graph()));
}

TEST_CASE("f_jk is one when U_jk vanishes") {
    std::vector<std::vector<SqrtExpr>> u(4, std::vector<SqrtExpr>(4, SqrtExpr(0)));
    for (int i = 0; i < 4; ++i) u[i][i] = SqrtExpr(Rational(i + 2));
    auto f = f_jk_expr(u, 0, 1);
    auto v = val(f, {});
    CHECK(v.re.convert_to<double>() == doctest::Approx(1.0).epsilon(1e-25));
    CHECK(std::abs(v.im.convert_to<double>()) < 1e-25);
}

TEST_CASE("prefactor product is 1/(16 sqrt|det C|)") {
    auto g = box_graph();
    std::mt19937_64 rng(41);
    std::vector<KinematicPoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(random_euclidean_point(g, rng));
    auto c = check_prefactor_identity(g, pts);
    CHECK(c.passed);
}

TEST_CASE("f_jk symmetry and the conjugate root") {
    auto g = box_graph();
    std::mt19937_64 rng(43);
    for (int k = 0; k < 5; ++k) {
        auto vals = symbol_values(g, random_euclidean_point(g, rng));
        auto data = box_coaction_data(g, vals);
        for (int j = 0; j < 4; ++j)
            for (int l = j + 1; l < 4; ++l) {
                auto f = val(f_jk_expr(data.u, j, l), {});
                auto fs = val(f_jk_expr(data.u, l, j), {});
                CHECK(abs(f - fs).convert_to<double>() < 1e-25);
                // flip the square root by hand: (-r - U)/(-r + U) with r^2 = U_jk^2 - U_jj U_kk
                const auto& u = data.u;
                auto r = SqrtExpr::sqrt(u[j][l] * u[j][l] - u[j][j] * u[l][l]);
                auto flipped = val((-r - u[j][l]) / (-r + u[j][l]), {});
                CHECK(abs(f * flipped - Complex(Real(1))).convert_to<double>() < 1e-25);
            }
    }
}

TEST_CASE("coaction commutes with specialization") {
    auto g = box_graph();
    auto symbolic = box_coaction_data(g);
    std::mt19937_64 rng(47);
    for (int k = 0; k < 3; ++k) {
        auto vals = symbol_values(g, random_euclidean_point(g, rng));
        auto direct = box_coaction_data(g, vals);
        for (size_t i = 0; i < 6; ++i) {
            auto a = val(symbolic.pairs[i].f, vals), b = val(direct.pairs[i].f, {});
            CHECK(abs(a - b).convert_to<double>() < 1e-20);
            auto pa = val(symbolic.pairs[i].p, vals), pb = val(direct.pairs[i].p, {});
            CHECK(abs(pa - pb).convert_to<double>() < 1e-20);
            auto ma = val(symbolic.pairs[i].motivic_argument, vals), mb = val(direct.pairs[i].motivic_argument, {});
            CHECK(abs(ma - mb).convert_to<double>() < 1e-20 * (1 + abs(ma).convert_to<double>()));
        }
    }
}

TEST_CASE("triangle coactions") {
    auto generic = triangle_coaction(triangle_graph());
    CHECK(generic.terms.size() == 7);  // leading, five middle, trailing
    auto massless = triangle_coaction(triangle_graph({1, 2, 3}));
    CHECK(massless.terms.size() == 4);
    CHECK(massless.undetermined.size() == 2);
}

TEST_CASE("massless triangle geometry") {
    auto g = triangle_graph({1, 2, 3});
    auto geo = massless_triangle_geometry(g);
    auto q1 = momentum_square(3, {1}), q2 = momentum_square(3, {2}), q3 = momentum_square(3, {3});
    CHECK(equal_symbolic(geo.printed_motivic[0], SqrtExpr(q2) / SqrtExpr(q3)));
    CHECK(equal_symbolic(geo.printed_motivic[1], SqrtExpr(q1) / SqrtExpr(q3)));
    // the geometric cross-ratios are the same ratios, in the inverse orientation
    CHECK(equal_symbolic(geo.geometric_motivic[0], SqrtExpr(q3) / SqrtExpr(q2)));
    CHECK(equal_symbolic(geo.geometric_motivic[1], SqrtExpr(q3) / SqrtExpr(q1)));

    SqrtExpr printed_rad = SqrtExpr(q1 * q1 + q2 * q2 + q3 * q3 - q1 * q3 * Rational(2) - q2 * q3 * Rational(2));
    SqrtExpr b = SqrtExpr(q1 + q2 - q3);
    SqrtExpr top = b + SqrtExpr::sqrt(printed_rad);
    CHECK(equal_symbolic(geo.printed_f1, top * top / SqrtExpr(q1 * q2 * Rational(4))));

    // q1^2 = q2^2 = q3^2 = 1: printed radicand is -1
    std::map<int, Rational> ones{{symbol_id("s[1,1]"), 1}, {symbol_id("s[2,2]"), 1}, {symbol_id("s[1,2]"), Rational(-1, 2)}};
    auto f1 = eval_expr(geo.printed_f1, ones, 30);
    CHECK(f1.negative_radicand);
    CHECK(abs(f1.value.im) > 0);
}

TEST_CASE("dilogarithm coaction") {
    auto x = SqrtExpr::symbol("x");
    auto terms = dilog_coaction(x);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].motivic_weight == 4);
    CHECK(terms[1].motivic_weight == 2);
    CHECK(terms[2].motivic_weight == 0);
    for (const auto& t : terms) CHECK_FALSE(t.divergent);
    CHECK(dilog_coaction(SqrtExpr(1))[1].divergent);
    CHECK(dilog_coaction_im_unit(SqrtExpr::symbol("z")).size() == 3);
}

TEST_CASE("weight-graded dimensions") {
    CHECK(weight_graded_dims(3) == std::vector<long>{1, 6, 1});
    CHECK(weight_graded_dims(4) == std::vector<long>{1, 10, 5});
    CHECK(weight_graded_dims(5) == std::vector<long>{1, 15, 15, 1});
    CHECK(weight_graded_dims(6) == std::vector<long>{1, 21, 35, 6});
    for (int v = 0; v <= 3; ++v) CHECK(triangle_graded_dims(v) == std::vector<long>{1, 5 - v, 1});
    CHECK_THROWS(weight_graded_dims(2));
    CHECK_THROWS(triangle_graded_dims(4));
}

TEST_CASE("blow-up charts") {
    auto g = triangle_graph({1});
    auto charts = admissible_charts(g);
    CHECK(charts.size() == 2);
    for (const auto& c : charts) {
        auto rep = blowup_pullback(g, c);
        CHECK(rep.division_exact);
        CHECK(rep.pole_free);
        CHECK(rep.net_order >= 0);
    }
    // away from the exceptional divisor the pullback is a relabelled dehomogenization
    auto away = blowup_pullback(g, BlowupChart{0, ChartKind::Away});
    CHECK(away.exceptional_var == -1);
    auto xi = symanzik(g).xi;
    // alpha_1 = b1, alpha_2 = 1, alpha_3 = b2
    std::vector<KPoly> images{KPoly::alpha(2, 0), KPoly::constant(2, Poly(1)), KPoly::alpha(2, 1)};
    CHECK(away.xi == xi.compose(images));
    // massive vertices only admit the away chart
    CHECK_THROWS(blowup_pullback(g, BlowupChart{1, ChartKind::Exceptional1}));
}

TEST_CASE("every vanishing-mass configuration is pole-free") {
    for (const auto& c : check_blowups())
        if (c.name.find("verbatim") == std::string::npos) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("printed chart: Psi and the momentum part agree") {
    auto rep = printed_chart_check(triangle_graph({3}));
    CHECK(rep.psi_matches);
    CHECK(rep.momentum_part_matches);
}

}

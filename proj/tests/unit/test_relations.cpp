#include <doctest.h>

#include "oneloop/boxfamily.hpp"
#include "oneloop/relations.hpp"

#include <boost/multiprecision/mpfr.hpp>

using namespace oneloop;

namespace {

Real lg(const Real& x) { return boost::multiprecision::log(x); }

// columns log f_i(x, y) for a list of rational functions given as callbacks
LogFamily family(const std::vector<std::string>& names, std::function<RealVector(const RealVector&)> eval, int dim = 2) {
    LogFamily f;
    f.name = "test";
    f.names = names;
    f.parameter_dim = dim;
    f.evaluate = std::move(eval);
    f.sample = [dim](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(0.5, 2.5);
        RealVector v;
        for (int i = 0; i < dim; ++i) v.push_back(Real(u(rng)));
        return v;
    };
    return f;
}

LogFamily monomial_family() {
    return family({"x", "y", "x*y", "x/y", "x+y"}, [](const RealVector& p) {
        const Real &x = p[0], &y = p[1];
        return RealVector{lg(x), lg(y), lg(x * y), lg(x / y), lg(x + y)};
    });
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("log 2, log 3, log 6") {
    PrecisionGuard g(50);
    auto r = integer_relations({lg(Real(2)), lg(Real(3)), lg(Real(6))}, 50, 1000);
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<long>{1, 1, -1});
}

TEST_CASE("no relation among log 2, log 3, log 5") {
    PrecisionGuard g(50);
    CHECK_FALSE(integer_relations({lg(Real(2)), lg(Real(3)), lg(Real(5))}, 50, 1000).has_value());
}

TEST_CASE("x and 1/x") {
    PrecisionGuard g(50);
    Real x("1.2345678901234567890123456789");
    auto r = integer_relations({lg(x), lg(1 / x), boost::multiprecision::sqrt(Real(2))}, 50, 1000);
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<long>{1, 1, 0});
}

TEST_CASE("too little precision for the coefficient bound") {
    PrecisionGuard g(30);
    CHECK_THROWS_AS(integer_relations({lg(Real(2)), lg(Real(3)), lg(Real(5)), lg(Real(7))}, 10, 10000), std::exception);
}

TEST_CASE("monomial family") {
    auto rs = log_basis(monomial_family());
    CHECK(rs.verified);
    CHECK(rs.basis.size() == 3);
    CHECK(rs.relations.size() == 2);
    // both relations hold exactly as multiplicative identities: check the coefficient vectors
    for (const auto& v : rs.relations) {
        // v0 log x + v1 log y + v2 (log x + log y) + v3 (log x - log y) = 0, v4 = 0
        CHECK(v[4] == 0);
        CHECK(v[0] + v[2] + v[3] == 0);
        CHECK(v[1] + v[2] - v[3] == 0);
    }
    for (const auto& res : rs.heldout_residuals) CHECK(res < boost::multiprecision::pow(Real(10), -25));
}

TEST_CASE("pairwise coprime arguments are independent") {
    auto fam = family({"x", "x+1", "x+2", "2x+3", "x^2+1"}, [](const RealVector& p) {
        const Real& x = p[0];
        return RealVector{lg(x), lg(x + 1), lg(x + 2), lg(2 * x + 3), lg(x * x + 1)};
    }, 1);
    auto rs = log_basis(fam);
    CHECK(rs.relations.empty());
    CHECK(rs.basis.size() == 5);
}

TEST_CASE("preferred columns stay in the basis") {
    auto fam = monomial_family();
    fam.preferred = {2, 3};
    auto rs = log_basis(fam);
    std::set<int> basis(rs.basis.begin(), rs.basis.end());
    CHECK(basis.count(2));
    CHECK(basis.count(3));
    CHECK(basis.count(4));
    // x = (xy * x/y)^(1/2)
    REQUIRE(rs.expressions.count(0));
    for (const auto& [col, c] : rs.expressions.at(0)) CHECK(c == Rational(1, 2));
}

TEST_CASE("Hermite normal form") {
    auto h = hermite_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    REQUIRE(h.size() == 3);
    CHECK(h[0][0] == 2);
    CHECK(h[1][0] == 0);
    CHECK(h[2][0] == 0);
    CHECK(h[2][1] == 0);
    // unimodular row operations do not change it
    auto h2 = hermite_normal_form({{2, 4, 4}, {-4, 10, 16}, {12, 0, -12}});
    CHECK(h == h2);
    CHECK(hermite_normal_form({{1, 2}, {2, 4}}).size() == 1);
}

TEST_CASE("relation lattice does not depend on the sample points") {
    RelationOptions a, b;
    b.seed = a.seed + 1000;
    auto ra = log_basis(monomial_family(), a), rb = log_basis(monomial_family(), b);
    CHECK(ra.basis.size() == rb.basis.size());
    CHECK(hermite_normal_form(ra.relations) == hermite_normal_form(rb.relations));
}

TEST_CASE("box families on disjoint point sets") {
    auto fams = box_families();
    RelationOptions a, b;
    b.seed = a.seed + 7777;
    auto ra = log_basis(fams.motivic, a), rb = log_basis(fams.motivic, b);
    CHECK(ra.verified);
    CHECK(rb.verified);
    CHECK(ra.basis.size() == 27);
    CHECK(rb.basis.size() == 27);
    CHECK(hermite_normal_form(ra.relations) == hermite_normal_form(rb.relations));
}

TEST_CASE("reducing terms already in both bases is the identity") {
    auto fams = box_families();
    RelationOptions opt;
    auto mot = log_basis(fams.motivic, opt);
    opt.seed += 1;
    auto dr = log_basis(fams.derham, opt);
    std::vector<TensorTerm> six;
    for (int i = 0; i < 6; ++i) six.push_back({i, i, Rational(i + 1, 3)});
    auto red = coaction_reduce(six, mot, dr);
    REQUIRE(red.terms.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(red.terms.at({i, i}) == Rational(i + 1, 3));

    // a single term
    auto one = coaction_reduce({{2, 2, Rational(5)}}, mot, dr);
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms.begin()->second == 5);
}

TEST_CASE("LLL shortens a skewed basis") {
    PrecisionGuard g(30);
    std::vector<RealVector> b{{Real(1), Real(0), Real(0)}, {Real(1000), Real(1), Real(0)}, {Real(999), Real(1000), Real(1)}};
    lll_reduce(b);
    for (const auto& row : b) {
        Real n2 = 0;
        for (const auto& x : row) n2 += x * x;
        CHECK(n2 <= 3);
    }
}

}

#include <doctest.h>

#include "oneloop/io.hpp"
#include "oneloop/report.hpp"
#include "oneloop/symanzik.hpp"

#include <cstring>

using namespace oneloop;

namespace {

const char* kBox = R"(# one-loop box
graph box
edge e1 v1 v2 mass=m1
edge e2 v2 v3 mass=m2
edge e3 v3 v4 mass=m3
edge e4 v4 v1 mass=m4
leg q1 v1 momentum=q1
leg q2 v2 momentum=q2
leg q3 v3 momentum=q3
leg q4 v4 momentum=q4
)";

const char* kBoxKin = R"(set m1^2 = 1
set m2^2 = 1
set m3^2 = 1
set m4^2 = 1   # trailing comment
set s[1,1] = 1
set s[2,2] = 1
set s[3,3] = 1
set s[1,2] = -1/7
set s[1,3] = -1/7
set s[2,3] = -1/7
)";

int error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("box file") {
    auto g = parse_graph(kBox);
    CHECK(g.name == "box");
    CHECK(g.num_edges() == 4);
    CHECK(g.num_legs() == 4);
    CHECK(g.is_one_loop_cycle());
    CHECK(g.edges[2].mass == "m3");
    CHECK(symanzik(g).xi == symanzik(box_graph()).xi);
}

TEST_CASE("triangle with a massless edge") {
    auto g = parse_graph("graph t\nedge e1 v2 v3 mass=0\nedge e2 v3 v1 mass=m2\nedge e3 v1 v2 mass=m3\n"
                         "leg q1 v1 momentum=q1\nleg q2 v2 momentum=q2\nleg q3 v3 momentum=q3\n");
    CHECK(g.massless_edges() == std::vector<int>{0});
    CHECK(g.is_one_loop_cycle());
}

TEST_CASE("duplicate edge id names the id") {
    std::string text = "graph g\nedge e1 a b mass=m1\nedge e1 b a mass=m2\nleg q1 a momentum=q1\nleg q2 b momentum=q2\n";
    try {
        parse_graph(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 6);
        CHECK(std::strstr(e.what(), "'e1'") != nullptr);
    }
}

TEST_CASE("syntax errors carry positions") {
    CHECK(error_line("graph g\nedgy e1 a b mass=m1\n") == 2);
    CHECK(error_line("graph g\nedge e1 a b m1\n") == 2);
    CHECK(error_line("graph g\nedge e1 a b mass=m1\nleg q1 a momentum=\n") == 3);
    CHECK(error_line("# nothing\n") >= 0);
    // disconnected: a semantic error
    CHECK_THROWS_AS(parse_graph("graph g\nedge e1 a b mass=m1\nedge e2 c d mass=m2\n"), ParseError);
}

TEST_CASE("kinematics") {
    auto g = parse_graph(kBox);
    auto p = parse_kinematics(kBoxKin, g);
    CHECK(p.msq.size() == 4);
    CHECK(p.s.at({1, 2}) == Rational(-1, 7));
    CHECK(validate_generic(g, p).generic);
    CHECK_THROWS_AS(parse_kinematics("set m9^2 = 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_kinematics("set s[1,1] = half\n", g), ParseError);
    CHECK_THROWS_AS(parse_kinematics("set s[1,1] = 1\nset s[1,1] = 2\n", g), ParseError);
    CHECK_THROWS_AS(parse_kinematics("set s[1,7] = 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_kinematics("put s[1,1] = 1\n", g), ParseError);
}

TEST_CASE("format and parse round trip") {
    for (const auto& g : {box_graph(), triangle_graph({1}), pentagon_graph(), sunrise_graph()}) {
        auto back = parse_graph(format_graph(g));
        CHECK(format_graph(back) == format_graph(g));
    }
    auto g = parse_graph(kBox);
    auto p = parse_kinematics(kBoxKin, g);
    auto q = parse_kinematics(format_kinematics(p), g);
    CHECK(q.s == p.s);
    CHECK(q.msq == p.msq);
}

TEST_CASE("tagged leaves round trip") {
    CHECK(read_rational(tag_rational(Rational(-22, 7))) == Rational(-22, 7));
    for (double x : {0.1, 1.0 / 3, -2.718281828459045, 6.02214076e23, 5e-324}) CHECK(read_decimal_double(tag_decimal(x)) == x);
    PrecisionGuard g(40);
    Real pi = real_pi();
    CHECK(boost::multiprecision::abs(read_decimal(tag_decimal(pi, 35)) - pi) < boost::multiprecision::pow(Real(10), -33));
    auto alg = tag_algebraic(SqrtExpr::sqrt(SqrtExpr::symbol("x") + 1), "1.5", 2);
    CHECK(alg["radicands"].size() == 1);
    CHECK_THROWS(read_rational(tag_string("1/2")));
}

TEST_CASE("structured reports round trip and are deterministic") {
    auto g = parse_graph(kBox);
    auto p = parse_kinematics(kBoxKin, g);
    JobOptions opt;
    opt.method = "mc";
    opt.budget = 20000;
    opt.seed = 9;
    auto a = report_eval(g, p, opt);
    auto b = report_eval(g, p, opt);
    std::string da = dump_structured(a.data);
    CHECK(da == dump_structured(b.data));
    auto back = parse_structured(da);
    CHECK(back == a.data);
    CHECK(dump_structured(back) == da);
    double v = read_decimal_double(back["quadrature"][0]["value"]);
    CHECK(v == read_decimal_double(a.data["quadrature"][0]["value"]));

    auto s = report_symanzik(g);
    CHECK(dump_structured(parse_structured(dump_structured(s.data))) == dump_structured(s.data));
}

TEST_CASE("graded report") {
    auto r = report_graded(6, std::nullopt);
    CHECK(r.exit_code == 0);
    CHECK(r.text.find("(1, 21, 35, 6)") != std::string::npos);
}

}

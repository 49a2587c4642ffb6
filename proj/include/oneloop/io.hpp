#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/realnum.hpp"
#include "oneloop/sqrtexpr.hpp"

#include <json.hpp>

#include <string>

namespace oneloop {

struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(int l, int c, const std::string& msg);
};

// Line-oriented graph format:
//   graph <name>
//   edge <id> <v1> <v2> mass=<symbol|0>
//   leg <id> <vertex> momentum=<symbol>
// '#' starts a comment.  Vertices are created on first use, in order of appearance.
FeynmanGraph parse_graph(const std::string& text);
FeynmanGraph read_graph_file(const std::string& path);

// `set m1^2 = 1`, `set s[1,2] = -1/7`; exact rationals only.  Mass symbols must belong to `g`.
KinematicPoint parse_kinematics(const std::string& text, const FeynmanGraph& g);
KinematicPoint read_kinematics_file(const std::string& path, const FeynmanGraph& g);

std::string format_graph(const FeynmanGraph& g);
std::string format_kinematics(const KinematicPoint& p);

// Structured output: ordered JSON whose numeric leaves carry a type tag.
using Json = nlohmann::ordered_json;

Json tag_rational(const Rational& q);
Json tag_decimal(const Real& x, int digits);
Json tag_decimal(double x);  // 17 significant digits, round-trips exactly
Json tag_algebraic(const SqrtExpr& e, const std::string& value, int digits);
Json tag_string(const std::string& s);

Rational read_rational(const Json& j);
Real read_decimal(const Json& j);          // at the current working precision
double read_decimal_double(const Json& j);

std::string dump_structured(const Json& j);
Json parse_structured(const std::string& text);

}  // namespace oneloop

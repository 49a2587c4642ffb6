#include "oneloop/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

namespace oneloop {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool valid_identifier(const std::string& s) {
    static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
    return std::regex_match(s, re);
}

std::string keyed(const Token& t, const std::string& key, int line) {
    std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0) throw ParseError(line, t.column, "expected " + prefix + "<value>, got '" + t.text + "'");
    std::string v = t.text.substr(prefix.size());
    if (v.empty()) throw ParseError(line, t.column + static_cast<int>(prefix.size()), "empty " + key);
    return v;
}

}  // namespace

FeynmanGraph parse_graph(const std::string& text) {
    FeynmanGraph g;
    bool named = false;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    auto add_vertex = [&](const std::string& v, int l, int c) {
        if (!valid_identifier(v)) throw ParseError(l, c, "bad vertex name '" + v + "'");
        if (std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end()) g.vertices.push_back(v);
    };
    while (std::getline(in, line)) {
        ++ln;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;
        if (kw == "graph") {
            if (tok.size() != 2) throw ParseError(ln, tok[0].column, "expected: graph <name>");
            if (named) throw ParseError(ln, tok[0].column, "second graph header");
            g.name = tok[1].text;
            named = true;
        } else if (kw == "edge") {
            if (tok.size() != 5) throw ParseError(ln, tok[0].column, "expected: edge <id> <v1> <v2> mass=<symbol|0>");
            const std::string& id = tok[1].text;
            if (!valid_identifier(id)) throw ParseError(ln, tok[1].column, "bad edge id '" + id + "'");
            for (const auto& e : g.edges)
                if (e.id == id) throw ParseError(ln, tok[1].column, "duplicate edge id '" + id + "'");
            add_vertex(tok[2].text, ln, tok[2].column);
            add_vertex(tok[3].text, ln, tok[3].column);
            std::string m = keyed(tok[4], "mass", ln);
            if (m != "0" && !valid_identifier(m)) throw ParseError(ln, tok[4].column + 5, "bad mass symbol '" + m + "'");
            g.edges.push_back({id, tok[2].text, tok[3].text, m});
        } else if (kw == "leg") {
            if (tok.size() != 4) throw ParseError(ln, tok[0].column, "expected: leg <id> <vertex> momentum=<symbol>");
            const std::string& id = tok[1].text;
            if (!valid_identifier(id)) throw ParseError(ln, tok[1].column, "bad leg id '" + id + "'");
            for (const auto& l : g.legs)
                if (l.id == id) throw ParseError(ln, tok[1].column, "duplicate leg id '" + id + "'");
            add_vertex(tok[2].text, ln, tok[2].column);
            std::string q = keyed(tok[3], "momentum", ln);
            if (!valid_identifier(q)) throw ParseError(ln, tok[3].column + 9, "bad momentum symbol '" + q + "'");
            g.legs.push_back({id, tok[2].text, q});
        } else {
            throw ParseError(ln, tok[0].column, "unknown keyword '" + kw + "'");
        }
    }
    if (g.edges.empty()) throw ParseError(ln, 1, "graph has no edges");
    try {
        g.validate();
    } catch (const GraphError& e) {
        throw ParseError(0, 0, e.what());
    }
    return g;
}

FeynmanGraph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

KinematicPoint parse_kinematics(const std::string& text, const FeynmanGraph& g) {
    static const std::regex s_re("s\\[([0-9]+),([0-9]+)\\]");
    static const std::regex m_re("([A-Za-z_][A-Za-z0-9_]*)\\^2");
    std::set<std::string> masses;
    for (const auto& e : g.edges)
        if (!e.massless()) masses.insert(e.mass);
    KinematicPoint p;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok[0].text != "set") throw ParseError(ln, tok[0].column, "unknown keyword '" + tok[0].text + "'");
        // accept "set x = v" and "set x=v"
        std::string rest;
        for (size_t i = 1; i < tok.size(); ++i) rest += tok[i].text;
        auto eq = rest.find('=');
        int col = tok.size() > 1 ? tok[1].column : tok[0].column;
        if (eq == std::string::npos) throw ParseError(ln, col, "expected: set <symbol> = <rational>");
        std::string key = rest.substr(0, eq), val = rest.substr(eq + 1);
        Rational q;
        try {
            q = parse_rational(val);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ln, col, e.what());
        }
        std::smatch m;
        if (std::regex_match(key, m, s_re)) {
            int i = std::stoi(m[1]), j = std::stoi(m[2]);
            if (i > j) std::swap(i, j);
            if (i < 1 || j > g.num_legs()) throw ParseError(ln, col, "s-value " + key + " refers to a missing leg");
            if (p.s.count({i, j})) throw ParseError(ln, col, "duplicate value for " + key);
            p.s[{i, j}] = q;
        } else if (std::regex_match(key, m, m_re)) {
            std::string sym = m[1];
            if (!masses.count(sym)) throw ParseError(ln, col, "unknown mass symbol '" + sym + "'");
            if (p.msq.count(sym)) throw ParseError(ln, col, "duplicate value for " + key);
            p.msq[sym] = q;
        } else {
            throw ParseError(ln, col, "unknown key '" + key + "'");
        }
    }
    return p;
}

KinematicPoint read_kinematics_file(const std::string& path, const FeynmanGraph& g) { return parse_kinematics(slurp(path), g); }

std::string format_graph(const FeynmanGraph& g) {
    std::ostringstream os;
    os << "graph " << g.name << "\n";
    for (const auto& e : g.edges) os << "edge " << e.id << " " << e.v1 << " " << e.v2 << " mass=" << e.mass << "\n";
    for (const auto& l : g.legs) os << "leg " << l.id << " " << l.vertex << " momentum=" << l.momentum << "\n";
    return os.str();
}

std::string format_kinematics(const KinematicPoint& p) {
    std::ostringstream os;
    for (const auto& [k, v] : p.msq) os << "set " << k << "^2 = " << v.get_str() << "\n";
    for (const auto& [k, v] : p.s) os << "set " << s_symbol(k.first, k.second) << " = " << v.get_str() << "\n";
    return os.str();
}

Json tag_rational(const Rational& q) { return Json{{"type", "rational"}, {"value", q.get_str()}}; }

Json tag_decimal(const Real& x, int digits) {
    return Json{{"type", "decimal"}, {"value", to_decimal(x, digits)}, {"precision", digits}};
}

Json tag_decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return Json{{"type", "decimal"}, {"value", std::string(buf)}, {"precision", 17}};
}

Json tag_algebraic(const SqrtExpr& e, const std::string& value, int digits) {
    Json rad = Json::array();
    std::function<void(const SqrtExpr&)> walk = [&](const SqrtExpr& x) {
        if (x.kind() == SqrtExpr::Kind::Sqrt) rad.push_back(x.children()[0].to_string());
        if (!x.is_leaf())
            for (const auto& c : x.children()) walk(c);
    };
    walk(e);
    Json j{{"type", "algebraic"}, {"expr", e.to_string()}, {"radicands", rad}};
    if (!value.empty()) {
        j["value"] = value;
        j["precision"] = digits;
    }
    return j;
}

Json tag_string(const std::string& s) { return Json{{"type", "string"}, {"value", s}}; }

namespace {
void expect_type(const Json& j, const char* t) {
    if (!j.is_object() || !j.contains("type") || j["type"] != t) throw std::invalid_argument(std::string("expected a ") + t + " leaf");
}
}  // namespace

Rational read_rational(const Json& j) {
    expect_type(j, "rational");
    return parse_rational(j["value"].get<std::string>());
}

Real read_decimal(const Json& j) {
    expect_type(j, "decimal");
    return Real(j["value"].get<std::string>());
}

double read_decimal_double(const Json& j) {
    expect_type(j, "decimal");
    return std::strtod(j["value"].get<std::string>().c_str(), nullptr);
}

std::string dump_structured(const Json& j) { return j.dump(2) + "\n"; }

Json parse_structured(const std::string& text) { return Json::parse(text); }

}  // namespace oneloop

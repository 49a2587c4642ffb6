#include "oneloop/io.hpp"
#include "oneloop/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace oneloop;

int main(int argc, char** argv) {
    CLI::App app{"oneloop: Symanzik polynomials, coaction formulas and numerical checks for one-loop graphs"};
    app.require_subcommand(1);

    std::string graph_path, kin_path, format = "text";
    JobOptions opt;
    double tolerance = 0;
    int n = 0, triangle_v = -1;

    auto common = [&](CLI::App* sub, bool needs_graph, bool needs_kin, bool kin_allowed) {
        auto* g = sub->add_option("--graph", graph_path, "graph file");
        if (needs_graph) g->required()->check(CLI::ExistingFile);
        if (kin_allowed) {
            auto* k = sub->add_option("--kinematics", kin_path, "kinematics file");
            k->check(CLI::ExistingFile);
            if (needs_kin) k->required();
        }
        sub->add_option("--precision", opt.precision, "working precision in digits")->check(CLI::Range(10u, 1000u));
        sub->add_option("--method", opt.method, "quadrature method")->check(CLI::IsMember({"adaptive", "mc", "both"}));
        sub->add_option("--budget", opt.budget, "quadrature budget (evaluations or samples)")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--tolerance", tolerance, "verification tolerance")->check(CLI::PositiveNumber);
    };

    auto* sym = app.add_subcommand("symanzik", "first and second Symanzik polynomials");
    common(sym, true, false, false);
    auto* coa = app.add_subcommand("coaction", "closed-form coaction (bubble, triangle, box)");
    common(coa, true, false, true);
    auto* ev = app.add_subcommand("eval", "quadrature next to the closed forms");
    common(ev, true, true, true);
    ev->add_option("--dimension", opt.dimension, "space-time dimension")->check(CLI::IsMember({2, 4}));
    auto* ver = app.add_subcommand("verify", "identity suite at a kinematic point");
    common(ver, true, true, true);
    ver->add_option("--parameter", opt.param, "derivative parameter (q1, s[1,2], m1, ...)");
    auto* red = app.add_subcommand("reduce", "reduce an N >= 5 one-loop integrand to boxes");
    common(red, true, true, true);
    auto* rel = app.add_subcommand("relations", "integer relations among the box coaction logarithms");
    common(rel, false, false, false);
    rel->add_option("--max-coeff", opt.max_coeff, "largest relation coefficient")->check(CLI::PositiveNumber);
    rel->add_option("--heldout", opt.heldout, "held-out verification points")->check(CLI::PositiveNumber);
    auto* gr = app.add_subcommand("graded", "weight-graded dimensions");
    common(gr, false, false, false);
    auto* nopt = gr->add_option("--n", n, "number of edges of the one-loop graph")->check(CLI::Range(3, 64));
    auto* vopt = gr->add_option("--triangle-massless", triangle_v, "triangle with this many vanishing masses")->check(CLI::Range(0, 3));
    nopt->excludes(vopt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (tolerance > 0) opt.tolerance = tolerance;

    try {
        Report r;
        if (*rel) {
            if (rel->count("--precision")) opt.relation_digits = static_cast<int>(opt.precision);
            r = report_relations(opt);
        } else if (*gr) {
            std::optional<int> nn, vv;
            if (*nopt) nn = n;
            if (*vopt) vv = triangle_v;
            r = report_graded(nn, vv);
        } else {
            FeynmanGraph g = read_graph_file(graph_path);
            std::optional<KinematicPoint> p;
            if (!kin_path.empty()) p = read_kinematics_file(kin_path, g);
            if (*sym) r = report_symanzik(g);
            else if (*coa) r = report_coaction(g, p, opt);
            else if (*ev) r = report_eval(g, *p, opt);
            else if (*ver) r = report_verify(g, *p, opt);
            else if (*red) r = report_reduce(g, *p, opt);
        }
        if (format == "structured") std::cout << dump_structured(r.data);
        else std::cout << r.text;
        return r.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}

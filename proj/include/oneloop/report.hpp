#pragma once

#include "oneloop/graph.hpp"
#include "oneloop/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace oneloop {

struct JobOptions {
    unsigned precision = 30;          // digits for closed forms and identities
    std::string method = "adaptive";  // adaptive, mc, both
    long budget = 0;                  // 0: method default
    std::uint64_t seed = 1;
    std::optional<double> tolerance;  // command-specific default when unset
    int dimension = 4;
    std::string param = "q1";
    // relations
    int relation_digits = 60;
    long max_coeff = 10000;
    int heldout = 10;
};

struct Report {
    int exit_code = 0;  // 0 ok, 2 verification failure beyond tolerance
    std::string text;
    Json data;
};

Report report_symanzik(const FeynmanGraph& g);
Report report_coaction(const FeynmanGraph& g, const std::optional<KinematicPoint>& p, const JobOptions& opt);
Report report_eval(const FeynmanGraph& g, const KinematicPoint& p, const JobOptions& opt);
Report report_verify(const FeynmanGraph& g, const KinematicPoint& p, const JobOptions& opt);
Report report_reduce(const FeynmanGraph& g, const KinematicPoint& p, const JobOptions& opt);
Report report_relations(const JobOptions& opt);
// n >= 3: weight-graded dimensions of the n-gon; triangle_massless in 0..3 selects the triangle variant.
Report report_graded(std::optional<int> n, std::optional<int> triangle_massless);

}  // namespace oneloop

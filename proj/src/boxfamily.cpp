#include "oneloop/boxfamily.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace oneloop {

namespace bmp = boost::multiprecision;

namespace {

const std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

RealMatrix matrix_of(const RealVector& x) {
    std::array<Real, 6> s;
    std::array<Real, 4> m;
    for (int i = 0; i < 6; ++i) s[i] = x[i];
    for (int i = 0; i < 4; ++i) m[i] = x[6 + i];
    return box_matrix(s, m);
}

// the 42 phases with their weights, in ow_box_value order
std::vector<std::pair<Real, int>> phases(const RealMatrix& c) {
    OWResult ow = ow_box_value(c);
    std::vector<std::pair<Real, int>> out;
    for (const auto& t : ow.terms) {
        out.emplace_back(t.nu[0], 2);
        for (int l = 1; l <= 3; ++l) {
            int sg = (l % 2) ? -1 : 1;
            out.emplace_back(t.nu[0] + t.nu[l], sg);
            out.emplace_back(t.nu[0] - t.nu[l], sg);
        }
    }
    return out;
}

std::string pair_name(int p) {
    return std::to_string(kPairs[p].first + 1) + std::to_string(kPairs[p].second + 1);
}

std::string phase_name(int i) {
    static const char* kind[7] = {"nu0", "nu0+nu1", "nu0-nu1", "nu0+nu2", "nu0-nu2", "nu0+nu3", "nu0-nu3"};
    std::array<int, 3> perm{1, 2, 3};
    for (int k = 0; k < i / 7; ++k) std::next_permutation(perm.begin(), perm.end());
    return std::string(kind[i % 7]) + "(" + std::to_string(perm[0]) + std::to_string(perm[1]) + std::to_string(perm[2]) + ")";
}

RealVector motivic_values(const RealVector& x) {
    RealMatrix c = matrix_of(x);
    RealVector out;
    for (auto [j, k] : kPairs) {
        int a = -1, b = -1;
        for (int i = 0; i < 4; ++i)
            if (i != j && i != k) (a < 0 ? a : b) = i;
        Real disc = c[a][b] * c[a][b] - c[a][a] * c[b][b];
        if (disc <= 0) throw std::domain_error("face discriminant not positive");
        Real sq = bmp::sqrt(disc);
        out.push_back(bmp::log(bmp::abs((c[a][b] - sq) / (c[a][b] + sq))));
    }
    for (const auto& [ph, w] : phases(c)) {
        (void)w;
        Real sn = bmp::sin(ph);
        out.push_back(bmp::log(4 * sn * sn));
    }
    return out;
}

RealVector derham_values(const RealVector& x) {
    RealMatrix c = matrix_of(x);
    RealMatrix u = real_inverse(c);
    RealVector out;
    for (auto [j, k] : kPairs) {
        Real w = u[j][k] * u[j][k] - u[j][j] * u[k][k];
        if (w >= 0) throw std::domain_error("f_jk not unimodular");
        // f = (i sqrt(-w) - U_jk)/(i sqrt(-w) + U_jk), |f| = 1
        Complex sw(Real(0), bmp::sqrt(-w));
        Complex f = (sw - Complex(u[j][k])) / (sw + Complex(u[j][k]));
        out.push_back(arg(f));
    }
    for (const auto& [ph, w] : phases(c)) {
        (void)w;
        out.push_back(2 * ph);
    }
    return out;
}

}  // namespace

RealVector sample_box_parameters(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> diag(0.5, 1.5), off(-0.3, 0.3), mass(0.5, 2.0);
    for (;;) {
        Real l[3][3] = {};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) l[i][j] = (i == j) ? diag(rng) : off(rng);
        Real g[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                g[i][j] = 0;
                for (int k = 0; k < 3; ++k) g[i][j] += l[i][k] * l[j][k];
            }
        RealVector x = {g[0][0], g[0][1], g[0][2], g[1][1], g[1][2], g[2][2]};
        for (int i = 0; i < 4; ++i) x.push_back(Real(mass(rng)));
        try {
            motivic_values(x);
            derham_values(x);
            return x;
        } catch (const std::domain_error&) {
        } catch (const SingularMatrixError&) {
        }
    }
}

BoxFamilies box_families() {
    BoxFamilies out;
    out.motivic.name = "box motivic";
    out.derham.name = "box de Rham";
    for (int p = 0; p < 6; ++p) {
        out.motivic.names.push_back("log[p0p1|u0u1]_" + pair_name(p));
        out.derham.names.push_back("arg f_" + pair_name(p));
    }
    for (int i = 0; i < 42; ++i) {
        out.motivic.names.push_back("log 4sin^2 " + phase_name(i));
        out.derham.names.push_back("2 " + phase_name(i));
    }
    for (auto* fam : {&out.motivic, &out.derham}) {
        fam->parameter_dim = kBoxParameters;
        fam->sample = sample_box_parameters;
        fam->preferred = {0, 1, 2, 3, 4, 5};
    }
    out.motivic.evaluate = motivic_values;
    out.derham.evaluate = derham_values;
    // weights do not depend on the point
    static const int kWeights[7] = {2, -1, -1, 1, 1, -1, -1};
    for (int i = 0; i < 42; ++i) out.terms.push_back({6 + i, 6 + i, Rational(kWeights[i % 7]) * Rational(-1, 2)});
    return out;
}

BoxReduction reduce_box_coaction(const RelationOptions& opt) {
    BoxFamilies fam = box_families();
    BoxReduction out;
    out.motivic = log_basis(fam.motivic, opt);
    RelationOptions o2 = opt;
    o2.seed = opt.seed + 1;
    out.derham = log_basis(fam.derham, o2);
    out.tensor = coaction_reduce(fam.terms, out.motivic, out.derham);
    out.survivors = static_cast<int>(out.tensor.terms.size());
    out.diagonal = out.survivors > 0;
    bool common = out.survivors > 0;
    Rational first = out.survivors ? out.tensor.terms.begin()->second : Rational(0);
    for (const auto& [k, c] : out.tensor.terms) {
        if (k.first != k.second || k.first >= 6) out.diagonal = false;
        if (c != first) common = false;
    }
    out.survivor_coefficient = common ? first : Rational(0);
    return out;
}

std::string BoxReduction::render() const {
    std::ostringstream os;
    os << "motivic family: " << motivic.render();
    os << "de Rham family: " << derham.render();
    os << "surviving tensor terms: " << survivors << " (units of 1/(16 sqrt|det C|))\n";
    os << tensor.render(motivic.names, derham.names);
    return os.str();
}

}  // namespace oneloop

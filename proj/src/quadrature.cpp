#include "oneloop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace oneloop {

std::string to_string(QuadMethod m) { return m == QuadMethod::Adaptive ? "adaptive" : "monte-carlo"; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform_double(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t h = splitmix64(splitmix64(seed) ^ (counter * 0xd1b54a32d192ed03ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

namespace {

struct Region {
    std::vector<double> center, half;
    double value = 0, error = 0;
    int split_dim = 0;
    bool operator<(const Region& o) const { return error < o.error; }
};

// Gauss-Kronrod 7-15 on [c-h, c+h].
void gk15(const std::function<double(const double*)>& f, Region& r, long& evals) {
    static const double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                 0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                 0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static const double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                 0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                 0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                 0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    double c = r.center[0], h = r.half[0];
    double x = c;
    double fc = f(&x);
    double k = wk[7] * fc, g = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double a = c - h * xk[j], b = c + h * xk[j];
        double fa = f(&a), fb = f(&b);
        k += wk[j] * (fa + fb);
        if (j % 2 == 1) g += wg[j / 2] * (fa + fb);
    }
    evals += 15;
    r.value = k * h;
    r.error = std::abs((k - g) * h);
    r.split_dim = 0;
}

// Genz-Malik degree-7 rule with degree-5 error estimate.
void genz_malik(int n, const std::function<double(const double*)>& f, Region& r, long& evals) {
    const double l2 = std::sqrt(9.0 / 70.0), l4 = std::sqrt(9.0 / 10.0), l5 = std::sqrt(9.0 / 19.0);
    const double dn = n;
    const double w1 = (12824.0 - 9120.0 * dn + 400.0 * dn * dn) / 19683.0;
    const double w2 = 980.0 / 6561.0;
    const double w3 = (1820.0 - 400.0 * dn) / 19683.0;
    const double w4 = 200.0 / 19683.0;
    const double w5 = 6859.0 / 19683.0 / std::ldexp(1.0, n);
    const double e1 = (729.0 - 950.0 * dn + 50.0 * dn * dn) / 729.0;
    const double e2 = 245.0 / 486.0;
    const double e3 = (265.0 - 100.0 * dn) / 1458.0;
    const double e4 = 25.0 / 729.0;
    const double ratio = (l2 * l2) / (l4 * l4);

    std::vector<double> x(r.center);
    double vol = 1;
    for (int i = 0; i < n; ++i) vol *= 2 * r.half[i];
    double f0 = f(x.data());
    double s2 = 0, s3 = 0, s4 = 0, s5 = 0;
    double best = -1;
    int best_dim = 0;
    for (int i = 0; i < n; ++i) {
        x[i] = r.center[i] - l2 * r.half[i];
        double a = f(x.data());
        x[i] = r.center[i] + l2 * r.half[i];
        double b = f(x.data());
        x[i] = r.center[i] - l4 * r.half[i];
        double c = f(x.data());
        x[i] = r.center[i] + l4 * r.half[i];
        double d = f(x.data());
        x[i] = r.center[i];
        s2 += a + b;
        s3 += c + d;
        double diff = std::abs(a + b - 2 * f0 - ratio * (c + d - 2 * f0));
        if (diff > best + 1e-14 * std::abs(best)) {
            best = diff;
            best_dim = i;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    x[i] = r.center[i] + si * l4 * r.half[i];
                    x[j] = r.center[j] + sj * l4 * r.half[j];
                    s4 += f(x.data());
                    x[i] = r.center[i];
                    x[j] = r.center[j];
                }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) x[i] = r.center[i] + ((mask >> i) & 1 ? l5 : -l5) * r.half[i];
        s5 += f(x.data());
    }
    evals += 1 + 4 * n + 2 * n * (n - 1) + (1L << n);
    double r7 = vol * (w1 * f0 + w2 * s2 + w3 * s3 + w4 * s4 + w5 * s5);
    double r5 = vol * (e1 * f0 + e2 * s2 + e3 * s3 + e4 * s4);
    r.value = r7;
    r.error = std::abs(r7 - r5);
    r.split_dim = best_dim;
}

QuadratureResult adaptive(int dim, const std::function<double(const double*)>& f, const QuadratureOptions& opt) {
    auto rule = [&](Region& r, long& ev) {
        if (dim == 1) gk15(f, r, ev);
        else genz_malik(dim, f, r, ev);
    };
    QuadratureResult out;
    out.method = QuadMethod::Adaptive;
    long evals = 0;
    std::priority_queue<Region> heap;
    Region root;
    root.center.assign(dim, 0.5);
    root.half.assign(dim, 0.5);
    rule(root, evals);
    double total = root.value, err = root.error;
    heap.push(root);
    long splits = 0;
    long per_rule = dim == 1 ? 15 : 1 + 4 * dim + 2 * dim * (dim - 1) + (1L << dim);
    while (true) {
        double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (err <= target) {
            out.converged = true;
            break;
        }
        if (evals + 2 * per_rule > opt.budget) break;
        Region r = heap.top();
        heap.pop();
        Region a = r, b = r;
        int d = r.split_dim;
        a.half[d] = b.half[d] = r.half[d] / 2;
        a.center[d] = r.center[d] - r.half[d] / 2;
        b.center[d] = r.center[d] + r.half[d] / 2;
        rule(a, evals);
        rule(b, evals);
        ++splits;
        total += a.value + b.value - r.value;
        err += a.error + b.error - r.error;
        heap.push(a);
        heap.push(b);
        if (splits % 4096 == 0) {
            // re-sum to limit drift
            auto copy = heap;
            total = 0;
            err = 0;
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
        }
    }
    // final fixed-order re-summation
    std::vector<Region> all;
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Region& a, const Region& b) { return a.center < b.center; });
    total = 0;
    err = 0;
    for (const auto& r : all) {
        total += r.value;
        err += r.error;
    }
    out.value = total;
    out.error_estimate = err;
    out.evaluations = evals;
    out.subdivisions = splits;
    return out;
}

QuadratureResult monte_carlo(int dim, const std::function<double(const double*)>& f, const QuadratureOptions& opt) {
    QuadratureResult out;
    out.method = QuadMethod::MonteCarlo;
    out.seed = opt.seed;
    long n = std::max<long>(opt.budget, 2);
    std::vector<double> x(dim);
    // Kahan-compensated running sums in fixed sample order
    double sum = 0, c1 = 0, sumsq = 0, c2 = 0;
    for (long i = 0; i < n; ++i) {
        for (int d = 0; d < dim; ++d) x[d] = uniform_double(opt.seed, static_cast<std::uint64_t>(i) * dim + d);
        double v = f(x.data());
        double y = v - c1;
        double t = sum + y;
        c1 = (t - sum) - y;
        sum = t;
        double y2 = v * v - c2;
        double t2 = sumsq + y2;
        c2 = (t2 - sumsq) - y2;
        sumsq = t2;
    }
    double mean = sum / n;
    double var = std::max(0.0, sumsq / n - mean * mean);
    out.value = mean;
    out.error_estimate = std::sqrt(var / (n - 1));
    out.evaluations = n;
    out.converged = true;
    return out;
}

}  // namespace

QuadratureResult integrate_cube(int dim, const std::function<double(const double*)>& f, const QuadratureOptions& opt) {
    if (dim < 1) throw std::invalid_argument("integration dimension must be >= 1");
    if (dim > 12) throw std::invalid_argument("integration dimension too large");
    return opt.method == QuadMethod::Adaptive ? adaptive(dim, f, opt) : monte_carlo(dim, f, opt);
}

QuadratureResult integrate_simplex(int m, const std::function<double(const double*)>& f, const QuadratureOptions& opt) {
    if (m < 2) throw std::invalid_argument("simplex needs at least 2 coordinates");
    int dim = m - 1;
    // Duffy-type map: x_0 = u_0, x_k = u_k prod_{i<k}(1-u_i), x_{m-1} = prod(1-u_i).
    auto g = [&, m](const double* u) {
        double x[16];
        double rest = 1;
        for (int k = 0; k < m - 1; ++k) {
            x[k] = rest * u[k];
            rest *= (1 - u[k]);
        }
        x[m - 1] = rest;
        // Jacobian = prod_{k=1}^{m-2} prod_{i<k} (1-u_i)
        double jac = 1;
        double p = 1;
        for (int k = 0; k < m - 2; ++k) {
            p *= (1 - u[k]);
            jac *= p;
        }
        double v = f(x);
        return jac == 0 ? 0.0 : v * jac;
    };
    if (m > 16) throw std::invalid_argument("too many coordinates");
    return integrate_cube(dim, g, opt);
}

NumericPoly::NumericPoly(const KPoly& p) : arity_(p.arity()) {
    for (const auto& [e, c] : p.terms()) {
        coeff_.push_back(c.constant_value().get_d());
        exps_.push_back(e);
    }
}

double NumericPoly::operator()(const double* x) const {
    double s = 0;
    for (size_t t = 0; t < coeff_.size(); ++t) {
        double v = coeff_[t];
        const auto& e = exps_[t];
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) v *= x[i];
        s += v;
    }
    return s;
}

QuadratureResult integrate_form(const KPoly& numerator, const KPoly& xi, int xi_power, const QuadratureOptions& opt) {
    NumericPoly num(numerator), den(xi);
    int m = xi.arity();
    return integrate_simplex(
        m,
        [&](const double* x) {
            double d = den(x);
            return num(x) / std::pow(d, xi_power);
        },
        opt);
}

QuadratureResult parametric_quadrature(const ParametricIntegrand& ig, const KinematicPoint& p,
                                       const QuadratureOptions& opt) {
    if (ig.divergent) throw std::domain_error("integrand flagged divergent: " + ig.note);
    auto gen = validate_generic(ig.graph, p);
    if (!gen.euclidean) throw std::domain_error("kinematic point is not on the Euclidean sheet");
    auto vals = symbol_values(ig.graph, p);
    KPoly xi = ig.xi.specialize(vals);
    KPoly psi = ig.psi.specialize(vals);
    NumericPoly fx(xi), fp(psi);
    int m = xi.arity();
    int a = ig.psi_power, b = ig.xi_power;
    return integrate_simplex(
        m,
        [&](const double* x) {
            double ps = fp(x), xv = fx(x);
            return std::pow(ps, a) / std::pow(xv, b);
        },
        opt);
}

}  // namespace oneloop

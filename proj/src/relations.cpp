#include "oneloop/relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oneloop {

namespace bmp = boost::multiprecision;

namespace {

Real pow10(int e) { return bmp::pow(Real(10), e); }

RealVector normalized(const RealVector& row) {
    Real m = 0;
    for (const auto& x : row) m = bmp::max(m, Real(bmp::abs(x)));
    if (m == 0) return row;
    RealVector out = row;
    for (auto& x : out) x /= m;
    return out;
}

Real residual_of(const std::vector<long>& v, const std::vector<RealVector>& rows) {
    Real worst = 0;
    for (const auto& row : rows) {
        Real s = 0;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) s += Real(v[i]) * row[i];
        worst = bmp::max(worst, Real(bmp::abs(s)));
    }
    return worst;
}

}  // namespace

RelationSearch find_relations(const std::vector<RealVector>& raw_rows, int tol_digits, long max_coeff) {
    if (raw_rows.empty()) throw std::invalid_argument("find_relations: no rows");
    size_t n = raw_rows[0].size();
    std::vector<RealVector> rows;
    for (const auto& r : raw_rows) {
        if (r.size() != n) throw std::invalid_argument("find_relations: ragged rows");
        rows.push_back(normalized(r));
    }
    int digits = static_cast<int>(working_digits());
    double info = static_cast<double>(rows.size()) * digits;
    if (static_cast<double>(n) * std::log10(static_cast<double>(std::max(2L, max_coeff))) > 0.8 * info)
        throw InsufficientPrecision("not enough precision for " + std::to_string(n) + " values with coefficients up to " +
                                    std::to_string(max_coeff));
    if (tol_digits >= digits) throw InsufficientPrecision("tolerance 1e-" + std::to_string(tol_digits) + " beyond working precision");
    // The tail entries are ~W while relation vectors have Gram-Schmidt norms ~1, so the reduction
    // itself needs roughly twice the tolerance digits on top of the data accuracy.
    PrecisionGuard lll_precision(static_cast<unsigned>(std::max(digits, 2 * tol_digits + 40)));
    Real w = pow10(tol_digits);
    std::vector<RealVector> basis(n);
    for (size_t i = 0; i < n; ++i) {
        RealVector b(n + rows.size(), Real(0));
        b[i] = 1;
        for (size_t r = 0; r < rows.size(); ++r) b[n + r] = bmp::round(w * rows[r][i]);  // integral lattice
        basis[i] = std::move(b);
    }
    RelationSearch out;
    out.swaps = lll_reduce(basis);
    Real tol = pow10(-tol_digits);
    out.worst_relation_residual = 0;
    out.best_nonrelation_residual = -1;
    for (const auto& b : basis) {
        std::vector<long> v(n);
        bool small = true;
        for (size_t i = 0; i < n; ++i) {
            Real c = bmp::round(b[i]);
            if (bmp::abs(c) > max_coeff) small = false;
            v[i] = small ? c.convert_to<long>() : 0;
        }
        Real res = residual_of(v, rows);
        if (small && res < tol && std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) {
            // sign convention: first non-zero entry positive
            auto it = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
            if (*it < 0)
                for (auto& x : v) x = -x;
            out.relations.push_back(v);
            out.worst_relation_residual = bmp::max(out.worst_relation_residual, res);
        } else {
            // gap indicator: size of the tail, in units of the normalized rows
            Real t = 0;
            for (size_t i = n; i < b.size(); ++i) t += b[i] * b[i];
            Real r = bmp::sqrt(t) / w;
            if (out.best_nonrelation_residual < 0 || r < out.best_nonrelation_residual) out.best_nonrelation_residual = r;
        }
    }
    return out;
}

std::optional<std::vector<long>> integer_relations(const RealVector& values, int digits, long max_coeff) {
    if (digits < 20) throw InsufficientPrecision("integer_relations needs at least 20 digits");
    PrecisionGuard guard(static_cast<unsigned>(digits));
    auto res = find_relations({values}, digits / 2, max_coeff);
    if (res.relations.empty()) return std::nullopt;
    // shortest first
    std::sort(res.relations.begin(), res.relations.end(), [](const auto& a, const auto& b) {
        long na = 0, nb = 0;
        for (long x : a) na += x * x;
        for (long x : b) nb += x * x;
        return na < nb;
    });
    return res.relations.front();
}

namespace {

// Rows of derivative values: (f(x + h d) - f(x - h d)) / 2h for random directions d.
std::vector<RealVector> derivative_rows(const LogFamily& fam, int count, std::mt19937_64& rng, int h_digits) {
    Real h = pow10(-h_digits);
    std::uniform_real_distribution<double> dir(-1.0, 1.0);
    std::vector<RealVector> rows;
    while (static_cast<int>(rows.size()) < count) {
        RealVector x = fam.sample(rng);
        RealVector xp = x, xm = x;
        for (size_t i = 0; i < x.size(); ++i) {
            Real d = dir(rng);
            xp[i] += h * d;
            xm[i] -= h * d;
        }
        RealVector fp, fm;
        try {
            fp = fam.evaluate(xp);
            fm = fam.evaluate(xm);
        } catch (const std::domain_error&) {
            continue;  // rare non-generic draw
        }
        RealVector row(fp.size());
        for (size_t i = 0; i < fp.size(); ++i) row[i] = (fp[i] - fm[i]) / (2 * h);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

RelationSet log_basis(const LogFamily& fam, const RelationOptions& opt) {
    int n = static_cast<int>(fam.names.size());
    PrecisionGuard guard(static_cast<unsigned>(opt.digits));
    std::mt19937_64 rng(opt.seed);
    int h_digits = opt.digits / 3;
    int tol_digits = opt.digits / 2;
    RelationSet out;
    out.names = fam.names;
    auto rows = derivative_rows(fam, n + opt.extra_rows, rng, h_digits);
    out.rows = static_cast<int>(rows.size());
    auto search = find_relations(rows, tol_digits, opt.max_coeff);
    out.relations = search.relations;
    out.swaps = search.swaps;
    out.worst_relation_residual = search.worst_relation_residual;
    out.best_nonrelation_residual = search.best_nonrelation_residual;

    // preference order, then eliminate from the least preferred end
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (int c : fam.preferred)
        if (c >= 0 && c < n && !seen[c]) {
            order.push_back(c);
            seen[c] = true;
        }
    for (int c = 0; c < n; ++c)
        if (!seen[c]) order.push_back(c);
    std::vector<int> pivot_order(order.rbegin(), order.rend());

    int k = static_cast<int>(out.relations.size());
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(n));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) m[r][c] = out.relations[r][c];
    std::vector<int> pivots;
    int row = 0;
    for (int c : pivot_order) {
        if (row >= k) break;
        int p = -1;
        for (int r = row; r < k; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int cc = 0; cc < n; ++cc) m[r][cc] -= f * m[row][cc];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c : order)
        if (!is_pivot[c]) out.basis.push_back(c);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        std::vector<std::pair<int, Rational>> expr;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c] && m[r][c] != 0) expr.emplace_back(c, -m[r][c]);
        out.expressions[pivots[r]] = expr;
    }

    // held-out verification
    auto held = derivative_rows(fam, opt.heldout, rng, h_digits);
    for (auto& r : held) r = normalized(r);
    out.heldout_tolerance = pow10(-tol_digits);
    out.verified = true;
    for (const auto& rel : out.relations) {
        Real res = residual_of(rel, held);
        out.heldout_residuals.push_back(res);
        if (res > out.heldout_tolerance) out.verified = false;
    }
    return out;
}

std::string RelationSet::render() const {
    std::ostringstream os;
    os << "columns " << names.size() << ", rows " << rows << ", relations " << relations.size() << ", basis " << basis.size()
       << "\n";
    os << "  relation residual <= " << to_decimal(worst_relation_residual, 3) << ", smallest non-relation residual "
       << to_decimal(best_nonrelation_residual, 3) << "\n";
    Real worst = 0;
    for (const auto& r : heldout_residuals) worst = bmp::max(worst, r);
    os << "  held-out check " << (verified ? "passed" : "FAILED") << ": max residual " << to_decimal(worst, 3)
       << " (tolerance " << to_decimal(heldout_tolerance, 1) << ")\n";
    os << "  basis:";
    for (int b : basis) os << " " << names[b];
    os << "\n";
    return os.str();
}

ReducedTensor coaction_reduce(const std::vector<TensorTerm>& terms, const RelationSet& mot, const RelationSet& dr) {
    auto expand = [](const RelationSet& set, int col) {
        auto it = set.expressions.find(col);
        if (it != set.expressions.end()) return it->second;
        if (std::find(set.basis.begin(), set.basis.end(), col) == set.basis.end())
            throw std::runtime_error("column " + std::to_string(col) + " is neither in the basis nor expressed through it");
        return std::vector<std::pair<int, Rational>>{{col, Rational(1)}};
    };
    ReducedTensor out;
    for (const auto& t : terms) {
        auto em = expand(mot, t.motivic);
        auto ed = expand(dr, t.derham);
        for (const auto& [bm, a] : em)
            for (const auto& [bd, b] : ed) out.terms[{bm, bd}] += t.coefficient * a * b;
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (it->second == 0) it = out.terms.erase(it);
        else ++it;
    }
    return out;
}

std::string ReducedTensor::render(const std::vector<std::string>& mn, const std::vector<std::string>& dn) const {
    std::ostringstream os;
    for (const auto& [k, c] : terms) os << "  " << to_string(c) << " * " << mn[k.first] << " (x) " << dn[k.second] << "\n";
    return os.str();
}

}  // namespace oneloop

namespace oneloop {

std::vector<std::vector<Integer>> hermite_normal_form(const std::vector<std::vector<long>>& input) {
    std::vector<std::vector<Integer>> m;
    for (const auto& r : input) m.emplace_back(r.begin(), r.end());
    if (m.empty()) return m;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t c = 0; c < cols && row < m.size(); ++c) {
        // Euclid on column c among rows >= row
        for (;;) {
            size_t best = m.size();
            for (size_t r = row; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || ::abs(m[r][c]) < ::abs(m[best][c]))) best = r;
            if (best == m.size()) break;
            std::swap(m[row], m[best]);
            bool done = true;
            for (size_t r = row + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (size_t k = c; k < cols; ++k) m[r][k] -= q * m[row][k];
                if (m[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (row < m.size() && m[row][c] != 0) {
            if (m[row][c] < 0)
                for (auto& x : m[row]) x = -x;
            for (size_t r = 0; r < row; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (size_t k = c; k < cols; ++k) m[r][k] -= q * m[row][k];
            }
            ++row;
        }
    }
    m.resize(row);
    return m;
}

}  // namespace oneloop

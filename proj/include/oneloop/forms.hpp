#pragma once

#include "oneloop/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace oneloop {

// Differential form with polynomial coefficients on affine space with coordinates a_0..a_{n-1}.
class PolyForm {
public:
    using Index = std::vector<int>;  // strictly increasing

    PolyForm() = default;
    PolyForm(int arity, int degree) : arity_(arity), degree_(degree) {}

    static PolyForm function(const KPoly& f);
    static PolyForm differential(const KPoly& f);  // df
    // Omega = sum_p (-1)^{p+1} a_p da_0..^p..da_{n-1}
    static PolyForm omega(int n);

    int arity() const { return arity_; }
    int degree() const { return degree_; }
    const std::map<Index, KPoly>& components() const { return comps_; }
    KPoly component(const Index& idx) const;
    bool is_zero() const { return comps_.empty(); }

    // Adds c * da_{idx}, reordering idx with the permutation sign.
    void add(Index idx, const KPoly& c);

    PolyForm d() const;
    PolyForm wedge(const PolyForm& o) const;
    PolyForm operator*(const KPoly& f) const;
    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    bool operator==(const PolyForm& o) const;

    // Pull back along a_var = 0 and drop that coordinate.
    PolyForm restrict_zero(int var) const;
    // For an (n-1)-form equal to h * Omega, returns h; nullopt otherwise.
    std::optional<KPoly> divide_by_omega() const;

private:
    int arity_ = 0;
    int degree_ = 0;
    std::map<Index, KPoly> comps_;
};

// A form N / base^power.
struct RationalForm {
    PolyForm numerator;
    KPoly base;
    int power = 0;
    // d(N / F^k) = (F dN - k dF ^ N) / F^{k+1}
    RationalForm d() const;
};

}  // namespace oneloop

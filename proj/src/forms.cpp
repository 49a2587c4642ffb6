#include "oneloop/forms.hpp"

#include <algorithm>

namespace oneloop {

namespace {
// Sort idx in place, returning the permutation sign, or 0 on a repeated index.
int sort_sign(PolyForm::Index& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}
}  // namespace

PolyForm PolyForm::function(const KPoly& f) {
    PolyForm r(f.arity(), 0);
    r.add({}, f);
    return r;
}

PolyForm PolyForm::differential(const KPoly& f) { return function(f).d(); }

PolyForm PolyForm::omega(int n) {
    PolyForm r(n, n - 1);
    for (int p = 0; p < n; ++p) {
        Index idx;
        for (int q = 0; q < n; ++q)
            if (q != p) idx.push_back(q);
        KPoly c = KPoly::alpha(n, p);
        r.add(idx, (p % 2 == 0) ? -c : c);
    }
    return r;
}

KPoly PolyForm::component(const Index& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? KPoly(arity_) : it->second;
}

void PolyForm::add(Index idx, const KPoly& c) {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form component of wrong degree");
    if (c.arity() != arity_) throw std::invalid_argument("form coefficient of wrong arity");
    int s = sort_sign(idx);
    if (s == 0 || c.is_zero()) return;
    auto it = comps_.find(idx);
    KPoly v = (s > 0) ? c : -c;
    if (it == comps_.end()) {
        comps_.emplace(idx, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

PolyForm PolyForm::d() const {
    PolyForm r(arity_, degree_ + 1);
    for (const auto& [idx, c] : comps_)
        for (int m = 0; m < arity_; ++m) {
            if (std::find(idx.begin(), idx.end(), m) != idx.end()) continue;
            KPoly dc = c.partial(m);
            if (dc.is_zero()) continue;
            Index n = idx;
            n.insert(n.begin(), m);
            r.add(n, dc);
        }
    return r;
}

PolyForm PolyForm::wedge(const PolyForm& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("wedge: arity mismatch");
    PolyForm r(arity_, degree_ + o.degree_);
    for (const auto& [ia, ca] : comps_)
        for (const auto& [ib, cb] : o.comps_) {
            Index n = ia;
            n.insert(n.end(), ib.begin(), ib.end());
            r.add(n, ca * cb);
        }
    return r;
}

PolyForm PolyForm::operator*(const KPoly& f) const {
    PolyForm r(arity_, degree_);
    for (const auto& [idx, c] : comps_) r.add(idx, c * f);
    return r;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (arity_ != o.arity_ || degree_ != o.degree_) throw std::invalid_argument("form sum: shape mismatch");
    PolyForm r = *this;
    for (const auto& [idx, c] : o.comps_) r.add(idx, c);
    return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
    PolyForm r = *this;
    for (const auto& [idx, c] : o.comps_) r.add(idx, -c);
    return r;
}

bool PolyForm::operator==(const PolyForm& o) const {
    return arity_ == o.arity_ && degree_ == o.degree_ && comps_ == o.comps_;
}

PolyForm PolyForm::restrict_zero(int var) const {
    PolyForm r(arity_ - 1, degree_);
    for (const auto& [idx, c] : comps_) {
        if (std::find(idx.begin(), idx.end(), var) != idx.end()) continue;
        KPoly rc = c.restrict_zero({var});
        Index n;
        for (int i : idx) n.push_back(i > var ? i - 1 : i);
        r.add(n, rc);
    }
    return r;
}

std::optional<KPoly> PolyForm::divide_by_omega() const {
    int n = arity_;
    if (degree_ != n - 1) return std::nullopt;
    std::optional<KPoly> h;
    for (int p = 0; p < n; ++p) {
        Index idx;
        for (int q = 0; q < n; ++q)
            if (q != p) idx.push_back(q);
        KPoly c = component(idx);
        KPoly hp;
        try {
            hp = c.divide_alpha(p, 1);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        if (p % 2 == 0) hp = -hp;
        if (c.is_zero()) hp = KPoly(n);
        if (!h) h = hp;
        else if (*h != hp) return std::nullopt;
    }
    if (!h) return KPoly(n);
    return h;
}

RationalForm RationalForm::d() const {
    RationalForm r;
    r.base = base;
    r.power = power + 1;
    PolyForm dn = numerator.d();
    PolyForm dF = PolyForm::differential(base);
    r.numerator = dn * base - dF.wedge(numerator) * KPoly::constant(base.arity(), Poly(Rational(power)));
    return r;
}

}  // namespace oneloop

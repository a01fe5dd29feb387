#include "klm/series.hpp"

#include <algorithm>

namespace klm {

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 0) throw ValidationError("series order must be nonnegative");
    c_.resize(static_cast<size_t>(order) + 1);
}

BivariateSeries BivariateSeries::from_coeffs(int order, std::vector<IntPoly> coeffs) {
    BivariateSeries s(order);
    if (coeffs.size() > s.c_.size())
        throw ValidationError("more coefficients than the order admits");
    std::move(coeffs.begin(), coeffs.end(), s.c_.begin());
    return s;
}

BivariateSeries BivariateSeries::operator-() const {
    BivariateSeries r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k)
        r.c_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    return a + (-b);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= r.order_; ++j)
            r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return r;
}

BivariateSeries BivariateSeries::truncated(int order) const {
    if (order > order_) throw ValidationError("cannot extend a truncated series");
    BivariateSeries r(order);
    std::copy(c_.begin(), c_.begin() + order + 1, r.c_.begin());
    return r;
}

BivariateSeries BivariateSeries::shifted_up(int k) const {
    BivariateSeries r(order_);
    for (int i = 0; i + k <= order_; ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    return r;
}

int BivariateSeries::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

BivariateSeries BivariateSeries::divide(const BivariateSeries& a, const BivariateSeries& b) {
    int vb = b.valuation();
    if (vb < 0) throw ExactnessError("series division by zero");
    int va = a.valuation();
    if (va >= 0 && va < vb)
        throw ExactnessError("series division: numerator valuation too small");
    const IntPoly& lead = b.coeff(vb);
    if (lead.coeffs().size() != 1)
        throw ExactnessError("series division: leading coefficient " + lead.str() +
                             " is not a monomial");
    const mpz_class lc = lead.coeffs().front();
    const long le = lead.low();
    int n = std::min(a.order(), b.order()) - vb;
    BivariateSeries q(n);
    for (int k = 0; k <= n; ++k) {
        IntPoly acc = a.coeff(k + vb);
        for (int j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j + vb);
        q.set_coeff(k, acc.divexact_monomial(lc, le));
    }
    return q;
}

BivariateSeries BivariateSeries::sqrt() const {
    if (!(coeff(0) == IntPoly(1)))
        throw ExactnessError("series sqrt needs constant coefficient 1");
    BivariateSeries x = BivariateSeries::from_coeffs(0, {IntPoly(1)});
    int prec = 1;
    while (prec <= order_) {
        int next = std::min(2 * prec, order_ + 1);
        // lift x to the new precision before refining
        BivariateSeries lifted(next - 1);
        for (int k = 0; k < prec; ++k) lifted.set_coeff(k, x.coeff(k));
        BivariateSeries q = divide(truncated(next - 1), lifted);
        BivariateSeries sum = lifted + q;
        BivariateSeries half(next - 1);
        for (int k = 0; k <= next - 1; ++k)
            half.set_coeff(k, sum.coeff(k).divexact_monomial(2, 0));
        x = half;
        prec = next;
    }
    if (!(x * x == truncated(order_)))
        throw ExactnessError("series sqrt check failed");
    return x;
}

} // namespace klm

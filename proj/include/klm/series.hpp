#pragma once

#include <vector>

#include "klm/poly.hpp"

namespace klm {

// Power series in u, truncated after u^order, with Laurent-polynomial
// coefficients in t.  All operations are exact; anything that would need a
// denominator (square roots, divisions) checks divisibility and throws
// ExactnessError on failure instead of rounding.
class BivariateSeries {
  public:
    explicit BivariateSeries(int order);
    static BivariateSeries from_coeffs(int order, std::vector<IntPoly> coeffs);

    int order() const { return order_; }
    const IntPoly& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    void set_coeff(int k, IntPoly p) { c_[static_cast<size_t>(k)] = std::move(p); }

    bool operator==(const BivariateSeries&) const = default;

    BivariateSeries operator-() const;
    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

    BivariateSeries truncated(int order) const;   // order <= order()
    BivariateSeries shifted_up(int k) const;      // * u^k, same order, top dropped
    int valuation() const;                        // smallest k with c_k != 0; -1 for 0

    // Long division a / b at order min(a, b) - val(b).  Requires
    // val(a) >= val(b) and the lowest coefficient of b to be a monomial in t.
    static BivariateSeries divide(const BivariateSeries& a, const BivariateSeries& b);

    // Newton iteration x -> (x + s/x) / 2, doubling precision each round.
    // Needs constant coefficient 1; the result is verified by squaring.
    BivariateSeries sqrt() const;

  private:
    int order_ = 0;
    std::vector<IntPoly> c_;
};

} // namespace klm

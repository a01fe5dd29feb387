#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "klm/errors.hpp"

namespace klm {

// Laurent polynomial in one variable t with arbitrary-precision integer
// coefficients.  Stored as a dense coefficient block: coeffs()[i] is the
// coefficient of t^(low()+i).  Canonical form: the block never starts or ends
// with a zero, and the zero polynomial is the empty block with low() == 0.
// Equality is therefore plain member comparison.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(long c) : IntPoly(mpz_class(c)) {}
    IntPoly(mpz_class c);

    static IntPoly monomial(mpz_class c, long exp);
    static IntPoly from_coeffs(long low, std::vector<mpz_class> coeffs);

    bool is_zero() const { return c_.empty(); }
    // Lowest and highest exponents with nonzero coefficient.  Calls on the
    // zero polynomial are rejected so that degree conventions for 0 stay
    // explicit at each use site.
    long low() const;
    long degree() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(long exp) const;

    // True when no negative power of t appears (the zero polynomial counts).
    bool is_ordinary() const { return c_.empty() || low_ >= 0; }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    IntPoly shifted(long k) const;             // multiply by t^k
    IntPoly scaled(const mpz_class& c) const;  // multiply by the constant c
    IntPoly substitute_power(long k) const;    // t -> t^k, k nonzero

    // Divide by c * t^exp; every coefficient must be divisible by c.
    IntPoly divexact_monomial(const mpz_class& c, long exp) const;

    std::string str() const;  // human-readable, for messages and debugging

  private:
    void canonicalize();

    long low_ = 0;
    std::vector<mpz_class> c_;
};

// Whether f(t) == t^n * f(1/t), i.e. coeff(k) == coeff(n-k) for all k.
bool is_palindromic(const IntPoly& f, long n);

// The unique g with deg g < d/2 and f + g palindromic with respect to d.
// Explicitly g_k = f_{d-k} - f_k for every exponent k < d/2.  When f lies in
// Z[t] with deg f <= d, so does g.
IntPoly palindromic_completion(const IntPoly& f, long d);

} // namespace klm

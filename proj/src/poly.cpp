#include "klm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace klm {

IntPoly::IntPoly(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

IntPoly IntPoly::monomial(mpz_class c, long exp) {
    IntPoly p;
    if (c != 0) {
        p.low_ = exp;
        p.c_.push_back(std::move(c));
    }
    return p;
}

IntPoly IntPoly::from_coeffs(long low, std::vector<mpz_class> coeffs) {
    IntPoly p;
    p.low_ = low;
    p.c_ = std::move(coeffs);
    p.canonicalize();
    return p;
}

void IntPoly::canonicalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    size_t tail = c_.size();
    while (c_[tail - 1] == 0) --tail;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + lead);
    c_.resize(tail - lead);
    low_ += static_cast<long>(lead);
}

long IntPoly::low() const {
    if (is_zero()) throw Error("low() of the zero polynomial");
    return low_;
}

long IntPoly::degree() const {
    if (is_zero()) throw Error("degree() of the zero polynomial");
    return low_ + static_cast<long>(c_.size()) - 1;
}

mpz_class IntPoly::coeff(long exp) const {
    if (is_zero() || exp < low_) return 0;
    size_t i = static_cast<size_t>(exp - low_);
    return i < c_.size() ? c_[i] : mpz_class(0);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(low_, o.low_);
    long hi = std::max(degree(), o.degree());
    std::vector<mpz_class> out(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < c_.size(); ++i) out[low_ - lo + i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[o.low_ - lo + i] += o.c_[i];
    low_ = lo;
    c_ = std::move(out);
    canonicalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this += -o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

IntPoly IntPoly::shifted(long k) const {
    IntPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    if (c == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

IntPoly IntPoly::substitute_power(long k) const {
    if (k == 0) throw ValidationError("substitute_power: exponent must be nonzero");
    if (is_zero()) return IntPoly();
    if (k == 1) return *this;
    IntPoly r;
    if (k > 0) {
        r.low_ = low_ * k;
        r.c_.assign(static_cast<size_t>(k) * (c_.size() - 1) + 1, mpz_class(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    } else {
        // exponents reverse order; the old degree becomes the new low
        long step = -k;
        r.low_ = degree() * k;
        r.c_.assign(static_cast<size_t>(step) * (c_.size() - 1) + 1, mpz_class(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[(c_.size() - 1 - i) * step] = c_[i];
    }
    return r;
}

IntPoly IntPoly::divexact_monomial(const mpz_class& c, long exp) const {
    if (c == 0) throw ExactnessError("division by zero monomial");
    IntPoly r = shifted(-exp);
    for (auto& x : r.c_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0)
            throw ExactnessError("inexact division: " + x.get_str() + " by " + c.get_str());
        x = std::move(q);
    }
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        long e = low_ + static_cast<long>(i);
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

bool is_palindromic(const IntPoly& f, long n) {
    if (f.is_zero()) return true;
    return f == f.substitute_power(-1).shifted(n);
}

namespace {
long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
} // namespace

IntPoly palindromic_completion(const IntPoly& f, long d) {
    if (f.is_zero()) return IntPoly();
    // candidate exponents k < d/2 where f_{d-k} or f_k can be nonzero
    long klo = std::min(f.low(), d - f.degree());
    long khi = floor_half(d - 1);  // k < d/2 over the integers
    if (khi < klo) return IntPoly();
    std::vector<mpz_class> out(static_cast<size_t>(khi - klo + 1));
    for (long k = klo; k <= khi; ++k) out[k - klo] = f.coeff(d - k) - f.coeff(k);
    return IntPoly::from_coeffs(klo, std::move(out));
}

} // namespace klm

#pragma once

#include <utility>

#include "wp/poly.hpp"

namespace wp {

/// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and den
/// monic. Equal field values therefore have identical representations, so
/// operator== is exact semantic equality.
template <class P>
class RatFun {
public:
    using PolyType = P;
    using Coeff = typename P::Coeff;

    RatFun() : den_(P(Coeff(1))) {}
    RatFun(int n) : num_(P(Coeff(n))), den_(P(Coeff(1))) {}
    explicit RatFun(P p) : num_(std::move(p)), den_(P(Coeff(1))) {}
    RatFun(P n, P d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) {
        if (y.is_zero()) throw DivisionByZero();
        return RatFun(x.num_ * y.den_, x.den_ * y.num_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFun& operator+=(const RatFun& y) { return *this = *this + y; }
    RatFun& operator-=(const RatFun& y) { return *this = *this - y; }
    RatFun& operator*=(const RatFun& y) { return *this = *this * y; }
    RatFun& operator/=(const RatFun& y) { return *this = *this / y; }

    RatFun reciprocal() const {
        if (is_zero()) throw DivisionByZero();
        return RatFun(den_, num_);
    }

    bool operator==(const RatFun&) const = default;

private:
    P num_, den_;

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = P(Coeff(1));
            return;
        }
        P g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        if (!(den_.lc() == Coeff(1))) {
            Coeff inv = Coeff(1) / den_.lc();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

}  // namespace wp

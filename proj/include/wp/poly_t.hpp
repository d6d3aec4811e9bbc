#pragma once

#include <limits>

#include "wp/base_field.hpp"

namespace wp {

/// Polynomial in t with coefficients in k = Q(z).
using PolyT = Poly<RatFunZ>;

/// Gcd over Q(z)[t]: clears z-denominators and runs a primitive pseudo-
/// remainder sequence over Q[z][t] to control coefficient growth.
template <>
struct GcdPolicy<RatFunZ> {
    static Poly<RatFunZ> gcd(const Poly<RatFunZ>& a, const Poly<RatFunZ>& b);
};

/// Normalized rational function in t over k.
using RatFunT = RatFun<PolyT>;

inline PolyT polyt_const(const RatFunZ& c) { return PolyT(c); }
inline PolyT polyt_t() { return PolyT::variable(); }

/// kappa differentiates the coefficients (d/dz); partial_t is the formal
/// derivative in t. Both are derivations on k[t] and commute.
PolyT kappa(const PolyT& p);
inline PolyT partial_t(const PolyT& p) { return p.derivative(); }

/// Quotient-rule extensions of the two derivations to k(t).
RatFunT kappa(const RatFunT& f);
RatFunT partial_t(const RatFunT& f);

inline PolyT gcd_t(const PolyT& a, const PolyT& b) { return GcdPolicy<RatFunZ>::gcd(a, b); }
inline Xgcd<RatFunZ> xgcd_t(const PolyT& a, const PolyT& b) { return xgcd(a, b); }

/// res_y(d0_const + d0_lin*y, y^2 - q) = d0_const^2 - d0_lin^2 * q.
/// Closed form of the 3x3 Sylvester determinant for the quadratic case.
PolyT resultant_quadratic_m(const PolyT& d0_const, const PolyT& d0_lin, const PolyT& q);

/// The representative r of c modulo v with deg r < deg v, computed through
/// the inverse of den(c) mod v. Requires gcd(den(c), v) = 1.
PolyT mod_reduce(const RatFunT& c, const PolyT& v);

/// Distinguished order value for the zero element (order +infinity).
inline constexpr long kOrderInfinity = std::numeric_limits<long>::max();

/// Multiplicity of p in x (0 when p does not divide x). p nonconstant.
int multiplicity(const PolyT& x, const PolyT& p);

/// nu_p(f): multiplicity of p in the numerator minus in the denominator.
/// The caller guarantees p irreducible. Returns kOrderInfinity for f = 0.
long order_at(const RatFunT& f, const PolyT& p);

/// nu_infinity(f) = deg den - deg num; kOrderInfinity for f = 0.
long order_at_infinity(const RatFunT& f);

}  // namespace wp

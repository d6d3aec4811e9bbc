#pragma once

#include <optional>

#include "wp/poly.hpp"
#include "wp/ratfun.hpp"
#include "wp/rational.hpp"

namespace wp {

/// Univariate polynomial over Q in the base variable z.
using PolyZ = Poly<Rational>;

/// Element of the base differential field k = Q(z), with derivation d/dz.
using RatFunZ = RatFun<PolyZ>;

inline RatFunZ ratfunz_const(const Rational& r) { return RatFunZ(PolyZ(r)); }
inline RatFunZ ratfunz_z() { return RatFunZ(PolyZ::variable()); }

/// True iff f lies in the constant field Q.
inline bool is_constant_rational(const RatFunZ& f) {
    return f.is_polynomial() && f.num().is_constant();
}

/// d/dz by the quotient rule, normalized.
RatFunZ deriv_z(const RatFunZ& f);

/// Term-wise z-antiderivative of a polynomial.
PolyZ antiderivative_z(const PolyZ& p);

struct HermiteRationalResult {
    RatFunZ g;   // integrated part
    PolyZ poly;  // polynomial part, integrates term-wise
    RatFunZ r;   // proper remainder with squarefree denominator, coprime parts
};

/// Ostrogradsky-Hermite decomposition over Q(z):
/// f = deriv_z(g) + poly + r, with r proper and den(r) squarefree.
HermiteRationalResult hermite_rational(const RatFunZ& f);

/// Returns F with deriv_z(F) = f when f has an antiderivative inside Q(z),
/// otherwise nothing. f is a derivative iff its Hermite remainder is zero.
std::optional<RatFunZ> is_derivative_in_k(const RatFunZ& f);

}  // namespace wp

#include "wp/base_field.hpp"

namespace wp {

RatFunZ deriv_z(const RatFunZ& f) {
    return RatFunZ(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                   f.den() * f.den());
}

PolyZ antiderivative_z(const PolyZ& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> cs(p.coeffs().size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        cs[k + 1] = p.coeffs()[k] / Rational(static_cast<long>(k) + 1);
    return PolyZ(std::move(cs));
}

HermiteRationalResult hermite_rational(const RatFunZ& f) {
    HermiteRationalResult out;
    if (f.is_zero()) return out;

    auto [quot, rem] = divmod(f.num(), f.den());
    out.poly = quot;
    if (rem.is_zero()) return out;

    auto [unit, parts] = squarefree_decomposition(f.den());  // den monic, unit == 1
    (void)unit;

    // Partial fractions over the pairwise coprime prime powers D_i^mu_i, then
    // lower each multiplicity by integration by parts until it reaches one.
    PolyZ residual = rem;
    PolyZ modprod = f.den();
    for (const auto& part : parts) {
        PolyZ M = part.factor.pow(static_cast<unsigned>(part.multiplicity));
        modprod = exact_div(modprod, M);
        PolyZ N;
        if (modprod.degree() == 0) {
            N = residual;
        } else {
            Xgcd<Rational> x = xgcd(M, modprod);  // s*M + u*modprod = 1
            N = poly_mod(residual * x.u, M);
            residual = exact_div(residual - N * modprod, M);
        }

        // N/D^m = (-T/((m-1) D^{m-1}))' + (N s + T'/(m-1)) / D^{m-1}
        // where s D + u D' = 1 and T = N u.
        const PolyZ& D = part.factor;
        Xgcd<Rational> x = xgcd(D, D.derivative());
        PolyZ Ncur = N;
        for (int m = part.multiplicity; m >= 2; --m) {
            PolyZ T = Ncur * x.u;
            out.g += RatFunZ(T * Rational(-1, m - 1), D.pow(static_cast<unsigned>(m - 1)));
            Ncur = Ncur * x.s + T.derivative() * Rational(1, m - 1);
        }
        auto [w, rr] = divmod(Ncur, D);
        out.poly = out.poly + w;
        if (!rr.is_zero()) out.r += RatFunZ(rr, D);
    }
    return out;
}

std::optional<RatFunZ> is_derivative_in_k(const RatFunZ& f) {
    HermiteRationalResult hr = hermite_rational(f);
    if (!hr.r.is_zero()) return std::nullopt;
    return hr.g + RatFunZ(antiderivative_z(hr.poly));
}

}  // namespace wp

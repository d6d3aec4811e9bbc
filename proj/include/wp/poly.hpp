#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wp/errors.hpp"

namespace wp {

/// Dense univariate polynomial. `coeffs()[k]` is the coefficient of x^k and
/// the leading coefficient is nonzero unless the polynomial is zero.
///
/// Ring operations need C to be a commutative ring with 0, 1 and exact
/// equality; division-based algorithms (divmod, gcd, monic, ...) additionally
/// need C to be a field.
template <class C>
class Poly {
public:
    using Coeff = C;

    Poly() = default;
    explicit Poly(C c) {
        coeffs_.push_back(std::move(c));
        trim();
    }
    explicit Poly(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly monomial(C c, std::size_t k) {
        std::vector<C> cs(k + 1, C(0));
        cs[k] = std::move(c);
        return Poly(std::move(cs));
    }
    static Poly variable() { return monomial(C(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const C& lc() const {
        if (is_zero()) throw InternalError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(0); }
    C constant_term() const { return coeff(0); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& x, const Poly& y) {
        std::vector<C> cs(std::max(x.coeffs_.size(), y.coeffs_.size()), C(0));
        for (std::size_t k = 0; k < x.coeffs_.size(); ++k) cs[k] = x.coeffs_[k];
        for (std::size_t k = 0; k < y.coeffs_.size(); ++k) cs[k] = cs[k] + y.coeffs_[k];
        return Poly(std::move(cs));
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
    Poly operator-() const {
        std::vector<C> cs;
        cs.reserve(coeffs_.size());
        for (const auto& c : coeffs_) cs.push_back(C(0) - c);
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly();
        std::vector<C> cs(x.coeffs_.size() + y.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                cs[i + j] = cs[i + j] + x.coeffs_[i] * y.coeffs_[j];
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Poly& x, const C& c) {
        std::vector<C> cs;
        cs.reserve(x.coeffs_.size());
        for (const auto& xc : x.coeffs_) cs.push_back(xc * c);
        return Poly(std::move(cs));
    }
    friend Poly operator*(const C& c, const Poly& x) { return x * c; }

    bool operator==(const Poly&) const = default;

    /// Formal derivative in the polynomial's own variable.
    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<C> cs(coeffs_.size() - 1, C(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) cs[k - 1] = coeffs_[k] * C(static_cast<int>(k));
        return Poly(std::move(cs));
    }

    C eval(const C& x) const {
        C acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    Poly pow(unsigned n) const {
        Poly acc(C(1));
        Poly base = *this;
        while (n > 0) {
            if (n & 1u) acc = acc * base;
            base = base * base;
            n >>= 1u;
        }
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        C inv = C(1) / lc();
        return *this * inv;
    }

    /// Multiply by x^k.
    Poly times_power(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<C> cs(coeffs_.size() + k, C(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
        return Poly(std::move(cs));
    }

private:
    std::vector<C> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
    }
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<C>(), a};
    std::vector<C> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, C(0));
    Poly<C> r = a;
    C binv = C(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        C c = r.lc() * binv;
        q[shift] = c;
        r = r - Poly<C>::monomial(c, shift) * b;
    }
    return {Poly<C>(std::move(q)), r};
}

/// Division known to be exact; a nonzero remainder is an internal defect.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("exact polynomial division left a remainder");
    return q;
}

template <class C>
Poly<C> poly_mod(const Poly<C>& a, const Poly<C>& v) {
    return divmod(a, v).second;
}

/// Monic gcd by the Euclidean remainder sequence.
template <class C>
Poly<C> poly_gcd_euclid(Poly<C> a, Poly<C> b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0)");
    while (!b.is_zero()) {
        Poly<C> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Gcd strategy keyed on the coefficient type. The default is the monic
/// Euclidean loop; coefficient types with cheaper fraction-free routes
/// specialize this.
template <class C>
struct GcdPolicy {
    static Poly<C> gcd(const Poly<C>& a, const Poly<C>& b) { return poly_gcd_euclid(a, b); }
};

template <class C>
Poly<C> poly_gcd(const Poly<C>& a, const Poly<C>& b) {
    return GcdPolicy<C>::gcd(a, b);
}

template <class C>
Poly<C> poly_lcm(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<C>();
    return exact_div(a * b, poly_gcd(a, b)).monic();
}

template <class C>
struct Xgcd {
    Poly<C> g, s, u;  // s*a + u*b = g, g monic
};

/// Extended Euclidean algorithm; g is the monic gcd and s*a + u*b = g.
template <class C>
Xgcd<C> xgcd(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("xgcd(0, 0)");
    Poly<C> r0 = a, r1 = b;
    Poly<C> s0(C(1)), s1;
    Poly<C> u0, u1(C(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<C> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<C> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    C inv = C(1) / r0.lc();
    return {r0 * inv, s0 * inv, u0 * inv};
}

/// Inverse of a modulo v; throws NotInvertible when gcd(a, v) != 1.
template <class C>
Poly<C> inv_mod(const Poly<C>& a, const Poly<C>& v) {
    Poly<C> r = poly_mod(a, v);
    if (r.is_zero()) throw NotInvertible("element is zero modulo the modulus");
    Xgcd<C> x = xgcd(r, v);
    if (x.g.degree() != 0) throw NotInvertible("element shares a factor with the modulus");
    return poly_mod(x.s, v);
}

template <class C>
struct SquarefreePart {
    Poly<C> factor;  // monic, squarefree, pairwise coprime across parts
    int multiplicity;
};

/// Yun's squarefree decomposition: d = unit * prod factor^multiplicity with
/// multiplicities strictly increasing.
template <class C>
std::pair<C, std::vector<SquarefreePart<C>>> squarefree_decomposition(const Poly<C>& d) {
    if (d.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
    C unit = d.lc();
    Poly<C> a = d.monic();
    std::vector<SquarefreePart<C>> parts;
    if (a.is_constant()) return {unit, parts};

    Poly<C> da = a.derivative();
    Poly<C> g = poly_gcd(a, da);
    if (g.degree() == 0) {
        parts.push_back({a, 1});
        return {unit, parts};
    }
    Poly<C> c = exact_div(a, g);
    Poly<C> w = exact_div(da, g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        Poly<C> p = poly_gcd(c, w);
        if (p.degree() > 0) parts.push_back({p, i});
        c = exact_div(c, p);
        w = exact_div(w, p) - c.derivative();
        ++i;
    }
    return {unit, parts};
}

}  // namespace wp

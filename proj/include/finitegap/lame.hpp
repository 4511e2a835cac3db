#pragma once

/**
 * @file lame.hpp
 * @brief Hyperelliptic spectral curve of the Lamé operator -d^2 + g(g+1)P.
 *
 * Q = sum_s A_s(z) P^s solves Q''' - 4Q'(u - z) - 2u'Q = 0 with u = g(g+1)P,
 * and  Q'^2/4 - Q Q''/2 + (u - z) Q^2  is then independent of x. Everything
 * runs in the generic ring (g2 symbolic).
 */

#include "finitegap/spectral_curve.hpp"
#include "finitegap/weierstrass.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace finitegap {

namespace lame_detail {

inline constexpr Mode kMode = Mode::generic;

inline WeierstrassElement ring(const SparsePoly& p) { return WeierstrassElement::reduce(p, kMode); }
inline WeierstrassElement potential(int g) {
    return ring(SparsePoly::var(Var::P) * Rational(static_cast<long>(g) * (g + 1)));
}

}  // namespace lame_detail

/**
 * A_0..A_g with A_g = 1 and, for s < g,
 *   A_s = (s+1)(8z A_{s+1} - (s+2)(2s+3) g2 A_{s+2} - 2(s+2)(s+3) g3 A_{s+3})
 *         / (4(2s+1)(g^2+g-s(s+1))).
 */
inline std::vector<SparsePoly> lame_coefficients(int g) {
    if (g < 1) throw std::invalid_argument("Lamé genus must be >= 1, got " + std::to_string(g));
    std::vector<SparsePoly> A(static_cast<std::size_t>(g) + 1);
    A[static_cast<std::size_t>(g)] = SparsePoly(1);
    auto at = [&](int k) { return k <= g ? A[static_cast<std::size_t>(k)] : SparsePoly{}; };
    const SparsePoly z = SparsePoly::var(Var::z), g2 = SparsePoly::var(Var::g2), g3 = SparsePoly::var(Var::g3);
    for (int s = g - 1; s >= 0; --s) {
        const long S = s;
        SparsePoly num = 8L * z * at(s + 1) - ((S + 2) * (2 * S + 3)) * g2 * at(s + 2) -
                         (2 * (S + 2) * (S + 3)) * g3 * at(s + 3);
        const long den = 4 * (2 * S + 1) * (static_cast<long>(g) * (g + 1) - S * (S + 1));
        A[static_cast<std::size_t>(s)] = num * Rational(S + 1, den);
    }
    return A;
}

/// Q = sum_s A_s P^s.
inline WeierstrassElement lame_Q(const std::vector<SparsePoly>& A) {
    WeierstrassElement Q(lame_detail::kMode);
    for (std::size_t s = 0; s < A.size(); ++s)
        Q += lame_detail::ring(A[s] * SparsePoly::var(Var::P, static_cast<int>(s)));
    return Q;
}

/// (4 z A0^2 - A0 (4 g3 A2 + g2 A1) + g3 A1^2) / 4.
inline SparsePoly lame_curve_rhs(const std::vector<SparsePoly>& A) {
    auto at = [&](std::size_t k) { return k < A.size() ? A[k] : SparsePoly{}; };
    const SparsePoly z = SparsePoly::var(Var::z), g2 = SparsePoly::var(Var::g2), g3 = SparsePoly::var(Var::g3);
    return (4L * z * at(0) * at(0) - at(0) * (4L * g3 * at(2) + g2 * at(1)) + g3 * at(1) * at(1)) *
           Rational(1, 4);
}

struct LameData {
    int g = 0;
    std::vector<SparsePoly> A;  ///< rescaled so that the curve is monic; A_g = lambda
    Rational scale{1};          ///< lambda = 1 / (leading z-coefficient of A_0 for A_g = 1)
    WeierstrassElement Q{Mode::generic};
    SpectralCurve curve;
};

/**
 * With A_g = 1 the right-hand side has leading coefficient L^2, L the leading
 * coefficient of A_0 (L = 1 only for g = 1). Rescaling Q by 1/L makes it monic.
 */
inline LameData lame_data(int g) {
    LameData d;
    d.g = g;
    d.A = lame_coefficients(g);
    d.scale = Rational(1) / d.A[0].leading_coefficient(Var::z).constant_value();
    for (auto& a : d.A) a = a * d.scale;
    d.Q = lame_Q(d.A);
    d.curve.op = OperatorKind::lame;
    d.curve.g = g;
    d.curve.F = lame_curve_rhs(d.A);
    d.curve.normalized = true;
    if (d.curve.F.degree(Var::z) != 2 * g + 1 || !(d.curve.F.leading_coefficient(Var::z) == SparsePoly(1)))
        throw std::logic_error("Lamé curve is not monic of degree 2g+1");
    return d;
}

inline SpectralCurve lame_curve(int g) { return lame_data(g).curve; }

/// Q''' - 4Q'(u - z) - 2u'Q.
inline WeierstrassElement lame_ode_residual(const WeierstrassElement& Q, int g) {
    using namespace lame_detail;
    const auto d = derivatives(Q, 3);
    const WeierstrassElement u = potential(g);
    return d[3] - 4L * d[1] * (u - SparsePoly::var(Var::z)) - 2L * d_dx(u) * Q;
}

/// Q'^2/4 - Q Q''/2 + (u - z) Q^2 as a ring element.
inline WeierstrassElement lame_invariant(const WeierstrassElement& Q, int g) {
    using namespace lame_detail;
    const auto d = derivatives(Q, 2);
    return d[1] * d[1] * Rational(1, 4) - d[0] * d[2] * Rational(1, 2) +
           (potential(g) - SparsePoly::var(Var::z)) * d[0] * d[0];
}

/**
 * lame_invariant(Q) + rhs. The invariant equals minus the Theorem 1
 * right-hand side for every g: the two displays differ by the sign of w^2.
 */
inline WeierstrassElement lame_consistency_residual(const WeierstrassElement& Q, int g, const SparsePoly& rhs) {
    return lame_invariant(Q, g) + rhs;
}

}  // namespace finitegap

#pragma once

/**
 * @file spectral_curve.hpp
 * @brief Spectral curve values shared by the Halphen and Lame pipelines.
 */

#include "finitegap/sparse_poly.hpp"

#include <optional>
#include <string>

namespace finitegap {

enum class OperatorKind { halphen, lame };

inline const char* operator_name(OperatorKind k) { return k == OperatorKind::halphen ? "halphen" : "lame"; }

enum class HalphenCase { I, II };

inline const char* case_name(HalphenCase c) { return c == HalphenCase::I ? "I" : "II"; }

/**
 * w^n = H(z) w + F(z), with n = 3 for Halphen and n = 2 for Lame.
 *
 * H and F are polynomials in z whose coefficients live in Q[g3] (Halphen,
 * equianharmonic) or Q[g2, g3] (Lame).
 */
struct SpectralCurve {
    OperatorKind op = OperatorKind::halphen;
    int g = 0;
    std::optional<HalphenCase> halphen_case;
    SparsePoly H;
    SparsePoly F;
    bool normalized = false;

    int w_power() const { return op == OperatorKind::halphen ? 3 : 2; }

    friend bool operator==(const SpectralCurve&, const SpectralCurve&) = default;
};

}  // namespace finitegap

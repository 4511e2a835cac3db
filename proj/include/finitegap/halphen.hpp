#pragma once

/**
 * @file halphen.hpp
 * @brief Spectral curve of the Halphen operator, equianharmonic lattice.
 *
 *   L3 = d^3 - g(g+2) P d/dx - g(g+2)/2 Pp,   g != 2 mod(3),  g2 = 0.
 *
 * With f = -g(g+2)P the commuting pair is encoded by two x-dependent
 * polynomials S, Q in the spectral parameter z, tied together by
 *
 *   3z Q' = 2S''' + 2f S' + S f'                                      (first identity)
 *   8f^2 Q' + 36z S' + 9Q' f'' + 15 f' Q'' + 2Q f''' + 2f(4Q f' + 5Q''')
 *     + 2Q^(5) = 0                                                     (second identity)
 *
 * Eliminating Q yields an eighth-order linear equation sum_j m_j S^(j) = 0.
 * S is found by substituting the polynomial-in-P ansatz and solving the
 * resulting triangular system; H and F are then evaluated in the ring and
 * must come out x-constant.
 */

#include "finitegap/linear_solve.hpp"
#include "finitegap/spectral_curve.hpp"
#include "finitegap/weierstrass.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finitegap {

class InvalidGenus : public std::invalid_argument {
public:
    explicit InvalidGenus(int g)
        : std::invalid_argument("invalid genus " + std::to_string(g) +
                                ": the Halphen operator requires g >= 1 and g ≠ 2 mod(3)"),
          genus(g) {}
    int genus;
};

/// Raised when a quantity that must be independent of x is not.
class NonConstant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotARationalCube : public std::runtime_error {
public:
    explicit NotARationalCube(const Rational& lead)
        : std::runtime_error("leading coefficient " + lead.to_string() + " is not a rational cube"),
          leading(lead) {}
    Rational leading;
};

struct GenusProfile {
    int g = 0;
    HalphenCase kase = HalphenCase::I;
    int M = 0;
    int r = 0;
    int epsilon = 0;
    int N = 0;  ///< order of the commuting operator

    /// Top coefficient of the S ansatz is const/z (g = 6M or 6M-2) rather than const.
    bool top_over_z() const { return g % 6 == 0 || g % 6 == 4; }
    /// First index of the coefficient sequence (A_0.. in case I, B_1.. in case II).
    int first_index() const { return kase == HalphenCase::I ? 0 : 1; }
    /// Power of P multiplying the r-th ansatz coefficient.
    int p_power(int idx) const { return kase == HalphenCase::I ? 3 * idx : 3 * idx - 1; }

    friend bool operator==(const GenusProfile&, const GenusProfile&) = default;
};

inline bool is_valid_genus(int g) { return g >= 1 && g % 3 != 2; }

inline GenusProfile classify(int g) {
    if (!is_valid_genus(g)) throw InvalidGenus(g);
    GenusProfile p;
    p.g = g;
    p.r = g / 3;
    p.epsilon = g % 3;
    p.N = 3 * p.r + 1 + p.epsilon;
    switch (g % 6) {
        case 0: p.kase = HalphenCase::I; p.M = g / 6; break;
        case 3: p.kase = HalphenCase::I; p.M = (g - 3) / 6; break;
        case 4: p.kase = HalphenCase::II; p.M = (g + 2) / 6; break;
        default: p.kase = HalphenCase::II; p.M = (g - 1) / 6; break;
    }
    return p;
}

/// Coefficients A_r (case I) or B_r (case II) of the S ansatz, Laurent in z.
struct CoefficientSequence {
    HalphenCase kind = HalphenCase::I;
    int first_index = 0;
    std::vector<SparsePoly> entries;
    Rational free_scale{1};

    /// Entry by its ansatz index; zero outside the stored range.
    SparsePoly at(int idx) const {
        int k = idx - first_index;
        if (k < 0 || k >= static_cast<int>(entries.size())) return {};
        return entries[static_cast<std::size_t>(k)];
    }
    int last_index() const { return first_index + static_cast<int>(entries.size()) - 1; }

    CoefficientSequence scaled(const Rational& lambda) const {
        CoefficientSequence s = *this;
        for (auto& e : s.entries) e = e * lambda;
        s.free_scale *= lambda;
        return s;
    }
};

struct SQPair {
    WeierstrassElement S;
    WeierstrassElement Q;
    GenusProfile profile;
};

namespace halphen_detail {

inline constexpr Mode kMode = Mode::equianharmonic;

inline SparsePoly z_pow(int k) { return SparsePoly(Monomial{{Var::z, k}}, Rational(1)); }
inline SparsePoly g3_pow(int k) { return SparsePoly::var(Var::g3, k); }
inline WeierstrassElement ring(const SparsePoly& p) { return WeierstrassElement::reduce(p, kMode); }
inline WeierstrassElement P_pow(int k) { return ring(SparsePoly::var(Var::P, k)); }
inline WeierstrassElement Pp() { return WeierstrassElement::Pp(kMode); }

/// f = -g(g+2)P.
inline WeierstrassElement potential(int g) { return P_pow(1) * Rational(-g * (g + 2)); }

}  // namespace halphen_detail

namespace halphen_detail {

/// Negates every odd power of g3, i.e. substitutes g3 -> -g3.
inline SparsePoly negate_g3(const SparsePoly& p) {
    std::vector<Term> out(p.terms().begin(), p.terms().end());
    for (auto& t : out)
        if (t.mono[Var::g3] % 2 != 0) t.coeff = -t.coeff;
    return SparsePoly::from_terms(std::move(out));
}

inline std::array<WeierstrassElement, 9> m_display(int g, long z2p3) {
    if (!is_valid_genus(g)) throw InvalidGenus(g);
    const Rational G(g);
    const SparsePoly z2 = z_pow(2), g3 = g3_pow(1);
    const WeierstrassElement P = P_pow(1), P3 = P_pow(3), P6 = P_pow(6);
    const Rational chain = G * (G - 3) * (G - 1) * (G + 2) * (G + 3) * (G + 5);
    const Rational gg2 = G * (G + 2);

    std::array<WeierstrassElement, 9> m{};
    m[0] = 16L * chain * P_pow(2) * (ring(g3) + 4L * P3) * Pp();
    m[1] = ring(9L * g3 * (gg2 * (5 * G * G - 16 + 10 * G) * g3 + 12L * z2)) +
           ring(2L * gg2 * (1080 - 918 * G - 347 * G * G + 112 * G.pow(3) + 28 * G.pow(4)) * g3 +
                z2p3 * z2) * P3 +
           128L * chain * P6;
    m[2] = (ring(9L * gg2 * (16 - 10 * G - 5 * G * G) * g3 - 108L * z2) +
            16L * (G - 1) * gg2 * (G + 3) * (2 * G + G * G - 30) * P3) *
           P * Pp();
    m[3] = ring(12L * gg2 * (57 - 22 * G - 11 * G * G) * g3) * P_pow(2) -
           312L * gg2 * (G - 1) * (G + 3) * P_pow(5);
    m[4] = 12L * G * (ring(-4L * (G + 2) * g3) - 3L * (G - 1) * (G + 2) * (G + 3) * P3) * Pp();
    m[5] = 48L * gg2 * P * (ring(g3) + P3);
    m[6] = 24L * gg2 * P_pow(2) * Pp();
    m[7] = 4L * (ring(g3) + 10L * P3);
    m[8] = -4L * P * Pp();
    return m;
}

}  // namespace halphen_detail

/**
 * The m_0..m_8 display exactly as printed alongside the Halphen curve
 * derivation. It is written for the relation Pp^2 = 4P^3 + g3, so its g3
 * terms carry the opposite sign from this ring; use m_coefficients() for
 * computation.
 */
inline std::array<WeierstrassElement, 9> printed_m_coefficients(int g) {
    return halphen_detail::m_display(g, 108);
}

/**
 * Coefficients m_0..m_8 of the eighth-order equation for S in this ring's
 * convention Pp^2 = 4P^3 - g3: the printed display with g3 -> -g3 and the
 * z^2 P^3 coefficient of m_1 equal to 1080 (the eliminant of the two
 * identities, divided by -8g(g-1)(g+2)(g+3)). m_0 and m_2 carry a factor Pp.
 */
inline std::array<WeierstrassElement, 9> m_coefficients(int g) {
    auto m = halphen_detail::m_display(g, 1080);
    for (auto& e : m) e = halphen_detail::ring(halphen_detail::negate_g3(e.value()));
    return m;
}

/// sum_j m_j S^(j): zero iff S solves the eighth-order equation.
inline WeierstrassElement apply_m(const WeierstrassElement& S, int g) {
    const auto m = m_coefficients(g);
    const auto d = derivatives(S, 8);
    WeierstrassElement acc(halphen_detail::kMode);
    for (std::size_t j = 0; j < 9; ++j) acc += m[j] * d[j];
    return acc;
}

/// Residual of 3z Q' - (2S''' + 2f S' + S f').
inline WeierstrassElement first_identity_residual(const SQPair& p) {
    using namespace halphen_detail;
    const auto f = derivatives(potential(p.profile.g), 1);
    const auto S = derivatives(p.S, 3);
    return 3L * z_pow(1) * d_dx(p.Q) - (2L * S[3] + 2L * f[0] * S[1] + S[0] * f[1]);
}

/// Left-hand side of the fifth-order identity linking Q and S.
inline WeierstrassElement second_identity_residual(const SQPair& p) {
    using namespace halphen_detail;
    const auto f = derivatives(potential(p.profile.g), 3);
    const auto Q = derivatives(p.Q, 5);
    const auto S1 = d_dx(p.S);
    return 8L * f[0] * f[0] * Q[1] + 36L * z_pow(1) * S1 + 9L * Q[1] * f[2] + 15L * f[1] * Q[2] +
           2L * Q[0] * f[3] + 2L * f[0] * (4L * Q[0] * f[1] + 5L * Q[3]) + 2L * Q[5];
}

namespace halphen_detail {

inline void check_sequence_floor(const CoefficientSequence& seq) {
    for (const auto& e : seq.entries)
        if (!e.is_zero() && e.low_degree(Var::z) < -1)
            throw InconsistentSystem("ansatz coefficient has a pole of order > 1 in z");
}

inline WeierstrassElement assemble_S(const GenusProfile& prof, const CoefficientSequence& seq) {
    WeierstrassElement S(kMode);
    for (int idx = seq.first_index; idx <= seq.last_index(); ++idx)
        S += ring(z_pow(1) * seq.at(idx)) * P_pow(prof.p_power(idx));
    return S;
}

}  // namespace halphen_detail

struct SolvedS {
    WeierstrassElement S;
    CoefficientSequence seq;
};

/**
 * Solves sum_j m_j S^(j) = 0 over the ansatz
 *   case I:  S = sum_{r=0..M} z A_r P^(3r)
 *   case II: S = sum_{r=1..M} z B_r P^(3r-1)
 * with the top coefficient fixed to top_scale/z (g = 6M, 6M-2) or top_scale.
 * For g = 1 the ansatz is empty and S = 0.
 */
inline SolvedS solve_S(const GenusProfile& prof, const Rational& top_scale = Rational(1)) {
    using namespace halphen_detail;
    CoefficientSequence seq;
    seq.kind = prof.kase;
    seq.first_index = prof.first_index();
    seq.free_scale = top_scale;
    const int count = prof.M - seq.first_index + 1;
    if (count <= 0) return {WeierstrassElement(kMode), seq};

    std::vector<WeierstrassElement> images;
    for (int idx = seq.first_index; idx <= prof.M; ++idx)
        images.push_back(apply_m(ring(z_pow(1)) * P_pow(prof.p_power(idx)), prof.g));
    std::vector<std::optional<SparsePoly>> known(static_cast<std::size_t>(count));
    known.back() = z_pow(prof.top_over_z() ? -1 : 0) * top_scale;

    seq.entries = solve_triangular(relations_from_images(images, WeierstrassElement(kMode)), known);
    check_sequence_floor(seq);
    return {assemble_S(prof, seq), seq};
}

/// The printed case-I recurrence coefficients a_r, b_r, c_r, d_r (polynomials in z, g3).
struct RecursionCoeffs {
    SparsePoly a, b, c, d;
};

inline RecursionCoeffs printed_recursion_coeffs(int g, const Rational& r) {
    using namespace halphen_detail;
    const Rational G(g), R = r;
    RecursionCoeffs k;
    k.a = g3_pow(3) * (108L * (R - 2) * (R - 1) * R * (8 - 3 * R) * (5 - 3 * R) * (4 - 3 * R) *
                       (3 * R - 2) * (3 * R - 1));
    k.b = g3_pow(2) * (216L * (R - 1) * R * (3 * R - 5) * (3 * R - 2) * (3 * R - 1) *
                       (4 * G - 30 + 2 * G * G + 87 * R - 6 * G * R - 3 * G * G * R -
                        81 * R * R + 54 * R.pow(3)));
    const Rational inner =
        4 * G * G - 48 * G + 28 * G.pow(3) + 7 * G.pow(4) + 264 * G * R + 84 * G * G * R -
        48 * G.pow(3) * R - 12 * G.pow(4) * R + 3024 * R * R - 4104 * G * R * R -
        1620 * G * G * R * R + 432 * G.pow(3) * R * R + 108 * G.pow(4) * R * R +
        1728 * G * R.pow(3) + 864 * G * G * R.pow(3) + 45360 * R.pow(4) -
        10368 * G * R.pow(4) - 5184 * G * G * R.pow(4) + 46656 * R.pow(6);
    k.c = g3_pow(1) * (9L * R * (3 * R - 2) * inner) + z_pow(2) * (324L * R * (3 * R - 2));
    k.d = SparsePoly(8L * (2 + 3 * R) * (3 + G + 3 * R) * (1 + 6 * R) * (2 + G + 6 * R) *
                     (5 + G + 6 * R) * (6 * R - G) * (G - 3 - 6 * R) * (6 * R + 1 - G));
    return k;
}

/**
 * Recurrence coefficients valid in this ring, derived from the images of
 * z P^(3r) under the eighth-order operator. Relative to the printed display:
 * the factor (6r+1-g) of d_r is (3r+1-g), and a_r changes sign in the
 * display's convention Pp^2 = 4P^3 + g3 (equivalently, in this ring, the g3
 * term of c_r changes sign). The two agree at r = 0.
 */
inline RecursionCoeffs recursion_coeffs(int g, const Rational& r) {
    using namespace halphen_detail;
    const Rational G(g), R = r;
    RecursionCoeffs k = printed_recursion_coeffs(g, r);
    k.c = negate_g3(k.c);
    k.d = SparsePoly(8L * (2 + 3 * R) * (3 + G + 3 * R) * (1 + 6 * R) * (2 + G + 6 * R) *
                     (5 + G + 6 * R) * (6 * R - G) * (G - 3 - 6 * R) * (3 * R + 1 - G));
    return k;
}

/// d_r A_r - c_{r+1} A_{r+1} - b_{r+2} A_{r+2} - a_{r+3} A_{r+3}.
template <class Coeffs>
SparsePoly relation_residual(const CoefficientSequence& seq, int g, int r, Coeffs coeffs) {
    return coeffs(g, r).d * seq.at(r) - coeffs(g, r + 1).c * seq.at(r + 1) -
           coeffs(g, r + 2).b * seq.at(r + 2) - coeffs(g, r + 3).a * seq.at(r + 3);
}

/**
 * The relation with this ring's coefficients; zero for every solved sequence.
 * The image of z P^k under the eighth-order operator is polynomial in k, so
 * case II (k = 3r-1) uses the case-I coefficients evaluated at r - 1/3.
 */
inline SparsePoly recursion_residual(const CoefficientSequence& seq, int g, int r) {
    const Rational shift = seq.kind == HalphenCase::II ? Rational(1, 3) : Rational(0);
    return relation_residual(seq, g, r, [&](int gg, int rr) { return recursion_coeffs(gg, Rational(rr) - shift); });
}

/**
 * The relation with the printed coefficients, read in the display's own
 * convention Pp^2 = 4P^3 + g3: the sequence is mapped by g3 -> -g3 first.
 */
inline SparsePoly printed_relation_residual(const CoefficientSequence& seq, int g, int r) {
    CoefficientSequence flipped = seq;
    for (auto& e : flipped.entries) e = halphen_detail::negate_g3(e);
    return relation_residual(flipped, g, r, printed_recursion_coeffs);
}

/**
 * A_M per the top convention, then A_r for r = M-1..0 from
 *   A_r = (c_{r+1} A_{r+1} + b_{r+2} A_{r+2} + a_{r+3} A_{r+3}) / d_r
 * with recursion_coeffs().
 */
inline CoefficientSequence recursion_A(int g, const Rational& top_scale = Rational(1)) {
    using namespace halphen_detail;
    const GenusProfile prof = classify(g);
    if (prof.kase != HalphenCase::I)
        throw std::invalid_argument("recursion_A applies to g = 6M or 6M+3");
    CoefficientSequence seq;
    seq.kind = HalphenCase::I;
    seq.first_index = 0;
    seq.free_scale = top_scale;
    seq.entries.assign(static_cast<std::size_t>(prof.M + 1), SparsePoly{});
    seq.entries.back() = z_pow(prof.top_over_z() ? -1 : 0) * top_scale;
    for (int r = prof.M - 1; r >= 0; --r) {
        const Rational d = recursion_coeffs(g, r).d.constant_value();
        if (d.is_zero()) throw DivisionByZero("d_r vanishes below the top index");
        SparsePoly num = recursion_coeffs(g, r + 1).c * seq.at(r + 1) +
                         recursion_coeffs(g, r + 2).b * seq.at(r + 2) +
                         recursion_coeffs(g, r + 3).a * seq.at(r + 3);
        seq.entries[static_cast<std::size_t>(r)] = num / d;
    }
    return seq;
}

/**
 * Q from the first and second identities by ansatz Q = sum_{k=0}^{3M+1} q_k(z) P^k.
 * q_k for k >= 1 follow from the first identity; the integration constant q_0
 * is fixed by the second. When S = 0 (g = 1) q_0 is free and set to 1.
 */
inline WeierstrassElement solve_Q(const WeierstrassElement& S, const GenusProfile& prof) {
    using namespace halphen_detail;
    const int top = 3 * prof.M + 1;
    std::vector<WeierstrassElement> images1, images2;
    for (int k = 0; k <= top; ++k) {
        SQPair unit{WeierstrassElement(kMode), P_pow(k), prof};
        images1.push_back(first_identity_residual(unit));
        images2.push_back(second_identity_residual(unit));
    }
    SQPair s_only{S, WeierstrassElement(kMode), prof};
    auto rows = relations_from_images(images1, first_identity_residual(s_only));
    auto rows2 = relations_from_images(images2, second_identity_residual(s_only));
    rows.insert(rows.end(), rows2.begin(), rows2.end());

    std::vector<std::optional<SparsePoly>> known(static_cast<std::size_t>(top + 1));
    if (S.is_zero()) known[0] = SparsePoly(1);
    const auto q = solve_triangular(rows, known);
    WeierstrassElement Q(kMode);
    for (int k = 0; k <= top; ++k) Q += ring(q[static_cast<std::size_t>(k)]) * P_pow(k);
    return Q;
}

/**
 * Case I closed form
 *   Q = sum_r (6r(2-2g-g^2+18r+36r^2) - g(2+g)) / (3(3r+1)) A_r P^(3r+1)
 *     - sum_r 2 g3 r(9r^2-1)/(3r+1) A_r P^(3r-2).
 */
inline WeierstrassElement closed_form_Q(const CoefficientSequence& seq, int g) {
    using namespace halphen_detail;
    if (seq.kind != HalphenCase::I) throw std::invalid_argument("closed_form_Q applies to case I");
    const Rational G(g);
    WeierstrassElement Q(kMode);
    for (int r = seq.first_index; r <= seq.last_index(); ++r) {
        const Rational R(r);
        const Rational lead = (6 * R * (2 - 2 * G - G * G + 18 * R + 36 * R * R) - G * (2 + G)) /
                              (3 * (3 * R + 1));
        Q += ring(seq.at(r) * lead) * P_pow(3 * r + 1);
        if (r >= 1)
            Q -= ring(g3_pow(1) * seq.at(r) * (2 * R * (9 * R * R - 1) / (3 * R + 1))) *
                 P_pow(3 * r - 2);
    }
    return Q;
}

/// Q for a solved S: the closed form in case I, the ansatz solve in case II.
inline WeierstrassElement build_Q(const SolvedS& solved, const GenusProfile& prof) {
    if (prof.kase == HalphenCase::I) return closed_form_Q(solved.seq, prof.g);
    return solve_Q(solved.S, prof);
}

/// H as a ring element, before the constancy check.
inline WeierstrassElement raw_H(const SQPair& p) {
    using namespace halphen_detail;
    const auto f = derivatives(potential(p.profile.g), 2);
    const auto S = derivatives(p.S, 2);
    const auto Q = derivatives(p.Q, 4);
    const SparsePoly z = z_pow(1);
    WeierstrassElement h = 4L * f[0] * f[0] * Q[0] * Q[0] + 12L * S[1] * S[1] +
                           2L * Q[0] * Q[0] * f[2] + Q[2] * Q[2] +
                           (10L * Q[0] * Q[2] - 12L * S[0] * S[0] - 5L * Q[1] * Q[1]) * f[0] -
                           24L * S[0] * S[2] - 2L * Q[1] * Q[3] +
                           (36L * z * S[0] + 5L * f[1] * Q[1] + 2L * Q[4]) * Q[0];
    return h * Rational(1, 12);
}

/// F as a ring element, before the constancy check.
inline WeierstrassElement raw_F(const SQPair& p) {
    using namespace halphen_detail;
    const auto f = derivatives(potential(p.profile.g), 2);
    const auto S = derivatives(p.S, 2);
    const auto Q = derivatives(p.Q, 4);
    const SparsePoly z = z_pow(1);
    const auto &f0 = f[0], &f1 = f[1], &f2 = f[2];
    const auto &S0 = S[0], &S1 = S[1], &S2 = S[2];
    const auto &Q0 = Q[0], &Q1 = Q[1], &Q2 = Q[2], &Q3 = Q[3], &Q4 = Q[4];

    WeierstrassElement acc =
        432L * z * S0 * S0 * S0 - 63L * f1 * Q1 * Q1 * Q1 +
        4L * Q0 * Q0 * Q0 * (ring(108L * z * z) + 8L * f0 * f0 * f0 - 3L * f1 * f1 + 6L * f0 * f2) -
        42L * f0 * Q1 * Q1 * Q2 + 144L * S1 * S1 * Q2 - 4L * Q2 * Q2 * Q2 -
        432L * Q1 * S1 * S2 + 12L * Q1 * Q2 * Q3 -
        36L * S0 * (3L * z * Q1 * Q1 + 16L * f0 * Q1 * S1 - 4L * Q2 * S2 + 4L * S1 * Q3) -
        18L * Q1 * Q1 * Q4 + 36L * S0 * S0 * (7L * f1 * Q1 + 10L * f0 * Q2 + 2L * Q4);
    acc += 6L * Q0 *
           (12L * f0 * f0 * (4L * S0 * S0 - Q1 * Q1) - 24L * S0 * f1 * S1 + 72L * z * Q1 * S1 +
            12L * S0 * S0 * f2 - 3L * Q1 * Q1 * f2 + 16L * f1 * Q1 * Q2 + 72L * S2 * S2 -
            2L * Q3 * Q3 + 2L * f0 * (12L * S1 * S1 + 7L * Q2 * Q2 + 48L * S0 * S2 - 4L * Q1 * Q3) +
            4L * Q2 * Q4);
    acc += 12L * Q0 * Q0 *
           (10L * f0 * f0 * Q2 + 2L * f2 * Q2 - 72L * z * S2 - 2L * f1 * Q3 +
            f0 * (-36L * z * S0 + 3L * f1 * Q1 + 2L * Q4));
    return acc * Rational(1, 432);
}

inline SparsePoly expect_x_constant(const WeierstrassElement& e, const char* what) {
    auto v = e.x_constant_value();
    if (!v) throw NonConstant(std::string(what) + " depends on x");
    return *v;
}

inline SparsePoly compute_H(const SQPair& p) { return expect_x_constant(raw_H(p), "H"); }
inline SparsePoly compute_F(const SQPair& p) { return expect_x_constant(raw_F(p), "F"); }

/**
 * F from the coefficient sequence alone.
 *
 * Case I:
 *   1296 F = (36z^2 A0^2 + g3 (g(g+2) A0 + 12 g3 A1)^2)
 *          * (36z^2 A0 - g(g+2)(7g^2+14g-24) g3 A0 - 24(7g^2+14g-180) g3^2 A1 - 2880 g3^3 A2).
 *
 * Case II (M >= 1), with c = (g-1)(g+2)(g+3), K = 5g^4+20g^3-172g^2-384g+1728,
 *   X = -25K g3 B1 + 108z^2 B1 - 1440(3g^2+6g-140) g3^2 B2 - 80640 g3^3 B3,
 *   Y = (g^2+2g-24) B1 + 24 g3 B2:
 *   62208 g^3 c^3 F = X * ( -64 g^2 c^2 g3^2 (324 z^2 B1^2 + 25 g3 Y^2)
 *                          - 16 g c g3 (5g(g+2) g3 Y - 108 z^2 B1) X
 *                          - (36 z^2 + g^2 (g+2)^2 g3) X^2 ).
 * The printed case-II display has B2 for B1 in the middle factor twice and
 * the opposite sign on the g3 term of the last factor.
 */
inline SparsePoly closed_form_F(const CoefficientSequence& seq, int g) {
    using namespace halphen_detail;
    const GenusProfile prof = classify(g);
    if (seq.kind != prof.kase) throw std::invalid_argument("sequence kind does not match the genus");
    const Rational G(g);
    const SparsePoly z2 = z_pow(2), g3 = g3_pow(1);
    if (prof.kase == HalphenCase::I) {
        const SparsePoly A0 = seq.at(0), A1 = seq.at(1), A2 = seq.at(2);
        const SparsePoly t = A0 * (G * (G + 2)) + 12L * g3 * A1;
        const SparsePoly first = 36L * z2 * A0 * A0 + g3 * t * t;
        const SparsePoly second = 36L * z2 * A0 - g3 * A0 * (G * (G + 2) * (7 * G * G + 14 * G - 24)) -
                                  24L * g3 * g3 * A1 * (7 * G * G + 14 * G - 180) -
                                  2880L * g3_pow(3) * A2;
        return first * second * Rational(1, 1296);
    }
    if (prof.M < 1) throw std::domain_error("the case-II closed form requires M >= 1");
    const SparsePoly B1 = seq.at(1), B2 = seq.at(2), B3 = seq.at(3);
    const Rational c = (G - 1) * (G + 2) * (G + 3);
    const Rational K = 5 * G.pow(4) + 20 * G.pow(3) - 172 * G * G - 384 * G + 1728;
    const SparsePoly X = -25L * K * g3 * B1 + 108L * z2 * B1 -
                         1440L * (3 * G * G + 6 * G - 140) * g3 * g3 * B2 - 80640L * g3_pow(3) * B3;
    const SparsePoly Y = (G * G + 2 * G - 24) * B1 + 24L * g3 * B2;
    const SparsePoly body = -64L * G * G * c * c * g3 * g3 * (324L * z2 * B1 * B1 + 25L * g3 * Y * Y) -
                            16L * G * c * g3 * (5L * G * (G + 2) * g3 * Y - 108L * z2 * B1) * X -
                            (36L * z2 + G * G * (G + 2) * (G + 2) * g3) * X * X;
    return X * body / (62208 * G.pow(3) * c.pow(3));
}

/// lambda with lambda^3 * L = 1 for the leading z-coefficient L of F.
inline Rational normalizing_scale(const SparsePoly& F) {
    const SparsePoly lead = F.leading_coefficient(Var::z);
    if (!lead.is_constant()) throw NonConstant("leading z-coefficient of F depends on g3");
    const Rational L = lead.constant_value();
    Rational lambda;
    if (!exact_cube_root(Rational(1) / L, lambda)) throw NotARationalCube(L);
    return lambda;
}

/// Rescales so that F is monic: (S, Q) -> lambda (S, Q), F -> lambda^3 F, H -> lambda^2 H.
inline SpectralCurve normalize(SpectralCurve curve) {
    const Rational lambda = normalizing_scale(curve.F);
    curve.F = curve.F * lambda.pow(3);
    curve.H = curve.H * lambda.pow(2);
    curve.normalized = true;
    return curve;
}

/// Every intermediate of the Halphen pipeline for one genus.
struct HalphenResult {
    SQPair pair;                ///< normalized so that F is monic
    CoefficientSequence seq;    ///< normalized alongside the pair
    SparsePoly raw_F;           ///< F for top constant 1
    Rational scale{1};          ///< lambda applied to the top-constant-1 solution
    SpectralCurve curve;
};

/**
 * classify -> solve_S -> build_Q -> H, F -> closed-form cross-check -> normalize.
 * Throws InvalidGenus, InconsistentSystem, NonConstant, NotARationalCube, or
 * std::logic_error when one of the asserted invariants fails.
 */
inline HalphenResult spectral_curve(int g) {
    const GenusProfile prof = classify(g);
    SolvedS solved = solve_S(prof);
    SQPair pair{solved.S, build_Q(solved, prof), prof};
    SpectralCurve raw{OperatorKind::halphen, g, prof.kase, compute_H(pair), compute_F(pair), false};

    if (!raw.H.is_zero()) throw std::logic_error("H does not vanish");
    if (raw.F.is_zero() || raw.F.degree(Var::z) != g + 1) throw std::logic_error("deg_z F != g + 1");
    if (prof.kase == HalphenCase::I || prof.M >= 1) {
        if (!(closed_form_F(solved.seq, g) == raw.F)) throw std::logic_error("closed form disagrees with F");
    }

    HalphenResult out;
    out.raw_F = raw.F;
    out.scale = normalizing_scale(raw.F);
    out.curve = normalize(raw);
    out.seq = solved.seq.scaled(out.scale);
    out.pair = {pair.S * out.scale, pair.Q * out.scale, prof};
    if (!(out.curve.F.leading_coefficient(Var::z) == SparsePoly(1))) throw std::logic_error("F is not monic");
    return out;
}

}  // namespace finitegap

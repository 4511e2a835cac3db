#pragma once

/**
 * @file weierstrass.hpp
 * @brief The differential ring Q[g2,g3][z,w][P,Pp] / (Pp^2 - 4P^3 + g2 P + g3).
 *
 * Elements are kept in canonical form: every term has Pp-degree 0 or 1.
 * The x-derivation acts by P' = Pp and Pp' = 6P^2 - g2/2, with z, w, g2, g3
 * treated as constants. In equianharmonic mode g2 is identically zero and
 * never appears in any intermediate.
 *
 * Since {P^k, P^k Pp} is a basis of the ring over the constants, an element
 * is independent of x exactly when its canonical form mentions neither P nor Pp.
 */

#include "finitegap/sparse_poly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace finitegap {

enum class Mode { generic, equianharmonic };

inline const char* mode_name(Mode m) {
    return m == Mode::generic ? "generic" : "equianharmonic";
}

namespace detail {

/// 4P^3 - g2 P - g3, the value of Pp^2.
inline SparsePoly weierstrass_cubic(Mode mode) {
    SparsePoly r = SparsePoly::var(Var::P, 3) * 4L - SparsePoly::var(Var::g3);
    if (mode == Mode::generic) r -= SparsePoly(Monomial{{Var::g2, 1}, {Var::P, 1}}, Rational(1));
    return r;
}

/// 6P^2 - g2/2, the derivative of Pp.
inline SparsePoly pp_derivative(Mode mode) {
    SparsePoly r = SparsePoly::var(Var::P, 2) * 6L;
    if (mode == Mode::generic) r -= SparsePoly(Monomial::of(Var::g2), Rational(1, 2));
    return r;
}

}  // namespace detail

/// Canonical representative of p modulo the Weierstrass relation.
inline SparsePoly weierstrass_normal_form(const SparsePoly& p, Mode mode) {
    bool needs_work = false;
    for (const auto& t : p.terms()) {
        if (t.mono[Var::Pp] >= 2 || (mode == Mode::equianharmonic && t.mono[Var::g2] != 0)) {
            needs_work = true;
            break;
        }
    }
    if (!needs_work) return p;

    std::vector<SparsePoly> cubic_powers{SparsePoly(1), detail::weierstrass_cubic(mode)};
    std::vector<Term> plain;
    SparsePoly rewritten;
    for (const auto& t : p.terms()) {
        if (mode == Mode::equianharmonic && t.mono[Var::g2] != 0) continue;
        int e = t.mono[Var::Pp];
        if (e < 2) {
            plain.push_back(t);
            continue;
        }
        auto half = static_cast<std::size_t>(e / 2);
        while (cubic_powers.size() <= half) cubic_powers.push_back(cubic_powers.back() * cubic_powers[1]);
        rewritten += cubic_powers[half].shifted(t.mono.with(Var::Pp, e % 2)) * t.coeff;
    }
    return SparsePoly::from_terms(std::move(plain)) + rewritten;
}

class WeierstrassElement {
public:
    WeierstrassElement() : mode_(Mode::equianharmonic) {}
    explicit WeierstrassElement(Mode mode) : mode_(mode) {}

    /// Rewrites Pp^2 -> 4P^3 - g2 P - g3 until every term has Pp-degree <= 1.
    static WeierstrassElement reduce(const SparsePoly& p, Mode mode) {
        WeierstrassElement e(mode);
        e.value_ = weierstrass_normal_form(p, mode);
        return e;
    }

    static WeierstrassElement P(Mode mode) { return reduce(SparsePoly::var(Var::P), mode); }
    static WeierstrassElement Pp(Mode mode) { return reduce(SparsePoly::var(Var::Pp), mode); }

    const SparsePoly& value() const { return value_; }
    Mode mode() const { return mode_; }
    bool is_zero() const { return value_.is_zero(); }

    bool is_x_constant() const {
        return !value_.contains(Var::P) && !value_.contains(Var::Pp);
    }
    /// The element as a polynomial in z, w, g2, g3 when it is x-constant.
    std::optional<SparsePoly> x_constant_value() const {
        if (!is_x_constant()) return std::nullopt;
        return value_;
    }

    friend bool operator==(const WeierstrassElement& a, const WeierstrassElement& b) {
        return a.mode_ == b.mode_ && a.value_ == b.value_;
    }

    WeierstrassElement operator-() const { return with(-value_); }
    friend WeierstrassElement operator+(const WeierstrassElement& a, const WeierstrassElement& b) {
        check_modes(a, b);
        return a.with(a.value_ + b.value_);
    }
    friend WeierstrassElement operator-(const WeierstrassElement& a, const WeierstrassElement& b) {
        check_modes(a, b);
        return a.with(a.value_ - b.value_);
    }
    friend WeierstrassElement operator*(const WeierstrassElement& a, const WeierstrassElement& b) {
        check_modes(a, b);
        return reduce(a.value_ * b.value_, a.mode_);
    }
    WeierstrassElement& operator+=(const WeierstrassElement& o) { return *this = *this + o; }
    WeierstrassElement& operator-=(const WeierstrassElement& o) { return *this = *this - o; }
    WeierstrassElement& operator*=(const WeierstrassElement& o) { return *this = *this * o; }

    /// Multiplication by an x-constant (a polynomial free of P and Pp).
    friend WeierstrassElement operator*(const WeierstrassElement& a, const SparsePoly& c) {
        return reduce(a.value_ * c, a.mode_);
    }
    friend WeierstrassElement operator*(const SparsePoly& c, const WeierstrassElement& a) {
        return a * c;
    }
    friend WeierstrassElement operator*(const WeierstrassElement& a, const Rational& c) {
        return a.with(a.value_ * c);
    }
    friend WeierstrassElement operator*(const Rational& c, const WeierstrassElement& a) {
        return a * c;
    }
    friend WeierstrassElement operator*(const WeierstrassElement& a, long c) {
        return a * Rational(c);
    }
    friend WeierstrassElement operator*(long c, const WeierstrassElement& a) {
        return a * Rational(c);
    }
    friend WeierstrassElement operator+(const WeierstrassElement& a, const SparsePoly& c) {
        return a + reduce(c, a.mode_);
    }
    friend WeierstrassElement operator-(const WeierstrassElement& a, const SparsePoly& c) {
        return a - reduce(c, a.mode_);
    }

    WeierstrassElement pow(unsigned k) const {
        WeierstrassElement r = reduce(SparsePoly(1), mode_), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

private:
    WeierstrassElement with(SparsePoly v) const {
        WeierstrassElement e(mode_);
        e.value_ = std::move(v);
        return e;
    }
    static void check_modes(const WeierstrassElement& a, const WeierstrassElement& b) {
        if (a.mode_ != b.mode_) throw std::logic_error("mixing generic and equianharmonic elements");
    }

    Mode mode_;
    SparsePoly value_;
};

/// The x-derivation: Leibniz rule with P' = Pp, Pp' = 6P^2 - g2/2.
inline WeierstrassElement d_dx(const WeierstrassElement& e) {
    const Mode mode = e.mode();
    const SparsePoly dpp = detail::pp_derivative(mode);
    std::vector<Term> out;
    for (const auto& t : e.value().terms()) {
        int p = t.mono[Var::P];
        int q = t.mono[Var::Pp];
        if (p > 0)
            out.push_back({t.mono.with(Var::P, p - 1).with(Var::Pp, q + 1), t.coeff * Rational(p)});
        if (q > 0) {
            Monomial base = t.mono.with(Var::Pp, q - 1);
            for (const auto& d : dpp.terms())
                out.push_back({base * d.mono, t.coeff * d.coeff * Rational(q)});
        }
    }
    return WeierstrassElement::reduce(SparsePoly::from_terms(std::move(out)), mode);
}

inline WeierstrassElement d_dx_n(WeierstrassElement e, int n) {
    if (n < 0) throw std::invalid_argument("d_dx_n: negative order");
    for (int i = 0; i < n; ++i) e = d_dx(e);
    return e;
}

/// e, e', e'', ... up to the n-th derivative.
inline std::vector<WeierstrassElement> derivatives(const WeierstrassElement& e, int n) {
    std::vector<WeierstrassElement> out{e};
    for (int i = 0; i < n; ++i) out.push_back(d_dx(out.back()));
    return out;
}

}  // namespace finitegap

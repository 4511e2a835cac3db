#pragma once

/**
 * @file sparse_poly.hpp
 * @brief Sparse multivariate polynomials over exact rationals.
 *
 * The variable alphabet is fixed: z, w, g2, g3, P (the Weierstrass p-function)
 * and Pp (its x-derivative). Only z may carry a negative exponent, which
 * makes the coefficient ring Laurent in the spectral parameter.
 *
 * Terms are kept sorted in descending graded-lexicographic order with the
 * alphabet ranked z > w > g2 > g3 > P > Pp; zero coefficients are never
 * stored, so two polynomials are equal iff their term vectors are equal.
 */

#include "finitegap/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace finitegap {

enum class Var : std::uint8_t { z = 0, w, g2, g3, P, Pp };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::z, Var::w, Var::g2,
                                                       Var::g3, Var::P, Var::Pp};

inline constexpr const char* var_name(Var v) {
    constexpr const char* names[] = {"z", "w", "g2", "g3", "P", "Pp"};
    return names[static_cast<std::size_t>(v)];
}

inline std::optional<Var> var_from_name(std::string_view name) {
    for (Var v : kAllVars)
        if (name == var_name(v)) return v;
    return std::nullopt;
}

class UndefinedOnZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Monomial {
public:
    using Exponents = std::array<std::int32_t, kNumVars>;

    constexpr Monomial() = default;
    explicit Monomial(const Exponents& e) : e_(e) { check(); }
    Monomial(std::initializer_list<std::pair<Var, int>> powers) {
        for (auto [v, k] : powers) e_[idx(v)] += k;
        check();
    }

    static Monomial of(Var v, int k = 1) { return Monomial({{v, k}}); }

    int operator[](Var v) const { return e_[idx(v)]; }
    const Exponents& exponents() const { return e_; }

    int total_degree() const {
        int d = 0;
        for (auto k : e_) d += k;
        return d;
    }
    bool is_one() const { return e_ == Exponents{}; }

    /// Same monomial with `v` removed.
    Monomial without(Var v) const {
        Monomial m = *this;
        m.e_[idx(v)] = 0;
        return m;
    }
    Monomial with(Var v, int k) const {
        Monomial m = *this;
        m.e_[idx(v)] = k;
        m.check();
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic comparison; true when a ranks strictly above b.
    friend bool grlex_greater(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e_ > b.e_;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto k : e_) {
            h ^= static_cast<std::uint32_t>(k);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    static constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }
    void check() const {
        for (std::size_t i = 1; i < kNumVars; ++i)
            if (e_[i] < 0)
                throw std::invalid_argument(std::string("negative exponent for ") +
                                            var_name(static_cast<Var>(i)));
    }

    Exponents e_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(long c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    SparsePoly(const Rational& c) {                     // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.push_back({Monomial{}, c});
    }
    SparsePoly(const Monomial& m, const Rational& c) {
        if (!c.is_zero()) terms_.push_back({m, c});
    }

    static SparsePoly var(Var v, int k = 1) { return {Monomial::of(v, k), Rational(1)}; }

    /// Builds from arbitrary (possibly duplicated, possibly zero) terms.
    static SparsePoly from_terms(std::vector<Term> terms) {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) {
            auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        return from_map(std::move(acc));
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    Rational constant_value() const {
        for (const auto& t : terms_)
            if (t.mono.is_one()) return t.coeff;
        return Rational(0);
    }

    bool contains(Var v) const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [v](const Term& t) { return t.mono[v] != 0; });
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        return merge(a, b, false);
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        return merge(a, b, true);
    }
    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.terms_[0].coeff;
        if (b.is_constant()) return a * b.terms_[0].coeff;
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        mpq_class prod;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                mpq_mul(prod.get_mpq_t(), ta.coeff.raw().get_mpq_t(),
                        tb.coeff.raw().get_mpq_t());
                auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono);
                if (fresh)
                    it->second = Rational(prod);
                else
                    it->second += Rational(prod);
            }
        }
        return from_map(std::move(acc));
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend SparsePoly operator*(SparsePoly a, const Rational& c) {
        if (c.is_zero()) return {};
        for (auto& t : a.terms_) t.coeff *= c;
        return a;
    }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return std::move(a) * c; }
    friend SparsePoly operator*(SparsePoly a, long c) { return std::move(a) * Rational(c); }
    friend SparsePoly operator*(long c, SparsePoly a) { return std::move(a) * Rational(c); }
    friend SparsePoly operator/(SparsePoly a, const Rational& c) {
        if (c.is_zero()) throw DivisionByZero("polynomial divided by zero");
        return std::move(a) * (Rational(1) / c);
    }

    /// Multiplies every term by a monomial (exponents may go negative only in z).
    SparsePoly shifted(const Monomial& m) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.mono = t.mono * m;
        return r;
    }

    SparsePoly pow(unsigned k) const {
        SparsePoly result(1), base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return result;
    }

    /// Formal partial derivative.
    SparsePoly diff(Var v) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            int k = t.mono[v];
            if (k == 0) continue;
            out.push_back({t.mono.with(v, 0) * Monomial{{v, k - 1}}, t.coeff * Rational(k)});
        }
        // Differentiation is injective on monomials, so order is preserved.
        SparsePoly r;
        r.terms_ = std::move(out);
        r.sort();
        return r;
    }

    /// Replaces z by a rational value.
    SparsePoly substitute_z(const Rational& c) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            int k = t.mono[Var::z];
            if (k < 0 && c.is_zero())
                throw DivisionByZero("substitute_z: z = 0 meets a negative exponent");
            out.push_back({t.mono.without(Var::z), t.coeff * c.pow(k)});
        }
        return from_terms(std::move(out));
    }

    /// Drops every term containing `v`, i.e. substitutes v = 0.
    SparsePoly drop(Var v) const {
        SparsePoly r;
        for (const auto& t : terms_)
            if (t.mono[v] == 0) r.terms_.push_back(t);
        return r;
    }

    int degree(Var v) const {
        if (is_zero()) throw UndefinedOnZero("degree of the zero polynomial");
        int d = terms_[0].mono[v];
        for (const auto& t : terms_) d = std::max(d, t.mono[v]);
        return d;
    }
    int low_degree(Var v) const {
        if (is_zero()) throw UndefinedOnZero("low_degree of the zero polynomial");
        int d = terms_[0].mono[v];
        for (const auto& t : terms_) d = std::min(d, t.mono[v]);
        return d;
    }

    /// Coefficient of v^k, with v eliminated.
    SparsePoly coefficient(Var v, int k) const {
        SparsePoly r;
        for (const auto& t : terms_)
            if (t.mono[v] == k) r.terms_.push_back({t.mono.without(v), t.coeff});
        r.sort();
        return r;
    }
    SparsePoly leading_coefficient(Var v) const { return coefficient(v, degree(v)); }

    /// Single-term polynomial in z alone with nonzero coefficient (a unit of the Laurent ring).
    bool is_z_unit() const {
        if (terms_.size() != 1) return false;
        return terms_[0].mono.without(Var::z).is_one();
    }

private:
    template <class Map>
    static SparsePoly from_map(Map&& acc) {
        SparsePoly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        r.sort();
        return r;
    }

    void sort() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool negate_b) {
        SparsePoly r;
        r.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() ||
                (ia != a.terms_.end() && grlex_greater(ia->mono, ib->mono))) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || grlex_greater(ib->mono, ia->mono)) {
                r.terms_.push_back({ib->mono, negate_b ? -ib->coeff : ib->coeff});
                ++ib;
            } else {
                Rational c = negate_b ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
                if (!c.is_zero()) r.terms_.push_back({ia->mono, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

/// Plain-text rendering, terms in descending grlex order.
inline std::string to_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool unit = t.mono.is_one();
        if (!c.is_one() || unit) os << (c.is_integer() ? c.to_string() : "(" + c.to_string() + ")");
        bool need_star = !c.is_one();
        for (Var v : kAllVars) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            os << var_name(v);
            if (e != 1) os << '^' << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << to_text(p); }

}  // namespace finitegap

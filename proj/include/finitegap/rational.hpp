#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Thin value type over GMP's mpq_class. Every value is kept canonical
 * (lowest terms, positive denominator), so equality is structural.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finitegap {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    explicit Rational(mpz_class num) : v_(std::move(num)) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (decimal digits only).
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        mpz_class num, den = 1;
        try {
            if (slash == std::string::npos) {
                num = mpz_class(s, 10);
            } else {
                num = mpz_class(s.substr(0, slash), 10);
                den = mpz_class(s.substr(slash + 1), 10);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
        return Rational(num, den);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string to_string() const { return v_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return Rational(1) / pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

private:
    mpq_class v_;
};

/// Exact rational cube root when one exists.
inline bool exact_cube_root(const Rational& x, Rational& root) {
    mpz_class n = x.numerator(), d = x.denominator();
    mpz_class rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) == 0) return false;
    if (neg) rn = -rn;
    root = Rational(rn, rd);
    return true;
}

}  // namespace finitegap

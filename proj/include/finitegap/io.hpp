#pragma once

/**
 * @file io.hpp
 * @brief JSON, plain-text and LaTeX forms of polynomials, curves and reports.
 *
 * All output is deterministic: polynomial term lists follow the stored grlex
 * order, curve term lists are sorted by descending z, then g2, then g3.
 */

#include "finitegap/spectral_curve.hpp"
#include "finitegap/verify.hpp"
#include "finitegap/weierstrass.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace finitegap {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Polynomials

inline json poly_to_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json ex = json::object();
        for (Var v : kAllVars)
            if (t.mono[v] != 0) ex[var_name(v)] = t.mono[v];
        terms.push_back({{"exponents", ex},
                         {"numerator", t.coeff.numerator().get_str()},
                         {"denominator", t.coeff.denominator().get_str()}});
    }
    return terms;
}

inline SparsePoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        std::vector<std::pair<Var, int>> ex;
        for (const auto& [name, e] : t.at("exponents").items()) {
            auto v = var_from_name(name);
            if (!v) throw std::invalid_argument("unknown variable '" + name + "'");
            ex.emplace_back(*v, e.get<int>());
        }
        Monomial m;
        for (auto [v, e] : ex) m = m * Monomial{{v, e}};
        Rational c(mpz_class(t.at("numerator").get<std::string>()),
                   mpz_class(t.at("denominator").get<std::string>()));
        terms.push_back({m, c});
    }
    return SparsePoly::from_terms(std::move(terms));
}

inline json element_to_json(const WeierstrassElement& e) {
    return {{"mode", mode_name(e.mode())}, {"terms", poly_to_json(e.value())}};
}

inline WeierstrassElement element_from_json(const json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "generic" && mode != "equianharmonic") throw std::invalid_argument("unknown mode '" + mode + "'");
    return WeierstrassElement::reduce(poly_from_json(j.at("terms")),
                                      mode == "generic" ? Mode::generic : Mode::equianharmonic);
}

// ---------------------------------------------------------------------------
// Curves

namespace io_detail {

/// Terms by descending z, then g2, then g3.
inline std::vector<Term> curve_order(const SparsePoly& p) {
    std::vector<Term> t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
        for (Var v : {Var::z, Var::g2, Var::g3})
            if (a.mono[v] != b.mono[v]) return a.mono[v] > b.mono[v];
        return false;
    });
    return t;
}

inline json curve_terms(const SparsePoly& p, bool with_g2) {
    json out = json::array();
    for (const auto& t : curve_order(p)) {
        json row = json::object();
        row["z"] = t.mono[Var::z];
        if (with_g2) row["g2"] = t.mono[Var::g2];
        row["g3"] = t.mono[Var::g3];
        row["coeff"] = t.coeff.to_string();
        out.push_back(row);
    }
    return out;
}

inline SparsePoly curve_terms_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "0") throw std::invalid_argument("expected \"0\" or a term list");
        return {};
    }
    std::vector<Term> terms;
    for (const auto& row : j) {
        Monomial m{{Var::z, row.at("z").get<int>()}, {Var::g3, row.at("g3").get<int>()}};
        if (row.contains("g2")) m = m * Monomial{{Var::g2, row.at("g2").get<int>()}};
        terms.push_back({m, Rational::parse(row.at("coeff").get<std::string>())});
    }
    return SparsePoly::from_terms(std::move(terms));
}

}  // namespace io_detail

inline json curve_to_json(const SpectralCurve& c) {
    const bool lame = c.op == OperatorKind::lame;
    json j = json::object();
    j["operator"] = operator_name(c.op);
    j["g"] = c.g;
    if (c.halphen_case) j["case"] = case_name(*c.halphen_case);
    j["H"] = c.H.is_zero() ? json("0") : io_detail::curve_terms(c.H, lame);
    j["F"] = io_detail::curve_terms(c.F, lame);
    return j;
}

inline SpectralCurve curve_from_json(const json& j) {
    SpectralCurve c;
    const std::string op = j.at("operator").get<std::string>();
    if (op == "halphen")
        c.op = OperatorKind::halphen;
    else if (op == "lame")
        c.op = OperatorKind::lame;
    else
        throw std::invalid_argument("unknown operator '" + op + "'");
    c.g = j.at("g").get<int>();
    if (j.contains("case")) {
        const std::string k = j.at("case").get<std::string>();
        if (k != "I" && k != "II") throw std::invalid_argument("unknown case '" + k + "'");
        c.halphen_case = k == "I" ? HalphenCase::I : HalphenCase::II;
    }
    c.H = io_detail::curve_terms_from_json(j.at("H"));
    c.F = io_detail::curve_terms_from_json(j.at("F"));
    c.normalized = true;
    return c;
}

namespace io_detail {

inline mpz_class common_denominator(const SparsePoly& p) {
    mpz_class d = 1;
    for (const auto& t : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    return d;
}

/// "4*z^3 - g2*z + g3" for a polynomial with integer coefficients.
inline std::string text_terms(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : curve_order(p)) {
        Rational c = t.coeff;
        const bool neg = c.sign() < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        if (!c.is_one() || t.mono.is_one()) factors.push_back(c.to_string());
        for (Var v : {Var::g2, Var::g3, Var::z}) {
            int e = t.mono[v];
            if (e == 0) continue;
            factors.push_back(std::string(var_name(v)) + (e == 1 ? "" : "^" + std::to_string(e)));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

inline std::string latex_var(Var v) {
    switch (v) {
        case Var::g2: return "g_2";
        case Var::g3: return "g_3";
        default: return var_name(v);
    }
}

inline std::string latex_terms(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : curve_order(p)) {
        Rational c = t.coeff;
        const bool neg = c.sign() < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        if (!c.is_one() || t.mono.is_one())
            factors.push_back(c.is_integer() ? c.to_string()
                                             : "\\frac{" + c.numerator().get_str() + "}{" +
                                                   c.denominator().get_str() + "}");
        for (Var v : {Var::g2, Var::g3, Var::z}) {
            int e = t.mono[v];
            if (e == 0) continue;
            std::string s = latex_var(v);
            if (e != 1) s += "^" + (e > 9 ? "{" + std::to_string(e) + "}" : std::to_string(e));
            factors.push_back(s);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
    }
    return os.str();
}

}  // namespace io_detail

/// "w^3 = z^4 - ..." with rational coefficients gathered over one denominator.
inline std::string curve_to_text(const SpectralCurve& c) {
    const std::string lhs = "w^" + std::to_string(c.w_power()) + " = ";
    const mpz_class d = io_detail::common_denominator(c.H * SparsePoly::var(Var::w) + c.F);
    std::string body = io_detail::text_terms(c.F * Rational(d));
    if (!c.H.is_zero()) body = "(" + io_detail::text_terms(c.H * Rational(d)) + ")*w + " + body;
    if (d == 1) return lhs + body;
    return lhs + "(" + body + ")/" + d.get_str();
}

/// "w^3 = z^7 - 2992 g_3 z^5 + ..." in descending powers of z.
inline std::string curve_to_latex(const SpectralCurve& c) {
    std::string out = "w^" + std::to_string(c.w_power()) + " = ";
    if (!c.H.is_zero()) out += "(" + io_detail::latex_terms(c.H) + ") w + ";
    return out + io_detail::latex_terms(c.F);
}

// ---------------------------------------------------------------------------
// Reports

inline json report_to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"residual", c.residual}});
    return {{"operator", operator_name(r.op)}, {"g", r.g}, {"passed", r.passed()}, {"checks", checks}};
}

inline std::string report_to_table(const VerificationReport& r) {
    std::size_t width = 5;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    os << operator_name(r.op) << " g=" << r.g << "\n";
    for (const auto& c : r.checks) {
        os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << (c.pass ? "pass" : "FAIL");
        if (!c.pass) os << "  " << c.residual;
        os << "\n";
    }
    os << "  " << (r.passed() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

}  // namespace finitegap

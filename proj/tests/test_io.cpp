#include "finitegap/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace finitegap;

namespace {
SparsePoly z(int k = 1) { return SparsePoly::var(Var::z, k); }
}

TEST(PolyJson, RoundTrip) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-50, 50), e(0, 3);
    for (int i = 0; i < 100; ++i) {
        SparsePoly p;
        for (int k = 0; k < 5; ++k)
            p += SparsePoly(Monomial{{Var::z, e(rng) - 1}, {Var::g2, e(rng)}, {Var::P, e(rng)}, {Var::Pp, e(rng) % 2}},
                            Rational(c(rng), 1 + e(rng)));
        EXPECT_EQ(poly_from_json(json::parse(poly_to_json(p).dump())), p);
    }
    SparsePoly big = z(-1) * Rational::parse("-123456789012345678901234567890/7");
    EXPECT_EQ(poly_from_json(poly_to_json(big)), big);
    EXPECT_EQ(poly_to_json(big)[0]["exponents"]["z"], -1);
}

TEST(ElementJson, CarriesMode) {
    auto e = WeierstrassElement::reduce(SparsePoly::var(Var::Pp, 2), Mode::generic);
    json j = element_to_json(e);
    EXPECT_EQ(j["mode"], "generic");
    EXPECT_EQ(element_from_json(j), e);
    j["mode"] = "bogus";
    EXPECT_THROW(element_from_json(j), std::invalid_argument);
}

TEST(CurveJson, ShapeAndRoundTrip) {
    SpectralCurve c = spectral_curve(6).curve;
    json j = curve_to_json(c);
    EXPECT_EQ(j["operator"], "halphen");
    EXPECT_EQ(j["case"], "I");
    EXPECT_EQ(j["H"], "0");
    EXPECT_EQ(j["F"][0]["z"], 7);
    EXPECT_EQ(j["F"][1]["coeff"], "-2992");
    EXPECT_EQ(curve_from_json(json::parse(j.dump())), c);
    SpectralCurve l = lame_curve(2);
    json lj = curve_to_json(l);
    EXPECT_TRUE(lj["F"][0].contains("g2"));
    EXPECT_FALSE(lj.contains("case"));
    EXPECT_EQ(curve_from_json(lj), l);
}

TEST(CurveText, Formats) {
    EXPECT_EQ(curve_to_text(lame_curve(1)), "w^2 = (4*z^3 - g2*z + g3)/4");
    EXPECT_EQ(curve_to_text(spectral_curve(4).curve), "w^3 = z^5 - 208*g3*z^3 + 12544*g3^2*z");
    EXPECT_EQ(curve_to_latex(spectral_curve(6).curve),
              "w^3 = z^7 - 2992 g_3 z^5 + 2972416 g_3^2 z^3 - 1003622400 g_3^3 z");
    EXPECT_EQ(curve_to_latex(spectral_curve(3).curve), "w^3 = z^4 - \\frac{55}{2} g_3 z^2 - \\frac{3375}{16} g_3^2");
    EXPECT_EQ(curve_to_latex(lame_curve(1)), "w^2 = z^3 - \\frac{1}{4} g_2 z + \\frac{1}{4} g_3");
}

TEST(Report, JsonAndTable) {
    VerificationReport r{OperatorKind::halphen, 4, {{"a", true, ""}, {"b", false, "1 term(s)"}}};
    json j = report_to_json(r);
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    const std::string t = report_to_table(r);
    EXPECT_NE(t.find("FAIL"), std::string::npos);
    EXPECT_NE(t.find("verification FAILED"), std::string::npos);
}

#include "finitegap/verify.hpp"

#include <gtest/gtest.h>

using namespace finitegap;

namespace {

const Mode E = Mode::equianharmonic;
SparsePoly z(int k = 1) { return SparsePoly::var(Var::z, k); }
SparsePoly g3(int k = 1) { return SparsePoly::var(Var::g3, k); }
SparsePoly P(int k = 1) { return SparsePoly::var(Var::P, k); }
WeierstrassElement el(const SparsePoly& p) { return WeierstrassElement::reduce(p, E); }

bool all_pass(const std::vector<CheckResult>& v) {
    for (const auto& c : v)
        if (!c.pass) return false;
    return true;
}

}  // namespace

TEST(Chi, GenusOneQ1) {
    auto r = spectral_curve(1);
    ChiData chi = build_chi(r.pair, r.curve);
    EXPECT_EQ(chi.Q1.value(), -1L * P());  // f/3 with f = -3P
}

TEST(Chi, CanonicalParts) {
    for (int g : {3, 4, 6}) {
        auto r = spectral_curve(g);
        ChiData chi = build_chi(r.pair, r.curve);
        for (const auto& t : chi.Q1.value().terms()) EXPECT_LE(t.mono[Var::Pp], 1);
        for (const auto& t : chi.Q2.value().terms()) EXPECT_LE(t.mono[Var::Pp], 1);
    }
    auto r6 = spectral_curve(6);
    EXPECT_FALSE(build_chi(r6.pair, r6.curve).chi.denominator.is_zero());
}

TEST(Chi, EquationHolds) {
    for (int g : {1, 3, 4, 6, 7, 9, 10}) {
        auto r = spectral_curve(g);
        EXPECT_TRUE(check_chi_equation(build_chi(r.pair, r.curve), g).pass) << g;
    }
}

TEST(Chi, PerturbationsAreDetected) {
    for (int g : {1, 4}) {
        auto r = spectral_curve(g);
        const ChiData good = build_chi(r.pair, r.curve);
        ChiData a = good;  // Q2 + 1
        a.chi.numerator = a.chi.numerator + SparsePoly(1);
        ChiData b = good;  // Q1 + z
        b.chi.denominator = b.chi.denominator + z();
        ChiData c = good;  // F + g3^k z
        c.chi.curve.F = c.chi.curve.F + g3(2);
        for (const ChiData* bad : {&a, &b, &c}) EXPECT_FALSE(check_chi_equation(*bad, g).pass) << g;
    }
}

TEST(Chi, RejectsThePrintedLowGenusCurves) {
    // The chi equation singles out the computed F_1 and F_6 over the printed ones.
    for (int g : {1, 6}) {
        auto r = spectral_curve(g);
        SpectralCurve printed = r.curve;
        printed.F = example_corpus().at(g);
        EXPECT_FALSE(check_chi_equation(build_chi(r.pair, printed), g).pass) << g;
    }
}

TEST(ReduceW, CubeRewrites) {
    SpectralCurve c{OperatorKind::halphen, 1, HalphenCase::II, {}, z(2), true};
    EXPECT_EQ(reduce_w(el(SparsePoly::var(Var::w, 4)), c).value(), SparsePoly::var(Var::w) * z(2));
    EXPECT_THROW(reduce_w(el(z()), SpectralCurve{OperatorKind::lame, 1, {}, {}, z(), true}), std::invalid_argument);
}

TEST(Identities, PassOnPipelineOutput) {
    for (int g : {9, 12}) EXPECT_TRUE(all_pass(check_identities(spectral_curve(g).pair))) << g;
}

TEST(Identities, PerturbationsAreDetected) {
    auto r = spectral_curve(9);
    SQPair scaled{r.pair.S * 2L, r.pair.Q, r.pair.profile};
    EXPECT_FALSE(check_identities(scaled)[0].pass);
    SQPair q_shift{r.pair.S, r.pair.Q + el(P(2)), r.pair.profile};
    EXPECT_FALSE(check_identities(q_shift)[0].pass);
    EXPECT_FALSE(check_identities(q_shift)[1].pass);
    SQPair s_shift{r.pair.S + el(z() * P()), r.pair.Q, r.pair.profile};
    auto res = check_identities(s_shift);
    EXPECT_FALSE(res[0].pass);
    EXPECT_FALSE(res[2].pass);
    SQPair z_term{r.pair.S + el(g3()), r.pair.Q, r.pair.profile};
    EXPECT_FALSE(check_identities(z_term)[2].pass);
    EXPECT_FALSE(res[2].residual.empty());
}

TEST(Constancy, PerturbationsAreDetected) {
    auto r = spectral_curve(6);
    EXPECT_TRUE(all_pass(check_constancy(r.pair, r.curve)));
    SQPair a{r.pair.S + el(P()), r.pair.Q, r.pair.profile};
    SQPair b{r.pair.S, r.pair.Q + el(P(3)), r.pair.profile};
    SpectralCurve c = r.curve;
    c.F = c.F + z();
    EXPECT_FALSE(all_pass(check_constancy(a, r.curve)));
    EXPECT_FALSE(all_pass(check_constancy(b, r.curve)));
    EXPECT_FALSE(all_pass(check_constancy(r.pair, c)));
}

TEST(ClosedFormCheck, PerturbationsAreDetected) {
    for (int g : {6, 7}) {
        auto r = spectral_curve(g);
        EXPECT_TRUE(check_closed_form(r.seq, r.curve).pass);
        CoefficientSequence s = r.seq;
        s.entries[0] = s.entries[0] + z();
        EXPECT_FALSE(check_closed_form(s, r.curve).pass);
        SpectralCurve c = r.curve;
        c.F = c.F + g3(2);
        EXPECT_FALSE(check_closed_form(r.seq, c).pass);
        EXPECT_FALSE(check_closed_form(r.seq.scaled(Rational(2)), r.curve).pass);
    }
}

TEST(Corpus, Examples) {
    EXPECT_TRUE(check_against_corpus(spectral_curve(7).curve).pass);
    const SparsePoly f12 = z() * (900460800L * g3(2) - 96336L * g3() * z(2) + z(4)) *
                           (SparsePoly(Rational::parse("303081078784000000")) * g3(4) -
                            SparsePoly(Rational::parse("95623669760000")) * g3(3) * z(2) +
                            9255609600L * g3(2) * z(4) - 181136L * g3() * z(6) + z(8));
    EXPECT_EQ(example_corpus().at(12), f12);
    EXPECT_TRUE(check_against_corpus(spectral_curve(12).curve).pass);
    EXPECT_THROW(check_against_corpus(spectral_curve(13).curve), NotInCorpus);
}

TEST(Corpus, PerturbationsAreDetected) {
    SpectralCurve c = spectral_curve(4).curve;
    for (const SparsePoly& d : {z(), g3(2) * z(), SparsePoly(Rational(1, 1000))}) {
        SpectralCurve bad = c;
        bad.F = bad.F + d;
        EXPECT_FALSE(check_against_corpus(bad).pass);
    }
}

TEST(Report, SuitesAndOrdering) {
    auto rep = verify_halphen(spectral_curve(4), true);
    EXPECT_TRUE(rep.passed());
    ASSERT_GE(rep.checks.size(), 10u);
    EXPECT_EQ(rep.checks.front().name, "first-identity");
    EXPECT_EQ(rep.checks.back().name, "chi-equation");
    for (const auto& c : rep.checks) EXPECT_TRUE(c.residual.empty());
    EXPECT_TRUE(verify_lame(3).passed());
}

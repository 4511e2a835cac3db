#include "finitegap/weierstrass.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace finitegap;

namespace {

const Mode G = Mode::generic;
const Mode E = Mode::equianharmonic;

SparsePoly v(Var x, int k = 1) { return SparsePoly::var(x, k); }
WeierstrassElement el(const SparsePoly& p, Mode m = G) { return WeierstrassElement::reduce(p, m); }

/// One rewrite Pp^2 -> 4P^3 - g2 P - g3 on a single term, chosen from the front or the back.
SparsePoly rewrite_once(const SparsePoly& p, bool from_front) {
    std::vector<Term> t(p.terms().begin(), p.terms().end());
    auto pick = [&]() -> int {
        const int n = static_cast<int>(t.size());
        for (int k = 0; k < n; ++k) {
            int i = from_front ? k : n - 1 - k;
            if (t[static_cast<std::size_t>(i)].mono[Var::Pp] >= 2) return i;
        }
        return -1;
    };
    int i = pick();
    if (i < 0) return p;
    Term hit = t[static_cast<std::size_t>(i)];
    t.erase(t.begin() + i);
    SparsePoly rest(hit.mono.with(Var::Pp, hit.mono[Var::Pp] - 2), hit.coeff);
    SparsePoly cubic = 4L * v(Var::P, 3) - v(Var::g2) * v(Var::P) - v(Var::g3);
    return SparsePoly::from_terms(std::move(t)) + rest * cubic;
}

SparsePoly rewrite_fully(SparsePoly p, bool from_front) {
    for (;;) {
        SparsePoly q = rewrite_once(p, from_front);
        if (q == p) return p;
        p = q;
    }
}

WeierstrassElement random_element(std::mt19937& rng, Mode m) {
    std::uniform_int_distribution<int> n(1, 4), c(-4, 4), e(0, 3), pp(0, 3);
    SparsePoly p;
    for (int i = n(rng); i > 0; --i)
        p += SparsePoly(Monomial{{Var::P, e(rng)}, {Var::Pp, pp(rng)}, {Var::z, e(rng) - 1}, {Var::g3, e(rng) / 2}},
                        Rational(c(rng), 1 + e(rng)));
    return el(p, m);
}

}  // namespace

TEST(Reduce, Examples) {
    EXPECT_EQ(el(v(Var::Pp, 2)).value(), 4L * v(Var::P, 3) - v(Var::g2) * v(Var::P) - v(Var::g3));
    EXPECT_EQ(el(v(Var::Pp, 3)).value(),
              v(Var::Pp) * (4L * v(Var::P, 3) - v(Var::g2) * v(Var::P) - v(Var::g3)));
    EXPECT_EQ(el(v(Var::Pp, 2), E).value(), 4L * v(Var::P, 3) - v(Var::g3));
}

TEST(Reduce, EquianharmonicDropsG2) {
    WeierstrassElement e = el(v(Var::g2) * v(Var::P) + v(Var::Pp, 4), E);
    EXPECT_FALSE(e.value().contains(Var::g2));
}

TEST(Derivation, Examples) {
    EXPECT_EQ(d_dx(WeierstrassElement::P(G)), WeierstrassElement::Pp(G));
    EXPECT_EQ(d_dx(WeierstrassElement::Pp(G)).value(), 6L * v(Var::P, 2) - v(Var::g2) * Rational(1, 2));
    EXPECT_EQ(d_dx(el(v(Var::P, 3))).value(), 3L * v(Var::P, 2) * v(Var::Pp));
    EXPECT_EQ(d_dx(WeierstrassElement::Pp(E)).value(), 6L * v(Var::P, 2));
}

TEST(Derivation, Iterated) {
    EXPECT_EQ(d_dx_n(WeierstrassElement::P(G), 0), WeierstrassElement::P(G));
    EXPECT_EQ(d_dx_n(WeierstrassElement::P(G), 2).value(), 6L * v(Var::P, 2) - v(Var::g2) * Rational(1, 2));
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(d_dx_n(el(v(Var::z, 2) + v(Var::g3)), k).is_zero());
    EXPECT_THROW(d_dx_n(WeierstrassElement::P(G), -1), std::invalid_argument);
}

TEST(Derivation, KillsTheRelation) {
    SparsePoly rel = v(Var::Pp, 2) - 4L * v(Var::P, 3) + v(Var::g2) * v(Var::P) + v(Var::g3);
    EXPECT_TRUE(el(rel).is_zero());
    EXPECT_TRUE(d_dx(el(rel)).is_zero());
}

TEST(Constancy, Examples) {
    EXPECT_TRUE(el(v(Var::z, 2) + v(Var::g3)).is_x_constant());
    EXPECT_EQ(*el(v(Var::z, 2) + v(Var::g3)).x_constant_value(), v(Var::z, 2) + v(Var::g3));
    EXPECT_FALSE(WeierstrassElement::P(G).is_x_constant());
    EXPECT_FALSE(WeierstrassElement::P(G).x_constant_value().has_value());
    // Pp^2 - 4P^3 is constant although written with P and Pp.
    EXPECT_TRUE(el(v(Var::Pp, 2) - 4L * v(Var::P, 3) + v(Var::g2) * v(Var::P)).is_x_constant());
}

TEST(RingProperties, Confluence) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 2; k <= 8; ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            SparsePoly p;
            for (int j = 0; j <= k; ++j)
                p += SparsePoly(Monomial{{Var::Pp, j}, {Var::P, trial % 3}, {Var::z, j % 2}}, Rational(c(rng), 1 + j));
            const SparsePoly canon = el(p).value();
            EXPECT_EQ(rewrite_fully(p, true), canon);
            EXPECT_EQ(rewrite_fully(p, false), canon);
        }
    }
}

TEST(RingProperties, LeibnizRule) {
    std::mt19937 rng(11);
    for (Mode m : {G, E}) {
        for (int i = 0; i < 200; ++i) {
            const WeierstrassElement a = random_element(rng, m), b = random_element(rng, m);
            ASSERT_EQ(d_dx(a * b), d_dx(a) * b + a * d_dx(b));
        }
    }
}

TEST(RingProperties, NoNonconstantFirstIntegrals) {
    // Basis P^a and P^a Pp with a + b <= 6; derivatives have pairwise distinct
    // leading (P, Pp) monomials, so no nonzero combination is killed.
    for (Mode m : {G, E}) {
        std::set<std::pair<int, int>> leads;
        int count = 0;
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 1; ++b) {
                if (a + b == 0 || a + b > 6) continue;
                const WeierstrassElement d = d_dx(el(v(Var::P, a) * v(Var::Pp, b), m));
                ASSERT_FALSE(d.is_zero());
                std::pair<int, int> best{-1, -1};
                for (const auto& t : d.value().terms()) {
                    std::pair<int, int> key{t.mono[Var::P] + t.mono[Var::Pp], t.mono[Var::Pp]};
                    best = std::max(best, key);
                }
                leads.insert(best);
                ++count;
            }
        }
        EXPECT_EQ(static_cast<int>(leads.size()), count);
    }
}

TEST(Element, ModeMismatchIsRejected) {
    EXPECT_THROW(WeierstrassElement::P(G) + WeierstrassElement::P(E), std::logic_error);
}

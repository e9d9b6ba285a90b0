#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "zsw/bounds.hpp"
#include "zsw/errors.hpp"
#include "zsw/group.hpp"

using namespace zsw;

namespace {

using Factors = std::vector<std::int64_t>;

FiniteAbelianGroup chain(Factors f) { return FiniteAbelianGroup::from_chain(std::move(f)); }

} // namespace

TEST(DStar, Examples) {
    EXPECT_EQ(d_star(chain({2, 2, 2})), 4);
    EXPECT_EQ(d_star(chain({3, 3})), 5);
    EXPECT_EQ(d_star(FiniteAbelianGroup()), 1);
}

TEST(Eq1Bounds, Examples) {
    const auto v = eq1_bounds(chain({2, 2, 2}));
    EXPECT_EQ(v.lower, 4);
    EXPECT_EQ(v.upper, 5);
    ASSERT_TRUE(v.upper_real);
    EXPECT_NEAR(*v.upper_real, 2 * (1 + std::log(4.0)), 1e-12);

    for (std::int64_t n = 2; n <= 30; ++n) {
        const auto c = eq1_bounds(chain({n}));
        EXPECT_EQ(c.lower, n);
        EXPECT_EQ(c.upper, n);
    }

    const auto w = eq1_bounds(chain({3, 3}));
    EXPECT_EQ(w.lower, 5);
    EXPECT_EQ(w.upper, 7);
    EXPECT_THROW(eq1_bounds(FiniteAbelianGroup()), HypothesisError);
}

TEST(Eq1Bounds, LowerNeverExceedsUpper) {
    for (const auto& g : enumerate_groups(300)) {
        if (g.is_trivial())
            continue;
        const auto b = eq1_bounds(g);
        EXPECT_LE(b.lower, b.upper) << g.to_string();
    }
}

TEST(KnownDavenport, Clauses) {
    const auto d = known_davenport(chain({2, 2, 2, 6}));
    EXPECT_EQ(d.value, 9);
    EXPECT_EQ(d.clause, "1(d)");

    const auto g = known_davenport(chain({3, 6, 12}));
    EXPECT_EQ(g.value, 19);
    EXPECT_EQ(g.clause, "1(g)");

    const auto a = known_davenport(chain({5, 5, 5, 5}));
    EXPECT_EQ(a.value, 17);
    EXPECT_EQ(a.clause, "1(a)");

    EXPECT_EQ(known_davenport(chain({6, 12})).clause, "1(b)");
    EXPECT_EQ(known_davenport(FiniteAbelianGroup()).value, 1);
    EXPECT_EQ(known_davenport(chain({2, 2, 12})).clause, "1(c)");
    EXPECT_EQ(known_davenport(chain({6, 6, 6})).clause, "1(e)");
    EXPECT_EQ(known_davenport(chain({2, 6, 30})).clause, "1(f)");
    EXPECT_FALSE(known_davenport(chain({3, 3, 3, 6})).known());
}

TEST(KnownDavenport, EveryGroupUpToSixteenIsCovered) {
    for (const auto& g : enumerate_groups(16)) {
        const auto k = known_davenport(g);
        ASSERT_TRUE(k.known()) << g.to_string();
        EXPECT_EQ(*k.value, d_star(g));
        EXPECT_TRUE(k.clause == "1(a)" || k.clause == "1(b)") << g.to_string();
    }
}

TEST(Remark31, CaseTwoGroups) {
    const auto a = remark31_lower(chain({3, 3, 3, 6}));
    EXPECT_EQ(a.value, 13);
    EXPECT_EQ(a.clause, "2(a)");
    EXPECT_TRUE(a.lower_bound_only);

    const auto b = remark31_lower(chain({3, 9, 9, 18}));
    EXPECT_EQ(b.value, d_star(chain({3, 9, 9, 18})) + 1);
    EXPECT_EQ(b.clause, "2(b)");

    const auto c = remark31_lower(chain({3, 15, 15, 30}));
    EXPECT_EQ(c.value, d_star(chain({3, 15, 15, 30})) + 1);

    EXPECT_FALSE(remark31_lower(chain({2, 4})).known());
}

TEST(Remark31, Parametric) {
    const auto p = remark31_lower(2, 3, 1);
    EXPECT_EQ(p.group.factors(), (Factors{2, 2, 2, 2, 2, 6}));
    EXPECT_EQ(p.d_star, 1 + 5 + 5);
    ASSERT_TRUE(p.bound.known());
    EXPECT_EQ(*p.bound.value, p.d_star + 1);
    EXPECT_EQ(p.bound.clause, "2(d)");

    // Group form and parameter form agree.
    for (std::int64_t n = 2; n <= 5; ++n)
        for (std::int64_t k = 2; k <= 5; ++k) {
            if (std::gcd(n, k) != 1)
                continue;
            for (std::int64_t rho = 0; rho < n; ++rho) {
                const auto q = remark31_lower(n, k, rho);
                EXPECT_EQ(q.d_star, d_star(q.group));
                const auto r = remark31_lower(q.group);
                if (r.clause == "2(d)") {
                    EXPECT_EQ(r.value, q.bound.value);
                }
                if (q.bound.known()) {
                    EXPECT_GT(*q.bound.value, q.d_star);
                }
            }
        }

    EXPECT_THROW(remark31_lower(2, 4, 1), HypothesisError);
    EXPECT_THROW(remark31_lower(3, 2, 3), HypothesisError);
}

TEST(Formulas, RankTwoAndTheorem) {
    EXPECT_EQ(cor45_em(2, 4, 1), 12);
    EXPECT_EQ(cor45_sm(3, 3, 2), 12);
    EXPECT_EQ(cor45_dm(2, 4, 2), 9);
    const Factors ones{1, 1};
    EXPECT_EQ(cor44_em(2, ones, 2), 10);
    EXPECT_EQ(thm41_em(chain({2, 2}), 1), 6);
    EXPECT_EQ(thm41_em(chain({3}), 2), 8);
    EXPECT_EQ(thm41_em(chain({3, 3, 3, 6}), 1, 13), 13 + 162 - 1);
    EXPECT_THROW(thm41_em(chain({3, 3, 3, 6}), 1), HypothesisError);
    EXPECT_THROW(cor45_em(2, 3, 1), HypothesisError);

    // The rank-two formulas agree with Theorem 4.1 and D = n1 + n2 - 1.
    for (std::int64_t n1 = 1; n1 <= 6; ++n1)
        for (std::int64_t n2 = n1; n2 <= 24; n2 += n1)
            for (std::int64_t m = 1; m <= 4; ++m) {
                EXPECT_EQ(cor45_em(n1, n2, m), n1 + n2 - 1 + m * n1 * n2 - 1);
                EXPECT_EQ(cor45_dm(n1, n2, 1), n1 + n2 - 1);
                EXPECT_EQ(cor45_sm(n1, n2, m + 1) - cor45_sm(n1, n2, m), n2);
            }
}

TEST(Formulas, Section6) {
    EXPECT_EQ(lemma61_bound(2, 2), 4);
    EXPECT_EQ(lemma61_bound(2, 3), 5);
    EXPECT_EQ(lemma61_bound(3, 2), 7);
    EXPECT_EQ(cor62_bound(3), 9);
    EXPECT_THROW(lemma61_bound(4, 2), HypothesisError);
    EXPECT_EQ(cor66_upper(8, 2, 3), 12);

    EXPECT_EQ(known_eta(chain({2, 2, 2})), 8);
    EXPECT_EQ(known_eta(chain({3, 3, 3})), 17);
    EXPECT_EQ(known_eta(chain({6, 6, 6})), 36);
    EXPECT_EQ(known_eta(chain({3, 3, 3, 3})), 39);
    EXPECT_EQ(known_eta(chain({3, 3, 3, 3, 3})), 89);
    EXPECT_EQ(known_eta(chain({3, 3, 3, 3, 3, 3})), 223);
    EXPECT_FALSE(known_eta(chain({7, 7, 7})));
    EXPECT_EQ(cor68_dm_upper(chain({3, 3, 3}), 2), 17 + 3);

    const auto s = lemma69_sandwich(2, 4, 5, 5);
    EXPECT_TRUE(s.holds());
    EXPECT_FALSE(lemma69_sandwich(2, 4, 5, 4).lower_link);
    EXPECT_FALSE(lemma69_sandwich(2, 4, 9, 5).upper_link);
    EXPECT_FALSE(lemma69_sandwich(2, 4, 5, 6).middle_link);

    const auto t = thm_616_bounds(2, 2, 4);
    EXPECT_EQ(t.lower, 6);
    EXPECT_EQ(t.upper, 9);
    EXPECT_EQ(thm_616_multiplicity(2, 2, 4), 2);
    EXPECT_THROW(thm_616_bounds(3, 2, 4), HypothesisError);
}

TEST(Formulas, ThthAndMainth) {
    EXPECT_EQ(thm_thth_bound(1, 2, 2), 4);
    EXPECT_EQ(thm_thth_length(1, 2, 2), 2);
    EXPECT_EQ(thm_thth_bound(2, 2, 4), 2 * (8 + 2 + 2) - 3);
    EXPECT_THROW(thm_thth_bound(2, 3, 6), HypothesisError);

    const Factors orders{2, 4};
    EXPECT_EQ(thm_mainth_bound(orders), 1 * (2 * 3 + 1 + 1));
    EXPECT_EQ(thm_mainth_length(orders), 4);
    const Factors three{2, 2, 4};
    EXPECT_EQ(thm_mainth_bound(three), 4 * (2 * 3 + 1 + 1 + 1));
}

TEST(Arithmetic, OmegaAndPrimes) {
    EXPECT_EQ(omega(12), 3);
    EXPECT_EQ(omega(1), 0);
    EXPECT_EQ(omega(97), 1);
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 1; b <= 60; ++b)
            EXPECT_EQ(omega(a * b), omega(a) + omega(b));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(7919));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
}

#include <gtest/gtest.h>

#include <random>

#include "zsw/smooth.hpp"

using namespace zsw;

namespace {

using Ints = std::vector<std::int64_t>;

std::vector<BigInt> bigs(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

// Every nonempty subset product that is a perfect n_k-th power per prime.
bool brute_force_exists(const std::vector<BigInt>& numbers, const PrimeBasis& basis, const Ints& moduli) {
    std::vector<ExponentVector> e;
    for (const auto& x : numbers)
        e.push_back(factor_smooth(x, basis));
    for (unsigned mask = 1; mask < (1u << numbers.size()); ++mask) {
        bool ok = true;
        for (std::size_t k = 0; k < moduli.size() && ok; ++k) {
            std::int64_t total = 0;
            for (std::size_t i = 0; i < numbers.size(); ++i)
                if (mask >> i & 1u)
                    total += e[i][k];
            ok = total % moduli[k] == 0;
        }
        if (ok)
            return true;
    }
    return false;
}

} // namespace

TEST(FactorSmooth, Examples) {
    const PrimeBasis b23({2, 3});
    EXPECT_EQ(factor_smooth(36, b23), (ExponentVector{2, 2}));
    EXPECT_EQ(factor_smooth(1, b23), (ExponentVector{0, 0}));
    try {
        factor_smooth(10, b23);
        FAIL() << "expected NotSmooth";
    } catch (const NotSmooth& e) {
        EXPECT_EQ(e.cofactor(), 5);
        EXPECT_EQ(e.value(), 10);
    }
    EXPECT_THROW(factor_smooth(0, b23), std::invalid_argument);
    EXPECT_THROW(factor_smooth(-4, b23), std::invalid_argument);

    BigInt big = 1;
    for (int i = 0; i < 100; ++i)
        big *= 3;
    EXPECT_EQ(factor_smooth(big, b23), (ExponentVector{0, 100}));
}

TEST(FactorSmooth, BasisValidation) {
    EXPECT_THROW(PrimeBasis({2, 4}), std::invalid_argument);
    EXPECT_THROW(PrimeBasis({3, 3}), std::invalid_argument);
}

TEST(PhiMap, Examples) {
    EXPECT_EQ(phi_map({2, 1}, Ints{2, 2}), (Ints{0, 1}));
    EXPECT_EQ(phi_map({0, 0}, Ints{2, 3}), (Ints{0, 0}));
    EXPECT_EQ(phi_map({3, 5}, Ints{2, 3}), (Ints{1, 2}));
    EXPECT_THROW(phi_map({1}, Ints{2, 2}), std::invalid_argument);
}

TEST(PowerSmooth, Examples) {
    const PrimeBasis b23({2, 3});
    const Ints m22{2, 2};
    const auto nums = bigs({2, 3, 6});
    const auto c = find_power_smooth_subsequence(nums, b23, m22);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->indices, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(c->product, 36);
    EXPECT_EQ(c->totals, (Ints{2, 2}));
    EXPECT_EQ(c->quotients, (Ints{1, 1}));
    EXPECT_TRUE(c->verify(nums, b23, m22));

    const PrimeBasis b2({2});
    const Ints m2{2};
    const auto four = bigs({4});
    const auto c4 = find_power_smooth_subsequence(four, b2, m2);
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->indices, std::vector<std::size_t>{1});
    EXPECT_EQ(c4->product, 4);

    EXPECT_FALSE(find_power_smooth_subsequence(bigs({2, 3}), b23, m22));

    const auto bad = bigs({2, 10});
    try {
        find_power_smooth_subsequence(bad, b23, m22);
        FAIL() << "expected NotSmooth";
    } catch (const NotSmooth& e) {
        EXPECT_EQ(e.index(), std::optional<std::size_t>(1));
    }
}

TEST(PowerSmooth, VerifyRejectsTampering) {
    const PrimeBasis b23({2, 3});
    const Ints m22{2, 2};
    const auto nums = bigs({2, 3, 6});
    auto c = *find_power_smooth_subsequence(nums, b23, m22);
    auto wrong_product = c;
    wrong_product.product = 35;
    EXPECT_FALSE(wrong_product.verify(nums, b23, m22));
    auto dup = c;
    dup.indices = {1, 1};
    EXPECT_FALSE(dup.verify(nums, b23, m22));
    auto not_power = c;
    not_power.indices = {1, 2};
    EXPECT_FALSE(not_power.verify(nums, b23, m22));
}

TEST(PowerSmooth, AgreesWithBruteForce) {
    std::mt19937 rng(31);
    const PrimeBasis basis({2, 3, 5});
    const Ints moduli{2, 3, 2};
    std::uniform_int_distribution<int> ex(0, 4), len(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<BigInt> nums(static_cast<std::size_t>(len(rng)));
        for (auto& x : nums) {
            x = 1;
            for (auto p : {2, 3, 5})
                for (int k = ex(rng); k > 0; --k)
                    x *= p;
        }
        const auto c = find_power_smooth_subsequence(nums, basis, moduli);
        ASSERT_EQ(c.has_value(), brute_force_exists(nums, basis, moduli));
        if (c) {
            ASSERT_TRUE(c->verify(nums, basis, moduli));
        }
    }
}

TEST(CConstant, Examples) {
    EXPECT_EQ(c_constant(Ints{2, 2}).require(), 3);
    EXPECT_EQ(c_constant(Ints{4}).require(), 4);
    EXPECT_EQ(c_constant(Ints{2, 3}).require(), 6);
}

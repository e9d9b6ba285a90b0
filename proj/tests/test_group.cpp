#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "zsw/errors.hpp"
#include "zsw/group.hpp"
#include "zsw/integer_matrix.hpp"
#include "zsw/length_set.hpp"
#include "zsw/sequence.hpp"
#include "zsw/subgroup.hpp"

using namespace zsw;

namespace {

using Factors = std::vector<std::int64_t>;

// Number of partitions of k.
std::int64_t partitions(int k) {
    std::vector<std::int64_t> p(k + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int s = part; s <= k; ++s)
            p[s] += p[s - part];
    return p[k];
}

// Abelian groups of order n up to isomorphism: product over p^k || n of p(k).
std::int64_t abelian_count(std::int64_t n) {
    std::int64_t total = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        total *= partitions(k);
    }
    return total;
}

// Cosets of H in G by closure, for quotient checks.
std::int64_t coset_count(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
    std::set<std::int64_t> h{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto x : std::vector<std::int64_t>(h.begin(), h.end()))
            for (const auto& s : gens)
                if (h.insert(g.add_index(x, s.index())).second)
                    grew = true;
    }
    return g.order() / static_cast<std::int64_t>(h.size());
}

} // namespace

TEST(MakeGroup, AlreadyAChain) {
    const auto g = make_group({2, 4});
    EXPECT_EQ(g.factors(), (Factors{2, 4}));
    EXPECT_EQ(g.order(), 8);
    EXPECT_EQ(g.exponent(), 4);
    EXPECT_EQ(g.rank(), 2u);
}

TEST(MakeGroup, CoprimeFactorsMerge) {
    const auto g = make_group({2, 3});
    EXPECT_EQ(g.factors(), (Factors{6}));
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.rank(), 1u);
}

TEST(MakeGroup, NormalizesViaSmithForm) {
    EXPECT_EQ(make_group({6, 4}).factors(), (Factors{2, 12}));
    EXPECT_EQ(make_group({4, 6, 10}).factors(), (Factors{2, 2, 60}));
    EXPECT_EQ(make_group({1, 1}).factors(), Factors{});
    EXPECT_TRUE(make_group({}).is_trivial());
    EXPECT_THROW(make_group({0}), std::invalid_argument);
    EXPECT_THROW(make_group({-3}), std::invalid_argument);
}

TEST(MakeGroup, FromChainRejectsNonChains) {
    EXPECT_THROW(FiniteAbelianGroup::from_chain({4, 2}), std::invalid_argument);
    EXPECT_THROW(FiniteAbelianGroup::from_chain({2, 3}), std::invalid_argument);
    EXPECT_THROW(FiniteAbelianGroup::from_chain({1, 2}), std::invalid_argument);
    EXPECT_NO_THROW(FiniteAbelianGroup::from_chain({2, 2, 6}));
}

TEST(Elements, Arithmetic) {
    const auto g = make_group({2, 4});
    const auto sum = g.element({1, 2}) + g.element({1, 3});
    EXPECT_EQ(sum.coords(), (Factors{0, 1}));

    const auto c5 = make_group({5});
    EXPECT_EQ(neg(c5.element({2})).coords(), Factors{3});

    for (std::int64_t i = 0; i < g.order(); ++i) {
        const auto x = g.from_index(i);
        EXPECT_EQ(add(x, g.zero()), x);
        EXPECT_TRUE((x + -x).is_zero());
    }
    EXPECT_THROW(add(g.zero(), c5.zero()), std::invalid_argument);
}

TEST(Elements, IndexIsMixedRadix) {
    const auto g = make_group({2, 4});
    EXPECT_EQ(g.index_of(Factors{1, 3}), 7);
    EXPECT_EQ(g.coords_of(5), (Factors{1, 1}));
    EXPECT_EQ(g.element({-1, -1}).coords(), (Factors{1, 3}));
    EXPECT_EQ(g.element_order(g.index_of(Factors{1, 2})), 2);
    EXPECT_EQ(g.element_order(g.index_of(Factors{0, 1})), 4);
    EXPECT_EQ(g.scale_index(g.index_of(Factors{1, 1}), 3), g.index_of(Factors{1, 3}));
}

TEST(Elements, AdditionTableAgrees) {
    const auto g = make_group({3, 6});
    const AdditionTable t(g);
    for (std::int64_t a = 0; a < g.order(); ++a) {
        EXPECT_EQ(t.neg(a), g.neg_index(a));
        for (std::int64_t b = 0; b < g.order(); ++b)
            EXPECT_EQ(t.add(a, b), g.add_index(a, b));
    }
}

TEST(ParseGroup, Literals) {
    EXPECT_EQ(parse_group("C2xC4"), make_group({2, 4}));
    EXPECT_EQ(parse_group("c3xc3"), make_group({3, 3}));
    EXPECT_EQ(parse_group("C2xC3"), make_group({6}));
    EXPECT_TRUE(parse_group("C1").is_trivial());
    EXPECT_TRUE(parse_group("trivial").is_trivial());
    EXPECT_EQ(make_group({2, 4}).to_string(), "C2xC4");
    EXPECT_EQ(FiniteAbelianGroup().to_string(), "C1");
    EXPECT_THROW(parse_group("C"), ParseError);
    EXPECT_THROW(parse_group("C2x"), ParseError);
    EXPECT_THROW(parse_group("Z4"), ParseError);
    EXPECT_THROW(parse_group("C0"), ParseError);
}

TEST(SmithForm, Examples) {
    const auto a = IntegerMatrix{{2, 0}, {0, 4}};
    EXPECT_EQ(smith_normal_form(a).D, a);

    const auto b = IntegerMatrix{{2, 4}, {4, 2}};
    const auto snf = smith_normal_form(b);
    EXPECT_EQ(snf.D, (IntegerMatrix{{2, 0}, {0, 6}}));
    EXPECT_EQ(snf.U * b * snf.V, snf.D);

    const IntegerMatrix zero(2, 2);
    EXPECT_EQ(smith_normal_form(zero).D, zero);
}

TEST(SmithForm, RandomMatricesSatisfyInvariants) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9), dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
        IntegerMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a(i, j) = entry(rng);
        const auto f = smith_normal_form(a);
        ASSERT_EQ(f.U * a * f.V, f.D);
        ASSERT_TRUE(f.D.is_diagonal());
        ASSERT_EQ(abs(f.U.determinant()), 1);
        ASSERT_EQ(abs(f.V.determinant()), 1);
        ASSERT_EQ(f.U * f.U_inverse, IntegerMatrix::identity(rows));
        const auto d = f.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            ASSERT_GE(d[i], 0);
            if (d[i] == 0) {
                ASSERT_EQ(d[i + 1], 0);
            } else {
                ASSERT_EQ(d[i + 1] % d[i], 0);
            }
        }
        if (rows == cols) {
            ASSERT_EQ(abs(a.determinant()), abs(f.D.determinant()));
        }
    }
}

TEST(Quotient, Examples) {
    const auto g = make_group({2, 4});
    const auto q1 = quotient_by_generators({g, {g.element({0, 2})}});
    EXPECT_EQ(q1.quotient.factors(), (Factors{2, 2}));

    const auto q2 = quotient_by_generators({g, {g.element({1, 2})}});
    EXPECT_EQ(q2.quotient.factors(), (Factors{4}));
    EXPECT_EQ(q2.projection.project(g.element({0, 1}).coords()).group(), q2.quotient);

    const auto q3 = quotient_by_generators({g, {g.zero()}});
    EXPECT_EQ(q3.quotient, g);

    EXPECT_THROW(SubgroupSpec(g, {make_group({3}).zero()}), std::invalid_argument);
}

TEST(Quotient, ProjectionIsHomomorphismWithKernelH) {
    for (const auto& g : enumerate_groups(16)) {
        for (std::int64_t h = 0; h < g.order(); ++h) {
            const std::vector<GroupElement> gens{g.from_index(h)};
            const auto q = quotient_by_generators({g, gens});
            ASSERT_EQ(q.quotient.order(), coset_count(g, gens)) << g.to_string() << " / " << h;
            std::int64_t kernel = 0;
            for (std::int64_t a = 0; a < g.order(); ++a) {
                const auto pa = q.projection.project_index(g.coords_of(a));
                if (pa == 0)
                    ++kernel;
                const auto b = (a * 5 + 3) % g.order();
                const auto pb = q.projection.project_index(g.coords_of(b));
                ASSERT_EQ(q.projection.project_index(g.coords_of(g.add_index(a, b))), q.quotient.add_index(pa, pb));
            }
            ASSERT_EQ(kernel, g.order() / q.quotient.order());
            ASSERT_EQ(subgroup_structure({g, gens}).order(), kernel);
        }
    }
}

TEST(Quotient, SubgroupStructure) {
    const auto g = make_group({2, 4});
    EXPECT_EQ(subgroup_structure({g, {g.element({1, 0}), g.element({0, 2})}}).factors(), (Factors{2, 2}));
    EXPECT_EQ(subgroup_structure({g, {g.element({1, 1})}}).factors(), (Factors{4}));
    EXPECT_TRUE(subgroup_structure({g, {}}).is_trivial());
}

TEST(Normalize, CyclicProductIsomorphism) {
    const auto map = normalize_cyclic_product(Factors{2, 2, 3});
    EXPECT_EQ(map.target().factors(), (Factors{2, 6}));
    std::set<std::int64_t> images;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 3; ++c) {
                const Factors v{a, b, c};
                images.insert(map.project_index(v));
                const auto back = map.lift(map.project(v));
                EXPECT_EQ(back, v);
            }
    EXPECT_EQ(images.size(), 12u);
}

TEST(EnumerateGroups, SmallOrders) {
    const auto four = enumerate_groups(4);
    ASSERT_EQ(four.size(), 5u);
    EXPECT_TRUE(four[0].is_trivial());
    EXPECT_EQ(four[1].factors(), Factors{2});
    EXPECT_EQ(four[2].factors(), Factors{3});
    EXPECT_EQ(four[3].factors(), Factors{4});
    EXPECT_EQ(four[4].factors(), (Factors{2, 2}));

    const auto one = enumerate_groups(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].is_trivial());
}

TEST(EnumerateGroups, CountsMatchPartitionFormula) {
    const auto groups = enumerate_groups(200);
    std::map<std::int64_t, std::int64_t> per_order;
    std::set<Factors> seen;
    for (const auto& g : groups) {
        ++per_order[g.order()];
        EXPECT_TRUE(seen.insert(g.factors()).second) << g.to_string();
    }
    for (std::int64_t n = 1; n <= 200; ++n)
        EXPECT_EQ(per_order[n], abelian_count(n)) << n;
}

TEST(LengthSet, ParseAndPrint) {
    EXPECT_EQ(LengthSet::parse("all"), LengthSet::all());
    EXPECT_EQ(LengthSet::parse("<=3"), LengthSet::up_to(3));
    EXPECT_EQ(LengthSet::parse("=4"), LengthSet::exactly(4));
    EXPECT_EQ(LengthSet::parse(">=2"), LengthSet::at_least(2));
    EXPECT_EQ(LengthSet::parse("[2,5]"), LengthSet::interval(2, 5));
    EXPECT_EQ(LengthSet::parse("=2,=3"), LengthSet::interval(2, 3));
    EXPECT_EQ(LengthSet::up_to(3).to_string(), "[1,3]");
    EXPECT_THROW(LengthSet::parse("<=0"), std::invalid_argument);
    EXPECT_THROW(LengthSet::parse("~3"), ParseError);

    const auto u = LengthSet::exactly(2).unite(LengthSet::at_least(5));
    EXPECT_TRUE(u.contains(2));
    EXPECT_FALSE(u.contains(3));
    EXPECT_TRUE(u.contains(1000));
    EXPECT_FALSE(u.is_bounded());
    EXPECT_TRUE(LengthSet::up_to(4).is_downward_closed());
    EXPECT_FALSE(LengthSet::exactly(4).is_downward_closed());
    EXPECT_TRUE(LengthSet::exactly(6).all_multiples_of(3));
    EXPECT_FALSE(LengthSet::all().all_multiples_of(1));
}

TEST(Sequence, Basics) {
    const auto g = make_group({2, 2});
    auto s = GSequence::from_indices(g, Factors{1, 2, 3, 3});
    EXPECT_EQ(s.length(), 4);
    EXPECT_EQ(s.count(3), 2);
    EXPECT_EQ(s.sum_index(), 3);
    EXPECT_EQ(s.to_indices(), (Factors{1, 2, 3, 3}));
    s.remove(3, 2);
    EXPECT_EQ(s.sum_index(), 3);
    EXPECT_THROW(s.remove(0), std::invalid_argument);
    EXPECT_TRUE(GSequence::from_indices(g, Factors{1, 2, 3}).contains(GSequence::from_indices(g, Factors{1, 3})));
    EXPECT_FALSE(GSequence::from_indices(g, Factors{1}).contains(GSequence::from_indices(g, Factors{1, 1})));
}

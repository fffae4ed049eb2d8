#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "toric/graver.hpp"

using namespace toric;

namespace {

std::vector<IntVec> graver_2_3_11() {
    return canonical_set({{0, 11, -3}, {3, -2, 0}, {4, 1, -1}, {1, 3, -1}, {7, -1, -1}, {11, 0, -2}, {1, -8, 2}, {2, -5, 1}});
}

Int max_abs(const IntVec& v) {
    Int m = 0;
    for (Int x : v) m = std::max(m, checked_abs(x));
    return m;
}

}  // namespace

TEST(GraverBasis, TwoThreeElevenHasEightClasses) {
    GraverBasis g = graver_basis(fixtures::row({2, 3, 11}));
    EXPECT_EQ(g.elements, graver_2_3_11());
}

TEST(GraverBasis, IdentityIsEmpty) { EXPECT_TRUE(graver_basis(Configuration(IntMatrix::identity(4))).elements.empty()); }

TEST(GraverBasis, ThreeFourFiveAgainstBoxOracle) {
    Configuration a = fixtures::row({3, 4, 5});
    GraverBasis g = graver_basis(a);
    for (const IntVec& u : {IntVec{-3, 1, 1}, IntVec{1, -2, 1}, IntVec{2, 1, -2}}) EXPECT_TRUE(g.contains(u));
    EXPECT_EQ(conformal_minimal(box_kernel_oracle(a, 15)), g.elements);
    EXPECT_EQ(g.size(), 7u);
}

TEST(GraverBasis, SignClassesAreCanonicalAndSymmetric) {
    for (const auto& f : fixtures::all()) {
        GraverBasis g = graver_basis(f.config);
        EXPECT_TRUE(std::is_sorted(g.elements.begin(), g.elements.end(), GradedLex{})) << f.name;
        for (const auto& u : g.elements) {
            EXPECT_TRUE(is_canonical(u));
            EXPECT_TRUE(f.config.in_kernel(u));
            EXPECT_TRUE(g.contains(negate(u)));
        }
        EXPECT_EQ(canonical_set(g.elements), g.elements) << f.name;
    }
}

TEST(GraverBasis, NegativeEntries) {
    // kernel spanned by (1,1,1): Graver basis is that single class
    Configuration a(IntMatrix::from_rows({{1, -1, 0}, {0, 1, -1}}, 3));
    EXPECT_EQ(graver_basis(a).elements, (std::vector<IntVec>{{1, 1, 1}}));
}

TEST(GraverBasis, ResourceCapsError) {
    GraverOptions opts;
    opts.max_pairs = 3;
    EXPECT_THROW(graver_basis(fixtures::row({2, 3, 17}), opts), ResourceLimit);
    opts = {};
    opts.max_elements = 2;
    EXPECT_THROW(graver_basis(fixtures::row({2, 3, 17}), opts), ResourceLimit);
}

TEST(GraverBasis, SeedingWithFinishedBasisIsIdempotent) {
    for (const auto& f : fixtures::all()) {
        GraverBasis g = graver_basis(f.config);
        GraverOptions opts;
        opts.extra_seeds = g.elements;
        EXPECT_EQ(graver_basis(f.config, opts).elements, g.elements) << f.name;
    }
}

TEST(GraverBasis, SkippingCompatiblePairsDoesNotChangeOutput) {
    for (const auto& f : fixtures::all()) {
        GraverOptions all_pairs;
        all_pairs.skip_compatible_pairs = false;
        CompletionStats with_skip, without_skip;
        auto a = graver_basis(f.config, {}, &with_skip);
        auto b = graver_basis(f.config, all_pairs, &without_skip);
        EXPECT_EQ(a.elements, b.elements) << f.name;
        EXPECT_EQ(without_skip.skipped, 0u);
    }
}

TEST(GraverBasis, BoxOracleEquivalenceOnFixtures) {
    for (const auto& f : fixtures::all()) {
        const std::size_t n = f.config.cols();
        // largest bound with (2b+1)^n ≤ 10^6
        Int bound = static_cast<Int>((std::floor(std::pow(1e6, 1.0 / static_cast<double>(n)) + 1e-9) - 1) / 2);
        GraverBasis g = graver_basis(f.config);
        std::vector<IntVec> in_box;
        for (const auto& u : g.elements)
            if (max_abs(u) <= bound) in_box.push_back(u);
        EXPECT_EQ(conformal_minimal(box_kernel_oracle(f.config, bound)), in_box) << f.name << " bound " << bound;
    }
}

TEST(GraverBasis, RandomKernelVectorsReduceToZero) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-6, 6);
    for (const auto& f : fixtures::all()) {
        GraverBasis g = graver_basis(f.config);
        const auto& basis = f.config.kernel_basis();
        for (int trial = 0; trial < 100; ++trial) {
            IntVec u(f.config.cols(), 0);
            for (const auto& b : basis) u = add(u, scale(d(rng), b));
            EXPECT_TRUE(is_zero(conformal_normal_form(u, g))) << f.name << " " << to_string(u);
        }
    }
}

TEST(ConformalNormalForm, Examples) {
    Configuration a = fixtures::row({2, 3, 11});
    GraverBasis g = graver_basis(a);
    EXPECT_TRUE(is_zero(conformal_normal_form({6, -4, 0}, g)));
    EXPECT_TRUE(is_zero(conformal_normal_form({10, -3, -1}, g)));
    EXPECT_THROW(conformal_normal_form({1, 1, 1}, g), DomainError);
}

TEST(ConformalNormalForm, MinimalityOfEachElement) {
    Configuration a = fixtures::row({2, 3, 11});
    GraverBasis g = graver_basis(a);
    for (const auto& u : g.elements) {
        EXPECT_TRUE(is_zero(conformal_normal_form(u, g)));
        GraverBasis without{a, {}};
        for (const auto& v : g.elements)
            if (v != u) without.elements.push_back(v);
        EXPECT_EQ(conformal_normal_form(u, without), u) << to_string(u);
    }
}

TEST(Primitive, Examples) {
    EXPECT_TRUE(is_primitive(fixtures::row({2, 3, 11}), {7, -1, -1}));
    EXPECT_FALSE(is_primitive(fixtures::row({2, 3, 11}), {6, -4, 0}));
    EXPECT_TRUE(is_primitive(fixtures::row({3, 4, 5}), {-3, 1, 1}));
    EXPECT_THROW(is_primitive(fixtures::row({3, 4, 5}), {0, 0, 0}), DomainError);
    EXPECT_THROW(is_primitive(fixtures::row({3, 4, 5}), {1, 1, 1}), DomainError);
}

TEST(Primitive, AgreesWithCompletion) {
    for (const auto& f : fixtures::all()) {
        GraverBasis g = graver_basis(f.config);
        for (const auto& u : g.elements) EXPECT_TRUE(is_primitive(f.config, u)) << f.name << to_string(u);
        for (std::size_t i = 0; i + 1 < g.size() && i < 6; ++i) {
            IntVec s = add(g.elements[i], g.elements[i + 1]);
            if (!is_zero(s)) { EXPECT_EQ(is_primitive(f.config, s), g.contains(s)) << f.name << to_string(s); }
        }
    }
}

TEST(BoxOracle, Examples) {
    auto box = box_kernel_oracle(fixtures::row({2, 3, 11}), 11);
    for (const auto& u : graver_2_3_11()) EXPECT_TRUE(std::binary_search(box.begin(), box.end(), u, GradedLex{}));
    EXPECT_TRUE(box_kernel_oracle(Configuration(IntMatrix::identity(3)), 4).empty());
    EXPECT_EQ(box_kernel_oracle(fixtures::row({1, 1}), 3), (std::vector<IntVec>{{1, -1}, {2, -2}, {3, -3}}));
    EXPECT_THROW(box_kernel_oracle(fixtures::row({1, 1}), 0), DomainError);
    EXPECT_THROW(box_kernel_oracle(fixtures::row({1, 1, 1, 1, 1, 1}), 100, 1000), ResourceLimit);
}

TEST(GraverComplexity, ThreeFourFive) {
    GraverComplexity g = graver_complexity(fixtures::row({3, 4, 5}));
    EXPECT_EQ(g.value, 12);
    EXPECT_EQ(norm1(g.witness), 12);
    EXPECT_EQ(g.inner_size, 7u);
}

TEST(GraverComplexity, SingleColumnGraverOfGraverIsEmpty) {
    GraverComplexity g = graver_complexity(fixtures::row({1, 1}));
    EXPECT_EQ(g.value, 0);
    EXPECT_TRUE(g.witness.empty());
}

TEST(GraverComplexity, TrivialKernelIsAnError) {
    EXPECT_THROW(graver_complexity(Configuration(IntMatrix::identity(2))), DomainError);
}

TEST(GraverComplexity, ReductionInvariance) {
    EXPECT_EQ(graver_complexity(fixtures::row({2, 4, 5})).value, graver_complexity(fixtures::row({1, 2, 5})).value);
}

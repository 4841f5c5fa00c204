#include <gtest/gtest.h>

#include "hurwitz/joincut.hpp"
#include "hurwitz/oracle.hpp"
#include "support/pde.hpp"

using namespace hurwitz;

TEST(JoinCut, MonotoneExamples)
{
    auto h = solve_monotone(4, 6);
    EXPECT_EQ(h.at({1}, 0), 1);
    EXPECT_EQ(h.at({1, 1}, 2), 1);
    EXPECT_EQ(h.at({3}, 2), 4);
    EXPECT_EQ(h.at({2, 2}, 4), 54);
    EXPECT_EQ(h.genus({2}, 1), 1);
    EXPECT_EQ(h.genus({2}, 0), 1);
    EXPECT_THROW(h.at({5}, 0), invalid_argument);
}

TEST(JoinCut, ClassicalExamples)
{
    auto h = solve_classical(4, 6);
    EXPECT_EQ(h.at({1}, 0), 1);
    EXPECT_EQ(h.at({3}, 2), 6);
    EXPECT_EQ(h.at({2, 2}, 4), 288);
    for (int d = 2; d <= 4; ++d)
        for (const auto& alpha : partitions_of(d))
            EXPECT_EQ(h.at(alpha, 0), 0);
}

TEST(JoinCut, ResidualVanishes)
{
    for (Family fam : {Family::monotone, Family::classical}) {
        auto h = solve(fam, 5, 7);
        auto bad = test_support::join_cut_residual(h);
        EXPECT_TRUE(bad.empty()) << to_string(fam) << " residual at " << (bad.empty() ? "" : bad.front().p.str());
    }
}

TEST(JoinCut, ResidualDetectsPerturbation)
{
    auto h = solve_monotone(4, 5);
    h.set({2, 1}, 3, h.at({2, 1}, 3) + 1);
    EXPECT_FALSE(test_support::join_cut_residual(h).empty());
}

TEST(JoinCut, MatchesOracle)
{
    auto mono = solve_monotone(6, 10);
    auto mono_oracle = oracle::transitive_counts(6, 10, Family::monotone);
    auto cls = solve_classical(5, 8);
    auto cls_oracle = oracle::transitive_counts(5, 8, Family::classical);
    for (int d = 1; d <= 6; ++d)
        for (const auto& alpha : partitions_of(d))
            for (int r = 0; r <= 10; ++r) {
                EXPECT_EQ(mono.at(alpha, r), Rat(mono_oracle.at(alpha, r))) << alpha << " r=" << r;
                if (d <= 5 && r <= 8)
                    EXPECT_EQ(cls.at(alpha, r), Rat(cls_oracle.at(alpha, r))) << alpha << " r=" << r;
            }
}

TEST(JoinCut, VanishesOffParity)
{
    auto h = solve_monotone(6, 10);
    for (const auto& [key, v] : h.entries()) {
        const int floor = key.first.size() - key.first.length();
        EXPECT_GE(key.second, floor);
        EXPECT_EQ((key.second - floor) % 2, 0);
    }
}

#include <gtest/gtest.h>

#include "hurwitz/oracle.hpp"
#include "support/set_partitions.hpp"

using namespace hurwitz;
using namespace hurwitz::oracle;

TEST(Oracle, MonotoneExamples)
{
    EXPECT_EQ(count_monotone_transitive({1}, 0), 1);
    EXPECT_EQ(count_monotone_transitive({2}, 1), 1);
    EXPECT_EQ(count_monotone_transitive({3}, 2), 4);
    EXPECT_EQ(count_monotone_transitive({2}, 3), 1);
    EXPECT_EQ(count_monotone_transitive({2, 2}, 4), 54);
    EXPECT_EQ(count_monotone_transitive({1, 1}, 2), 1);
}

TEST(Oracle, ClassicalExamples)
{
    EXPECT_EQ(count_classical_transitive({2}, 1), 1);
    EXPECT_EQ(count_classical_transitive({3}, 2), 6);
    EXPECT_EQ(count_classical_transitive({1, 1}, 2), 1);
}

TEST(Oracle, AllCounts)
{
    auto d1 = count_monotone_all(1, 0);
    EXPECT_EQ(d1.at(Partition{1}), 1);
    auto d2 = count_monotone_all(2, 2);
    EXPECT_EQ(d2.at(Partition({1, 1})), 1);
    EXPECT_EQ(d2.at(Partition{2}), 0);
    auto d2r1 = count_monotone_all(2, 1);
    EXPECT_EQ(d2r1.at(Partition{2}), 1);
    EXPECT_EQ(d2r1.at(Partition({1, 1})), 0);
}

TEST(Oracle, DoubleCounts)
{
    EXPECT_EQ(count_monotone_double({2}, {2}, 0), 1);
    EXPECT_EQ(count_monotone_double({2}, {1, 1}, 1), 1);
    for (int d = 1; d <= 4; ++d)
        for (const auto& alpha : partitions_of(d))
            for (int r = 0; r <= 4; ++r)
                EXPECT_EQ(count_monotone_double(alpha, Partition(std::vector<int>(d, 1)), r),
                          count_monotone_transitive(alpha, r))
                    << alpha << " r=" << r;
    EXPECT_THROW(count_monotone_double({2}, {1, 1, 1}, 1), invalid_argument);
}

TEST(Oracle, DpAgreesWithDfs)
{
    for (Family fam : {Family::monotone, Family::classical}) {
        const int r_max = fam == Family::monotone ? 8 : 6;
        auto dp = transitive_counts(5, r_max, fam);
        for (int d = 1; d <= 5; ++d) {
            auto dfs = dfs_transitive_counts(d, r_max, fam);
            for (const auto& alpha : partitions_of(d))
                for (int r = 0; r <= r_max; ++r)
                    EXPECT_EQ(dp.at(alpha, r), dfs.at(alpha, r)) << to_string(fam) << alpha << " r=" << r;
        }
    }
}

TEST(Oracle, ParityAndGenusZeroFloor)
{
    auto mono = transitive_counts(6, 10, Family::monotone);
    auto cls = transitive_counts(6, 10, Family::classical);
    for (int d = 1; d <= 6; ++d)
        for (const auto& alpha : partitions_of(d))
            for (int r = 0; r <= 10; ++r) {
                const int floor = d - alpha.length();
                if (r < floor || (r - floor) % 2 != 0) {
                    EXPECT_EQ(mono.at(alpha, r), 0);
                    EXPECT_EQ(cls.at(alpha, r), 0);
                }
                EXPECT_LE(mono.at(alpha, r), cls.at(alpha, r));
                EXPECT_GE(mono.at(alpha, r), 0);
            }
}

TEST(Oracle, SetPartitionReconstruction)
{
    for (Family fam : {Family::monotone, Family::classical}) {
        auto conn = transitive_counts(5, 7, fam);
        for (int d = 1; d <= 5; ++d) {
            auto rebuilt = test_support::rebuild_all_from_transitive(conn, d, 7, fam);
            for (int r = 0; r <= 7; ++r) {
                auto direct = count_all(d, r, fam);
                for (const auto& [alpha, c] : direct)
                    EXPECT_EQ(rebuilt[std::make_pair(alpha, r)], c) << to_string(fam) << alpha << " r=" << r;
            }
        }
    }
}

TEST(Oracle, Guards)
{
    EXPECT_THROW(count_monotone_transitive(Partition({9}), 8), resource_limit);
    EXPECT_THROW(dfs_transitive_counts(8, 2, Family::monotone), resource_limit);
    EXPECT_THROW(dfs_transitive_counts(6, 30, Family::classical), resource_limit);
    EXPECT_THROW(count_all(3, -1, Family::monotone), invalid_argument);
}

TEST(Oracle, QueryDispatch)
{
    FactorQuery q{Partition{3}, std::nullopt, 2, true, true};
    EXPECT_EQ(count(q), 4);
    q.monotone = false;
    EXPECT_EQ(count(q), 6);
    q.beta = Partition{3};
    q.r = 0;
    EXPECT_EQ(count(q), 2); // rho any 3-cycle, sigma = rho^{-1}
    q.beta = Partition{2, 1};
    EXPECT_THROW(count(FactorQuery{Partition{3}, Partition{2}, 0, true, true}), invalid_argument);
}

#include <gtest/gtest.h>

#include <random>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/polynomial.hpp"

using namespace hurwitz;

TEST(Rat, CanonicalForm)
{
    Rat r = make_rat(6, -4);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(make_rat(10, 5)), "2");
    EXPECT_THROW(make_rat(1, 0), invalid_argument);
}

TEST(Rat, ParseRoundTrip)
{
    for (const char* s : {"0", "-7", "3/4", "-12/5", "1234567890123456789012345678901/2"})
        EXPECT_EQ(to_string(parse_rat(s)), s);
    EXPECT_EQ(parse_rat("+6/4"), make_rat(3, 2));
    EXPECT_THROW(parse_rat("1/-2"), invalid_argument);
    EXPECT_THROW(parse_rat("x"), invalid_argument);
    EXPECT_THROW(parse_rat("1/"), invalid_argument);
    EXPECT_THROW(parse_rat("1/0"), invalid_argument);
}

TEST(Partition, Basics)
{
    Partition p{2, 3, 1, 2};
    EXPECT_EQ(p.str(), "(3,2,2,1)");
    EXPECT_EQ(p.size(), 8);
    EXPECT_EQ(p.length(), 4);
    EXPECT_EQ(p.multiplicity(2), 2);
    EXPECT_EQ(p.without(2).str(), "(3,2,1)");
    EXPECT_EQ(p.with(5).str(), "(5,3,2,2,1)");
    EXPECT_THROW(p.without(4), invalid_argument);
    EXPECT_THROW(Partition({0, 1}), invalid_argument);
    EXPECT_TRUE(Partition({2, 1}).divides(p));
    EXPECT_FALSE(Partition({1, 1}).divides(p));
    Partition empty;
    EXPECT_EQ(empty.size(), 0);
    EXPECT_EQ(empty.length(), 0);
    EXPECT_EQ(aut_order(empty), 1);
}

TEST(Partition, Enumeration)
{
    std::vector<std::size_t> counts;
    for (int d = 0; d <= 10; ++d)
        counts.push_back(partitions_of(d).size());
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    EXPECT_EQ(partitions_with_length(6, 2).size(), 3u);
    EXPECT_EQ(partitions_in_box(2, 3).size(), 6u);
    for (const auto& p : partitions_in_box(3, 4)) {
        EXPECT_EQ(p.length(), 3);
        EXPECT_LE(p.largest(), 4);
    }
}

TEST(Partition, Parse)
{
    EXPECT_EQ(parse_partition("1,3,2"), Partition({3, 2, 1}));
    EXPECT_EQ(parse_partition(" 4 "), Partition({4}));
    EXPECT_TRUE(parse_partition("").empty());
    for (const char* bad : {"3,", ",3", "3,,1", "0", "-1", "a", "3;1"})
        EXPECT_THROW(parse_partition(bad), invalid_argument) << bad;
}

TEST(Combinatorics, AutOrder)
{
    EXPECT_EQ(aut_order({1, 1}), 2);
    EXPECT_EQ(aut_order({3, 2, 2, 1}), 2);
    EXPECT_EQ(aut_order({2, 2, 2}), 6);
}

TEST(Combinatorics, Rising)
{
    EXPECT_EQ(rising(5, 2), 30);
    EXPECT_EQ(rising(3, -2), make_rat(1, 2));
    EXPECT_EQ(rising(7, 0), 1);
    EXPECT_THROW(rising(2, -2), invalid_argument);
    for (int a = -3; a <= 6; ++a)
        for (int k = -2; k <= 3; ++k)
            for (int m = -2; m <= 3; ++m) {
                Rat lhs, rhs;
                try {
                    lhs = rising(a, k) * rising(Rat(a + k), m);
                    rhs = rising(a, k + m);
                } catch (const invalid_argument&) {
                    continue;
                }
                EXPECT_EQ(lhs, rhs) << a << " " << k << " " << m;
            }
    for (int a = 4; a <= 9; ++a)
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(rising(a, -k) * rising(Rat(a - k), k), 1);
}

TEST(Combinatorics, CentralBinomial)
{
    EXPECT_EQ(central_binomial(0), 1);
    EXPECT_EQ(central_binomial(1), 2);
    EXPECT_EQ(central_binomial(4), 70);
}

TEST(Combinatorics, ElemSymShifted)
{
    EXPECT_EQ(elem_sym_shifted({1, 1}, 2), 9);
    EXPECT_EQ(elem_sym_shifted({2, 1}, 1), 8);
    EXPECT_EQ(elem_sym_shifted({4, 2, 1}, 0), 1);
    EXPECT_THROW(elem_sym_shifted({2, 1}, 3), invalid_argument);
    // generating polynomial prod (1 + (2a+1) x)
    for (int d = 1; d <= 8; ++d)
        for (const auto& alpha : partitions_of(d)) {
            std::vector<BigInt> prod{1};
            for (int a : alpha) {
                std::vector<BigInt> next(prod.size() + 1, 0);
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    next[i] += prod[i];
                    next[i + 1] += prod[i] * (2 * a + 1);
                }
                prod = std::move(next);
            }
            for (int k = 0; k <= alpha.length(); ++k)
                EXPECT_EQ(elem_sym_shifted(alpha, k), prod[k]);
        }
}

TEST(Combinatorics, Bernoulli)
{
    EXPECT_EQ(bernoulli(2), make_rat(1, 6));
    EXPECT_EQ(bernoulli(4), make_rat(-1, 30));
    EXPECT_EQ(bernoulli(12), make_rat(-691, 2730));
    EXPECT_THROW(bernoulli(3), invalid_argument);
    EXPECT_THROW(bernoulli(0), invalid_argument);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_0 = 1, B_1 = -1/2, odd B_j = 0
    auto b = [](int j) -> Rat {
        if (j == 0)
            return 1;
        if (j == 1)
            return make_rat(-1, 2);
        if (j % 2)
            return 0;
        return bernoulli(j);
    };
    for (int n = 1; n <= 16; ++n) {
        Rat s = 0;
        for (int j = 0; j <= n; ++j)
            s += Rat(binomial(n + 1, j)) * b(j);
        EXPECT_EQ(s, 0) << n;
    }
}

TEST(Polynomial, InterpolateSquare)
{
    std::vector<InterpolationPoint> pts{{{1}, 1}, {{2}, 4}, {{3}, 9}};
    auto p = interpolate(pts, 2);
    PolynomialQ expect(1);
    expect.add_term({2}, 1);
    EXPECT_EQ(p, expect);
}

TEST(Polynomial, InterpolateConstantAndMultivariate)
{
    std::vector<InterpolationPoint> pts{{{1}, 5}, {{2}, 5}, {{7}, 5}};
    EXPECT_EQ(interpolate(pts, 0), PolynomialQ::constant(1, 5));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    PolynomialQ target(2);
    for (const auto& e : monomials_up_to(2, 3))
        target.add_term(e, coef(rng));
    std::vector<InterpolationPoint> samples;
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            std::vector<Rat> pt{x, y};
            samples.push_back({pt, target.evaluate(std::span<const Rat>(pt))});
        }
    EXPECT_EQ(interpolate(samples, 3), target);
}

TEST(Polynomial, InterpolationErrors)
{
    std::vector<InterpolationPoint> pts{{{1}, 1}, {{1}, 2}};
    EXPECT_THROW(interpolate(pts, 1), inconsistent_system);
    std::vector<InterpolationPoint> few{{{1}, 1}, {{1}, 1}};
    EXPECT_THROW(interpolate(few, 1), singular_system);
    std::vector<InterpolationPoint> line{{{1}, 1}, {{2}, 2}, {{3}, 4}};
    EXPECT_THROW(interpolate(line, 1), inconsistent_system);
}

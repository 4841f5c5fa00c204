#include <gtest/gtest.h>

#include "hurwitz/evaluator.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

Rat oracle_value(const Partition& alpha, int g, Family family)
{
    return Rat(oracle::count_transitive(alpha, transposition_count(g, alpha.size(), alpha.length()), family));
}

} // namespace

TEST(ClosedForms, MonotoneGenusZeroExamples)
{
    EXPECT_EQ(monotone_genus0(Partition{1}), 1);
    EXPECT_EQ(monotone_genus0(Partition{3}), 4);
    EXPECT_EQ(monotone_genus0(Partition{2, 2}), 54);
    EXPECT_THROW(monotone_genus0(Partition{}), invalid_argument);
}

TEST(ClosedForms, MonotoneGenusOneExamples)
{
    EXPECT_EQ(monotone_genus1(Partition{1}), 0);
    EXPECT_EQ(monotone_genus1(Partition{2}), 1);
    EXPECT_EQ(monotone_genus1(Partition{1, 1}), 1);
}

TEST(ClosedForms, ClassicalExamples)
{
    EXPECT_EQ(classical_genus0(Partition{3}), 6);
    EXPECT_EQ(classical_genus0(Partition{2, 2}), 288);
    EXPECT_EQ(classical_genus1(Partition{3}), 54);
}

TEST(ClosedForms, MonotoneAgainstOracle)
{
    for (int d = 1; d <= 6; ++d)
        for (const auto& alpha : partitions_of(d)) {
            if (transposition_count(0, d, alpha.length()) <= oracle::kMaxLengthDP)
                EXPECT_EQ(monotone_genus0(alpha), oracle_value(alpha, 0, Family::monotone)) << alpha.str();
            if (transposition_count(1, d, alpha.length()) <= oracle::kMaxLengthDP)
                EXPECT_EQ(monotone_genus1(alpha), oracle_value(alpha, 1, Family::monotone)) << alpha.str();
        }
}

TEST(ClosedForms, ClassicalAgainstOracle)
{
    for (int d = 1; d <= 5; ++d)
        for (const auto& alpha : partitions_of(d)) {
            EXPECT_EQ(classical_genus0(alpha), oracle_value(alpha, 0, Family::classical)) << alpha.str();
            EXPECT_EQ(classical_genus1(alpha), oracle_value(alpha, 1, Family::classical)) << alpha.str();
        }
}

TEST(ClosedForms, SingleCycle)
{
    EXPECT_EQ(mn_single_cycle(1, 2), 1);
    EXPECT_EQ(mn_single_cycle(2, 2), 1);
    for (int g = 1; g <= 4; ++g)
        EXPECT_EQ(mn_single_cycle(g, 1), 0);
    for (int g = 1; g <= 3; ++g)
        for (int d = 1; d <= 5; ++d) {
            EXPECT_EQ(mn_single_cycle(g, d), oracle_value(Partition{d}, g, Family::monotone)) << g << " " << d;
            EXPECT_EQ(mn_single_cycle(g, d), evaluate({Family::monotone, g, Partition{d}, Method::lagrange}).value);
        }
    EXPECT_THROW(mn_single_cycle(0, 2), invalid_argument);
    EXPECT_THROW(mn_single_cycle(1, 0), invalid_argument);
}

TEST(ClosedForms, BernoulliConstants)
{
    EXPECT_EQ(bernoulli_constant(2), Rat(1, 240));
    EXPECT_EQ(bernoulli_constant(3), Rat(-1, 1008));
    EXPECT_EQ(bernoulli_constant(4), Rat(1, 1440));
    EXPECT_THROW(bernoulli_constant(1), invalid_argument);
}

TEST(ClosedForms, Scaling)
{
    const auto tables = load_reference_tables();
    const auto e2 = scaling_entries(pipeline_rational_form(2), tables.get(Family::classical, 2).form());
    ASSERT_EQ(e2.size(), 3u);
    for (const auto& e : e2)
        EXPECT_TRUE(e.holds) << e.alpha.str();
    const Partition three{3};
    const auto it = std::find_if(e2.begin(), e2.end(), [&](const ScalingEntry& e) { return e.alpha == three; });
    ASSERT_NE(it, e2.end());
    EXPECT_EQ(it->monotone, make_rat(5, 720));
    EXPECT_EQ(it->classical, make_rat(5, 8 * 720));
    EXPECT_TRUE(scaling_check(2, tables));
    EXPECT_TRUE(scaling_check(3, tables));
    const auto e3 = scaling_entries(pipeline_rational_form(3), tables.get(Family::classical, 3).form());
    EXPECT_EQ(e3.size(), 11u);
    EXPECT_THROW(scaling_check(4, tables), invalid_argument);
    EXPECT_THROW(scaling_check(1, tables), invalid_argument);
}

TEST(ClosedForms, ScalingDetectsDisagreement)
{
    const auto tables = load_reference_tables();
    RationalForm bent = tables.get(Family::classical, 2).form();
    bent.terms[Partition{3}] += Rat(1, 1000);
    const auto entries = scaling_entries(pipeline_rational_form(2), bent);
    EXPECT_FALSE(std::all_of(entries.begin(), entries.end(), [](const ScalingEntry& e) { return e.holds; }));
}

TEST(ClosedForms, PolynomialityExamples)
{
    auto source = [](int g) { return [g](const Partition& a) { return checks::polynomiality_source(g, a); }; };

    const auto p03 = polynomiality_extract(0, 3, partitions_in_box(3, 6), source(0));
    EXPECT_EQ(p03.degree, 0);
    EXPECT_EQ(p03.polynomial, PolynomialQ::constant(3, 1));
    EXPECT_GE(p03.held_out, 3);

    const auto p11 = polynomiality_extract(1, 1, partitions_in_box(1, 8), source(1));
    PolynomialQ expect(1);
    expect.add_term({1}, Rat(1, 12));
    expect.add_term({0}, Rat(-1, 12));
    EXPECT_EQ(p11.polynomial, expect);

    const auto p21 = polynomiality_extract(2, 1, partitions_in_box(1, 8), source(2));
    EXPECT_EQ(p21.polynomial.evaluate(std::vector<int>{2}), Rat(1, 12));
    EXPECT_EQ(polynomiality_value(evaluate({Family::monotone, 2, Partition{2}, Method::oracle}).value, Partition{2}),
              Rat(1, 12));
}

TEST(ClosedForms, PolynomialityEmpiricalDegree)
{
    const std::vector<std::pair<int, int>> cases{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (auto [g, l] : cases) {
        const auto fit = polynomiality_extract(g, l, partitions_in_box(l, 8),
                                               [g](const Partition& a) { return checks::polynomiality_source(g, a); });
        EXPECT_EQ(fit.degree, 3 * g - 3 + l) << g << " " << l;
        EXPECT_EQ(fit.polynomial.total_degree(), fit.degree);
    }
}

TEST(ClosedForms, PolynomialityErrors)
{
    auto source = [](const Partition& a) { return monotone_genus0(a); };
    EXPECT_THROW(polynomiality_extract(0, 2, partitions_in_box(2, 5), source), invalid_argument);
    EXPECT_THROW(polynomiality_extract(0, 1, partitions_in_box(1, 5), source), invalid_argument);
    EXPECT_THROW(polynomiality_extract(0, 3, {Partition{1, 1, 1}, Partition{2, 1, 1}}, source), invalid_argument);
    EXPECT_THROW(polynomiality_extract(0, 3, {Partition{2, 1}}, source), invalid_argument);
    // too few points for the degree that is needed
    const std::vector<Partition> few{Partition{1}, Partition{2}, Partition{3}, Partition{4}};
    EXPECT_THROW(polynomiality_extract(2, 1, few, [](const Partition& a) { return checks::polynomiality_source(2, a); }),
                 invalid_argument);
    // a value that is not polynomial fails verification
    auto noisy = [](const Partition& a) { return monotone_genus0(a) * (a[0] == 7 ? Rat(2) : Rat(1)); };
    EXPECT_THROW(polynomiality_extract(0, 3, partitions_in_box(3, 7), noisy, 2), verification_failure);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hurwitz/tables.hpp"

using namespace hurwitz;

namespace {

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

const char* kMinimal = R"({"format": "hurwitz-reference-forms/1", "forms": [
  {"family": "monotone", "genus": 2, "scale": "1/720", "constant": "-3",
   "terms": [{"alpha": [], "coeff": "3"}, {"alpha": [1], "coeff": "-5"}]}]})";

} // namespace

TEST(Tables, LoadsCheckedInForms)
{
    const auto t = load_reference_tables();
    EXPECT_EQ(t.forms().size(), 4u);
    for (auto family : {Family::monotone, Family::classical})
        for (int g = 2; g <= 3; ++g)
            EXPECT_TRUE(t.has(family, g));
    EXPECT_FALSE(t.has(Family::monotone, 4));
    EXPECT_THROW(t.get(Family::monotone, 4), invalid_argument);

    const auto& m2 = t.get(Family::monotone, 2);
    EXPECT_EQ(m2.scale, Rat(1, 720));
    EXPECT_EQ(m2.unscaled.constant, -3);
    EXPECT_EQ(m2.unscaled.terms.size(), 7u);
    EXPECT_EQ(m2.form().coeff(Partition{2, 1}), Rat(29, 720));

    const auto& m3 = t.get(Family::monotone, 3);
    EXPECT_EQ(m3.unscaled.constant, 90);
    EXPECT_EQ(m3.unscaled.coeff({}), -90);
    EXPECT_EQ(m3.unscaled.terms.size(), 30u);
    EXPECT_EQ(m3.form().constant, Rat(4 * 90) / Rat(factorial(9)));

    EXPECT_EQ(t.get(Family::classical, 2).unscaled.terms.size(), 6u);
    EXPECT_EQ(t.get(Family::classical, 3).unscaled.terms.size(), 26u);
}

TEST(Tables, ClassicalGenusThreeErratum)
{
    const auto tables = load_reference_tables();
    const auto& c3 = tables.get(Family::classical, 3);
    ASSERT_EQ(c3.errata.size(), 1u);
    EXPECT_EQ(c3.errata[0].alpha, (Partition{4, 1}));
    EXPECT_EQ(c3.errata[0].published, 2418);
    EXPECT_EQ(c3.errata[0].corrected, -3876);
    EXPECT_EQ(c3.unscaled.coeff(Partition{4, 1}), -3876);
}

TEST(Tables, ParsesMinimalDocument)
{
    const auto t = load_reference_tables(write_temp("hurwitz_minimal.json", kMinimal));
    ASSERT_EQ(t.forms().size(), 1u);
    EXPECT_EQ(t.get(Family::monotone, 2).form().coeff(Partition{1}), make_rat(-5, 720));
}

TEST(Tables, RejectsMalformedInput)
{
    EXPECT_THROW(load_reference_tables("/nonexistent/forms.json"), invalid_argument);
    EXPECT_THROW(load_reference_tables(write_temp("hurwitz_bad.json", "{not json")), invalid_argument);
    using nlohmann::json;
    EXPECT_THROW(parse_reference_tables(json::parse(R"({"format": "other", "forms": []})")), invalid_argument);
    EXPECT_THROW(parse_reference_tables(json::parse(R"({"format": "hurwitz-reference-forms/1"})")), invalid_argument);

    auto doc = json::parse(kMinimal);
    doc["forms"][0]["family"] = "double";
    EXPECT_THROW(parse_reference_tables(doc), invalid_argument);

    doc = json::parse(kMinimal);
    doc["forms"][0]["genus"] = 1;
    EXPECT_THROW(parse_reference_tables(doc), invalid_argument);

    doc = json::parse(kMinimal);
    doc["forms"][0]["terms"].push_back({{"alpha", {1}}, {"coeff", "1"}});
    EXPECT_THROW(parse_reference_tables(doc), invalid_argument);

    doc = json::parse(kMinimal);
    doc["forms"][0]["constant"] = "1/0";
    EXPECT_THROW(parse_reference_tables(doc), error);

    doc = json::parse(kMinimal);
    doc["forms"][0]["errata"] = {{{"alpha", {1}}, {"published", "5"}, {"coeff", "7"}}};
    EXPECT_THROW(parse_reference_tables(doc), invalid_argument);

    doc = json::parse(kMinimal);
    doc["forms"][0].erase("scale");
    EXPECT_THROW(parse_reference_tables(doc), invalid_argument);
}

TEST(Tables, EnvironmentOverride)
{
    const std::string path = write_temp("hurwitz_env.json", kMinimal);
    ASSERT_EQ(setenv("HURWITZ_TABLES", path.c_str(), 1), 0);
    EXPECT_EQ(default_tables_path(), path);
    EXPECT_EQ(load_reference_tables().forms().size(), 1u);
    unsetenv("HURWITZ_TABLES");
    EXPECT_EQ(default_tables_path(), HURWITZ_DEFAULT_TABLES);
}

#pragma once

// Published genus 2 and 3 rational forms, loaded from a JSON data file.
//
// File layout:
//   {"format": "hurwitz-reference-forms/1",
//    "forms": [{"family": "monotone" | "classical", "genus": g,
//               "scale": "n/d", "constant": "n/d",
//               "terms": [{"alpha": [parts...], "coeff": "n/d"}, ...],
//               "errata": [{"alpha": [...], "published": "n/d", "coeff": "n/d", "note": "..."}]}, ...]}
// Terms hold the values in use; an erratum records a published coefficient
// that was replaced, and must agree with the corresponding term.
// A form denotes scale * (constant + sum coeff x_alpha (1 - x)^{-(l(alpha) + 2g - 2)}).
// The path is taken from HURWITZ_TABLES when set.

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries.hpp"

#ifndef HURWITZ_DEFAULT_TABLES
#define HURWITZ_DEFAULT_TABLES "data/reference_forms.json"
#endif

namespace hurwitz {

inline constexpr const char* kTablesFormat = "hurwitz-reference-forms/1";

struct Erratum {
    Partition alpha;
    Rat published;
    Rat corrected;
    std::string note;
};

struct ReferenceForm {
    Family family = Family::monotone;
    int genus = 0;
    Rat scale = 1;
    RationalForm unscaled; // coefficients before scaling, errata applied
    std::vector<Erratum> errata;

    /// Coefficients with the scale multiplied in.
    RationalForm form() const
    {
        RationalForm f = unscaled;
        f.constant *= scale;
        for (auto& [alpha, c] : f.terms)
            c *= scale;
        return f;
    }
};

class ReferenceTables {
public:
    ReferenceTables() = default;
    explicit ReferenceTables(std::vector<ReferenceForm> forms) : forms_(std::move(forms)) {}

    const std::vector<ReferenceForm>& forms() const noexcept { return forms_; }

    const ReferenceForm& get(Family family, int genus) const
    {
        for (const auto& f : forms_)
            if (f.family == family && f.genus == genus)
                return f;
        throw invalid_argument("no reference " + to_string(family) + " form for genus " + std::to_string(genus));
    }

    bool has(Family family, int genus) const
    {
        for (const auto& f : forms_)
            if (f.family == family && f.genus == genus)
                return true;
        return false;
    }

private:
    std::vector<ReferenceForm> forms_;
};

inline std::string default_tables_path()
{
    if (const char* env = std::getenv("HURWITZ_TABLES"); env && *env)
        return env;
    return HURWITZ_DEFAULT_TABLES;
}

inline ReferenceTables parse_reference_tables(const nlohmann::json& doc)
{
    auto fail = [](const std::string& what) { return invalid_argument("reference tables: " + what); };
    if (!doc.is_object() || doc.value("format", "") != kTablesFormat)
        throw fail(std::string("expected format '") + kTablesFormat + "'");
    if (!doc.contains("forms") || !doc["forms"].is_array())
        throw fail("missing 'forms' array");
    std::vector<ReferenceForm> out;
    for (const auto& jf : doc["forms"]) {
        try {
            ReferenceForm f;
            const std::string fam = jf.at("family").get<std::string>();
            if (fam == "monotone")
                f.family = Family::monotone;
            else if (fam == "classical")
                f.family = Family::classical;
            else
                throw fail("unknown family '" + fam + "'");
            f.genus = jf.at("genus").get<int>();
            if (f.genus < 2)
                throw fail("genus must be >= 2");
            f.scale = parse_rat(jf.at("scale").get<std::string>());
            f.unscaled.family = f.family;
            f.unscaled.genus = f.genus;
            f.unscaled.constant = parse_rat(jf.at("constant").get<std::string>());
            for (const auto& jt : jf.at("terms")) {
                Partition alpha(jt.at("alpha").get<std::vector<int>>());
                if (!f.unscaled.terms.emplace(alpha, parse_rat(jt.at("coeff").get<std::string>())).second)
                    throw fail("duplicate term " + alpha.str());
            }
            if (jf.contains("errata"))
                for (const auto& je : jf.at("errata")) {
                    Erratum e{Partition(je.at("alpha").get<std::vector<int>>()),
                              parse_rat(je.at("published").get<std::string>()),
                              parse_rat(je.at("coeff").get<std::string>()), je.value("note", "")};
                    if (f.unscaled.coeff(e.alpha) != e.corrected)
                        throw fail("erratum for " + e.alpha.str() + " disagrees with its term");
                    f.errata.push_back(std::move(e));
                }
            out.push_back(std::move(f));
        } catch (const nlohmann::json::exception& e) {
            throw fail(e.what());
        }
    }
    return ReferenceTables(std::move(out));
}

inline ReferenceTables load_reference_tables(const std::string& path = default_tables_path())
{
    std::ifstream in(path);
    if (!in)
        throw invalid_argument("cannot open reference tables at '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_argument("reference tables at '" + path + "': " + e.what());
    }
    return parse_reference_tables(doc);
}

} // namespace hurwitz

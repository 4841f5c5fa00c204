#pragma once

// One entry point for H_g(alpha) with a selectable method, and the bounds
// each method accepts.

#include <string>

#include "closed_forms.hpp"
#include "joincut.hpp"
#include "oracle.hpp"

namespace hurwitz {

enum class Method { automatic, oracle, joincut, closed_form, pipeline, lagrange };

inline std::string to_string(Method m)
{
    switch (m) {
    case Method::automatic:
        return "auto";
    case Method::oracle:
        return "oracle";
    case Method::joincut:
        return "joincut";
    case Method::closed_form:
        return "closed-form";
    case Method::pipeline:
        return "pipeline";
    case Method::lagrange:
        return "lagrange";
    }
    return "?";
}

inline Method parse_method(const std::string& s)
{
    for (Method m : {Method::automatic, Method::oracle, Method::joincut, Method::closed_form, Method::pipeline,
                     Method::lagrange})
        if (to_string(m) == s)
            return m;
    throw invalid_argument("unknown method '" + s + "'");
}

inline constexpr int kMaxDegreeJoinCut = 16;
inline constexpr int kMaxLengthJoinCut = 48;
inline constexpr int kMaxGenusPipeline = 8;
inline constexpr int kMaxDegreePipeline = 40;
inline constexpr int kMaxDegreeSubstitution = 12;

struct HurwitzQuery {
    Family family = Family::monotone;
    int genus = 0;
    Partition alpha;
    Method method = Method::automatic;
};

struct Evaluation {
    Rat value;
    Method method = Method::automatic; // the method actually used
};

namespace detail {

inline void bound(bool ok, const std::string& what)
{
    if (!ok)
        throw resource_limit(what);
}

inline Method choose_method(const HurwitzQuery& q, const ReferenceTables* tables)
{
    if (q.genus <= 1)
        return Method::closed_form;
    if (q.family == Family::monotone)
        return Method::pipeline;
    if (tables && tables->has(Family::classical, q.genus))
        return Method::closed_form;
    return Method::joincut;
}

} // namespace detail

/// H_g(alpha). Throws resource_limit when the method cannot reach the query
/// and invalid_argument when the method does not apply to it.
inline Evaluation evaluate(const HurwitzQuery& q, const ReferenceTables* tables = nullptr)
{
    detail::require(q.genus >= 0, "genus must be >= 0");
    detail::require(q.alpha.size() >= 1, "partition must be nonempty");
    const int d = q.alpha.size();
    const int r = transposition_count(q.genus, d, q.alpha.length());
    const Method m = q.method == Method::automatic ? detail::choose_method(q, tables) : q.method;
    const bool mono = q.family == Family::monotone;
    switch (m) {
    case Method::oracle:
        detail::bound(d <= oracle::kMaxDegreeDP, "oracle: degree " + std::to_string(d) + " exceeds the bound d <= " +
                                                     std::to_string(oracle::kMaxDegreeDP));
        detail::bound(r <= oracle::kMaxLengthDP, "oracle: r = " + std::to_string(r) + " exceeds the bound r <= " +
                                                     std::to_string(oracle::kMaxLengthDP));
        return {Rat(oracle::count_transitive(q.alpha, r, q.family)), m};
    case Method::joincut:
        detail::bound(d <= kMaxDegreeJoinCut, "joincut: degree " + std::to_string(d) + " exceeds the bound d <= " +
                                                  std::to_string(kMaxDegreeJoinCut));
        detail::bound(r <= kMaxLengthJoinCut, "joincut: r = " + std::to_string(r) + " exceeds the bound r <= " +
                                                  std::to_string(kMaxLengthJoinCut));
        return {solve(q.family, d, r).at(q.alpha, r), m};
    case Method::closed_form:
        if (q.genus == 0)
            return {mono ? monotone_genus0(q.alpha) : classical_genus0(q.alpha), m};
        if (q.genus == 1)
            return {mono ? monotone_genus1(q.alpha) : classical_genus1(q.alpha), m};
        if (!tables || !tables->has(q.family, q.genus))
            throw invalid_argument("closed-form: no " + to_string(q.family) + " formula or table for genus " +
                                   std::to_string(q.genus));
        detail::bound(d <= kMaxDegreePipeline, "closed-form: degree " + std::to_string(d) +
                                                   " exceeds the bound d <= " + std::to_string(kMaxDegreePipeline));
        return {evaluate_form(tables->get(q.family, q.genus).form(), q.alpha), m};
    case Method::pipeline:
    case Method::lagrange: {
        if (!mono)
            throw invalid_argument(to_string(m) + ": only monotone numbers come from the operator pipeline");
        if (q.genus == 0)
            throw invalid_argument(to_string(m) + ": genus 0 has no pipeline form; use closed-form");
        detail::bound(q.genus <= kMaxGenusPipeline, to_string(m) + ": genus " + std::to_string(q.genus) +
                                                        " exceeds the bound g <= " +
                                                        std::to_string(kMaxGenusPipeline));
        const int dmax = m == Method::pipeline ? kMaxDegreePipeline : kMaxDegreeSubstitution;
        detail::bound(d <= dmax, to_string(m) + ": degree " + std::to_string(d) + " exceeds the bound d <= " +
                                     std::to_string(dmax));
        if (m == Method::pipeline)
            return {q.genus == 1 ? evaluate_log_form(genus1_closed(), q.alpha)
                                 : evaluate_form(pipeline_rational_form(q.genus), q.alpha),
                    m};
        const Truncation t = Truncation::for_coefficient(q.alpha);
        const MSeries f = q.genus == 1 ? expand_log_form(genus1_closed(), t)
                                       : expand_rational_form(pipeline_rational_form(q.genus), t);
        return {hurwitz_from_coefficient(extract_by_substitution(f, q.alpha, Family::monotone), q.alpha, q.genus,
                                         Family::monotone),
                m};
    }
    case Method::automatic:
        break;
    }
    throw invalid_argument("no method");
}

} // namespace hurwitz

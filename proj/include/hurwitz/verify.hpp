#pragma once

// Named cross-checks between the independent computation paths, grouped into
// suites. Every check compares exact rationals and reports the mismatches.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "evaluator.hpp"

namespace hurwitz {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Check {
    std::string name;
    std::string suite;
    std::function<CheckResult()> run;
};

namespace detail {

/// Collects exact comparisons and renders a short diff report.
class Diff {
public:
    explicit Diff(std::string name) : name_(std::move(name)) {}

    template <class A, class B>
    void compare(const std::string& where, const A& expected, const B& actual)
    {
        ++count_;
        if (Rat(expected) == Rat(actual))
            return;
        if (mismatches_++ < kShown)
            lines_ << "\n  " << where << ": expected " << to_string(Rat(expected)) << ", got "
                   << to_string(Rat(actual));
    }

    void expect(const std::string& where, bool ok)
    {
        ++count_;
        if (ok)
            return;
        if (mismatches_++ < kShown)
            lines_ << "\n  " << where;
    }

    void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

    CheckResult result() const
    {
        CheckResult r{name_, mismatches_ == 0, {}, 0};
        std::ostringstream os;
        if (mismatches_ == 0)
            os << count_ << " comparisons agree";
        else
            os << mismatches_ << " of " << count_ << " comparisons differ" << lines_.str();
        if (!notes_.empty())
            os << " (" << notes_ << ")";
        r.detail = os.str();
        return r;
    }

private:
    static constexpr int kShown = 8;
    std::string name_;
    std::string notes_;
    std::ostringstream lines_;
    int count_ = 0;
    int mismatches_ = 0;
};

inline std::string where(const Partition& alpha, int r)
{
    return "alpha=" + alpha.str() + " r=" + std::to_string(r);
}

inline std::string where_g(const Partition& alpha, int g)
{
    return "alpha=" + alpha.str() + " g=" + std::to_string(g);
}

template <class F>
CheckResult guarded(const std::string& name, F&& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {name, false, std::string("error: ") + e.what(), 0};
    }
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline void compare_tables(Diff& diff, const oracle::CountTable& a, const oracle::CountTable& b, int max_degree,
                           int max_r)
{
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& alpha : partitions_of(d))
            for (int r = 0; r <= max_r; ++r)
                diff.compare(where(alpha, r), a.at(alpha, r), b.at(alpha, r));
}

} // namespace detail

namespace checks {

/// DFS enumeration against the dynamic program, monotone, d <= 5, r <= 8.
inline CheckResult oracle_dfs_vs_dp()
{
    detail::Diff diff("oracle.dfs-vs-dp");
    const auto dp = oracle::transitive_counts(5, 8, Family::monotone);
    for (int d = 1; d <= 5; ++d) {
        const auto dfs = oracle::dfs_transitive_counts(d, 8, Family::monotone);
        for (const auto& alpha : partitions_of(d))
            for (int r = 0; r <= 8; ++r)
                diff.compare(detail::where(alpha, r), dfs.at(alpha, r), dp.at(alpha, r));
    }
    return diff.result();
}

/// Join-cut tables against the oracle: monotone d <= 6, r <= 10; classical d <= 5, r <= 8.
inline CheckResult joincut_vs_oracle()
{
    detail::Diff diff("joincut.vs-oracle");
    struct Range {
        Family family;
        int d, r;
    };
    for (auto [family, D, R] : {Range{Family::monotone, 6, 10}, Range{Family::classical, 5, 8}}) {
        const auto jc = solve(family, D, R);
        const auto orc = oracle::transitive_counts(D, R, family);
        for (int d = 1; d <= D; ++d)
            for (const auto& alpha : partitions_of(d))
                for (int r = 0; r <= R; ++r)
                    diff.compare(to_string(family) + " " + detail::where(alpha, r), orc.at(alpha, r),
                                 jc.at(alpha, r));
    }
    return diff.result();
}

/// Monotone genus-0 formula against the join-cut genus-0 slice, d <= 8.
inline CheckResult closed_genus0()
{
    detail::Diff diff("closed.genus0");
    const auto jc = solve_through_genus(Family::monotone, 8, 0);
    for (int d = 1; d <= 8; ++d)
        for (const auto& alpha : partitions_of(d))
            diff.compare(detail::where_g(alpha, 0), jc.genus(alpha, 0), monotone_genus0(alpha));
    return diff.result();
}

/// Monotone genus-1 formula and log form against the join-cut genus-1 slice, d <= 6.
inline CheckResult closed_genus1()
{
    detail::Diff diff("closed.genus1");
    const auto jc = solve_through_genus(Family::monotone, 6, 1);
    for (int d = 1; d <= 6; ++d)
        for (const auto& alpha : partitions_of(d)) {
            diff.compare("formula " + detail::where_g(alpha, 1), jc.genus(alpha, 1), monotone_genus1(alpha));
            diff.compare("log form " + detail::where_g(alpha, 1), jc.genus(alpha, 1),
                         evaluate_log_form(genus1_closed(), alpha));
        }
    return diff.result();
}

/// Classical genus-0 and genus-1 formulas against classical join-cut, d <= 7.
inline CheckResult closed_classical()
{
    detail::Diff diff("closed.classical");
    const auto jc = solve_through_genus(Family::classical, 7, 1);
    for (int d = 1; d <= 7; ++d)
        for (const auto& alpha : partitions_of(d)) {
            diff.compare(detail::where_g(alpha, 0), jc.genus(alpha, 0), classical_genus0(alpha));
            diff.compare(detail::where_g(alpha, 1), jc.genus(alpha, 1), classical_genus1(alpha));
        }
    return diff.result();
}

/// Single-cycle formula against pipeline + Lagrange (g <= 3, d <= 6) and the oracle (d <= 5).
inline CheckResult single_cycle()
{
    detail::Diff diff("closed.single-cycle");
    for (int g = 1; g <= 3; ++g)
        for (int d = 1; d <= 6; ++d) {
            const Partition alpha{d};
            const Rat mn = mn_single_cycle(g, d);
            const Rat pipe = evaluate({Family::monotone, g, alpha, Method::pipeline}).value;
            diff.compare("pipeline " + detail::where_g(alpha, g), pipe, mn);
            const Rat lift = evaluate({Family::monotone, g, alpha, Method::lagrange}).value;
            diff.compare("lagrange " + detail::where_g(alpha, g), lift, mn);
            if (d <= 5)
                diff.compare("oracle " + detail::where_g(alpha, g),
                             oracle::count_transitive(alpha, transposition_count(g, d, 1), Family::monotone), mn);
        }
    return diff.result();
}

inline CheckResult pipeline_table(int g, const ReferenceTables& tables)
{
    detail::Diff diff("pipeline.genus" + std::to_string(g) + "-table");
    const auto& ref = tables.get(Family::monotone, g);
    const RationalForm pipe = pipeline_rational_form(g);
    // compare in the published normalisation
    const Rat unscale = 1 / ref.scale;
    diff.compare("constant", ref.unscaled.constant, pipe.constant * unscale);
    std::map<Partition, bool> seen;
    for (const auto& [alpha, c] : ref.unscaled.terms) {
        diff.compare("coefficient of " + alpha.str(), c, pipe.coeff(alpha) * unscale);
        seen[alpha] = true;
    }
    for (const auto& [alpha, c] : pipe.terms)
        if (!seen.count(alpha))
            diff.compare("coefficient of " + alpha.str(), 0, c * unscale);
    diff.note("scale " + to_string(ref.scale));
    return diff.result();
}

/// c_{g,(0)} = -B_{2g}/(2g(2g-2)) for g = 2..max_genus.
inline CheckResult bernoulli(int max_genus = 6)
{
    detail::Diff diff("bernoulli");
    for (int g = 2; g <= max_genus; ++g)
        diff.compare("g=" + std::to_string(g), bernoulli_constant(g), pipeline_rational_form(g).coeff({}));
    return diff.result();
}

/// c_{g,alpha} = 2^{3g-3} a_{g,alpha} for |alpha| = 3g - 3, g = 2, 3.
inline CheckResult scaling(const ReferenceTables& tables)
{
    detail::Diff diff("scaling");
    for (int g = 2; g <= 3; ++g) {
        const Rat factor(pow(BigInt(2), static_cast<unsigned long>(3 * g - 3)));
        for (const auto& e : scaling_entries(pipeline_rational_form(g), tables.get(Family::classical, g).form()))
            diff.compare(detail::where_g(e.alpha, g), e.monotone, factor * e.classical);
    }
    return diff.result();
}

/// Monotone H_g(alpha) as used for polynomiality: the genus-0 formula for g = 0,
/// pipeline forms with Lagrange extraction otherwise.
inline Rat polynomiality_source(int g, const Partition& alpha)
{
    if (g == 0)
        return monotone_genus0(alpha);
    return evaluate({Family::monotone, g, alpha, Method::pipeline}).value;
}

inline CheckResult polynomiality()
{
    detail::Diff diff("polynomiality");
    const std::vector<std::pair<int, int>> cases{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (auto [g, l] : cases) {
        const std::string tag = "P_{" + std::to_string(g) + "," + std::to_string(l) + "}";
        try {
            auto fit = polynomiality_extract(g, l, partitions_in_box(l, 8),
                                             [g](const Partition& a) { return polynomiality_source(g, a); });
            diff.expect(tag, fit.held_out >= 3);
            diff.note(tag + " degree " + std::to_string(fit.degree));
        } catch (const error& e) {
            diff.expect(tag + ": " + e.what(), false);
        }
    }
    return diff.result();
}

/// E_g in R_{3g-1}, F_{g,0} = 0, cond2 for g >= 2, and decompose/recompose inverse, g = 1..max_genus.
inline CheckResult pipeline_structure(int max_genus = 4)
{
    detail::Diff diff("pipeline.structure");
    GenusSolver solver;
    for (int g = 1; g <= max_genus; ++g) {
        const std::string tag = "g=" + std::to_string(g);
        try {
            const RElement& e = solver.normalized(g);
            diff.expect(tag + ": E_g not in R_" + std::to_string(3 * g - 1), e.in_R(3 * g - 1));
            const BasisDecomp b = decompose_basis(g, e);
            diff.expect(tag + ": F_0 != 0", b.F[0].is_zero());
            if (g >= 2)
                diff.expect(tag + ": cond2 fails", detail::cond2_residual(b).is_zero());
            diff.expect(tag + ": recompose differs", recompose(b) == e);
        } catch (const error& ex) {
            diff.expect(tag + ": " + ex.what(), false);
        }
    }
    return diff.result();
}

/// Pipeline forms for g = 2, 3 against join-cut on |alpha| <= 5.
inline CheckResult pipeline_vs_joincut()
{
    detail::Diff diff("pipeline.vs-joincut");
    const auto jc = solve_through_genus(Family::monotone, 5, 3);
    for (int g = 2; g <= 3; ++g)
        for (int d = 1; d <= 5; ++d)
            for (const auto& alpha : partitions_of(d))
                diff.compare(detail::where_g(alpha, g), jc.genus(alpha, g),
                             evaluate_form(pipeline_rational_form(g), alpha));
    return diff.result();
}

} // namespace checks

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"oracle-vs-joincut", "closed-forms", "pipeline", "bernoulli",
                                                "scaling", "polynomiality", "all"};
    return names;
}

/// The checks of a suite ("all" for every check), sorted by name.
inline std::vector<Check> suite_checks(const std::string& suite, const ReferenceTables& tables)
{
    auto g = [](std::string name, auto fn) {
        return [name, fn] { return detail::guarded(name, fn); };
    };
    const ReferenceTables* t = &tables;
    std::vector<Check> all{
        {"oracle.dfs-vs-dp", "oracle-vs-joincut", g("oracle.dfs-vs-dp", checks::oracle_dfs_vs_dp)},
        {"joincut.vs-oracle", "oracle-vs-joincut", g("joincut.vs-oracle", checks::joincut_vs_oracle)},
        {"closed.genus0", "closed-forms", g("closed.genus0", checks::closed_genus0)},
        {"closed.genus1", "closed-forms", g("closed.genus1", checks::closed_genus1)},
        {"closed.classical", "closed-forms", g("closed.classical", checks::closed_classical)},
        {"closed.single-cycle", "closed-forms", g("closed.single-cycle", checks::single_cycle)},
        {"pipeline.genus2-table", "pipeline", g("pipeline.genus2-table", [t] { return checks::pipeline_table(2, *t); })},
        {"pipeline.genus3-table", "pipeline", g("pipeline.genus3-table", [t] { return checks::pipeline_table(3, *t); })},
        {"pipeline.structure", "pipeline", g("pipeline.structure", [] { return checks::pipeline_structure(); })},
        {"pipeline.vs-joincut", "pipeline", g("pipeline.vs-joincut", checks::pipeline_vs_joincut)},
        {"bernoulli", "bernoulli", g("bernoulli", [] { return checks::bernoulli(); })},
        {"scaling", "scaling", g("scaling", [t] { return checks::scaling(*t); })},
        {"polynomiality", "polynomiality", g("polynomiality", checks::polynomiality)},
    };
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw invalid_argument("unknown suite '" + suite + "'");
    std::vector<Check> out;
    for (auto& c : all)
        if (suite == "all" || c.suite == suite)
            out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return out;
}

/// Runs checks with up to `jobs` in flight; results come back in the input order.
inline std::vector<CheckResult> run_checks(const std::vector<Check>& list, int jobs = 1)
{
    std::vector<CheckResult> out(list.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < list.size(); ++i)
            out[i] = list[i].run();
        return out;
    }
    std::vector<std::future<CheckResult>> pending;
    std::size_t next = 0, done = 0;
    std::vector<std::size_t> index;
    while (done < list.size()) {
        while (next < list.size() && static_cast<int>(pending.size()) < jobs) {
            pending.push_back(std::async(std::launch::async, list[next].run));
            index.push_back(next++);
        }
        out[index.front()] = pending.front().get();
        pending.erase(pending.begin());
        index.erase(index.begin());
        ++done;
    }
    return out;
}

} // namespace hurwitz

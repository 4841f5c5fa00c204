#pragma once

// The hurwitz command line: compute, table, rational-form, verify.
// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or a
// query outside the bounds of the chosen method.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/verify.hpp"

namespace hurwitz::cli {

using nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline ordered_json partition_json(const Partition& alpha)
{
    return ordered_json(alpha.parts());
}

inline std::string csv_partition(const Partition& alpha)
{
    return "\"" + alpha.str() + "\"";
}

inline ordered_json form_json(const RationalForm& f)
{
    ordered_json j;
    j["family"] = to_string(f.family);
    j["genus"] = f.genus;
    j["constant"] = to_string(f.constant);
    ordered_json terms = ordered_json::array();
    for (const auto& [alpha, c] : f.terms)
        terms.push_back({{"alpha", partition_json(alpha)}, {"coeff", to_string(c)}});
    j["terms"] = std::move(terms);
    return j;
}

/// Inverse of form_json.
inline RationalForm form_from_json(const ordered_json& j)
{
    RationalForm f;
    f.family = j.at("family").get<std::string>() == "classical" ? Family::classical : Family::monotone;
    f.genus = j.at("genus").get<int>();
    f.constant = parse_rat(j.at("constant").get<std::string>());
    for (const auto& t : j.at("terms"))
        f.terms.emplace(Partition(t.at("alpha").get<std::vector<int>>()), parse_rat(t.at("coeff").get<std::string>()));
    return f;
}

struct Options {
    int genus = 0;
    std::string partition;
    bool classical = false;
    std::string method = "auto";
    int max_degree = 6;
    std::string format = "json";
    int jobs = 1;
    std::string suite = "all";
    bool timing = false;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int compute(const Options& o)
    {
        HurwitzQuery q{o.classical ? Family::classical : Family::monotone, o.genus, parse_partition(o.partition),
                       parse_method(o.method)};
        const auto t0 = std::chrono::steady_clock::now();
        const Evaluation ev = evaluate(q, &tables());
        const double ms = elapsed_ms(t0);
        if (o.format == "json") {
            ordered_json j;
            j["command"] = "compute";
            j["method"] = to_string(ev.method);
            j["query"] = {{"family", to_string(q.family)}, {"genus", q.genus}, {"partition", partition_json(q.alpha)}};
            j["value"] = to_string(ev.value);
            if (o.timing)
                j["timing_ms"] = ms;
            out_ << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            out_ << "family,genus,partition,method,value\n"
                 << to_string(q.family) << "," << q.genus << "," << csv_partition(q.alpha) << ","
                 << to_string(ev.method) << "," << to_string(ev.value) << "\n";
        } else {
            out_ << (q.family == Family::monotone ? "monotone " : "classical ") << "H_" << q.genus << "("
                 << q.alpha.str() << ") = " << to_string(ev.value) << "  [" << to_string(ev.method) << "]\n";
        }
        return kExitOk;
    }

    int table(const Options& o)
    {
        detail::require(o.max_degree >= 1, "--max-degree must be >= 1");
        const Family family = o.classical ? Family::classical : Family::monotone;
        const Method method = parse_method(o.method);
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::pair<Partition, Evaluation>> rows;
        for (int d = 1; d <= o.max_degree; ++d)
            for (const auto& alpha : partitions_of(d))
                rows.emplace_back(alpha, evaluate({family, o.genus, alpha, method}, &tables()));
        const double ms = elapsed_ms(t0);
        if (o.format == "json") {
            ordered_json j;
            j["command"] = "table";
            j["query"] = {{"family", to_string(family)}, {"genus", o.genus}, {"max_degree", o.max_degree}};
            ordered_json arr = ordered_json::array();
            for (const auto& [alpha, ev] : rows)
                arr.push_back({{"partition", partition_json(alpha)},
                               {"method", to_string(ev.method)},
                               {"value", to_string(ev.value)}});
            j["rows"] = std::move(arr);
            if (o.timing)
                j["timing_ms"] = ms;
            out_ << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            out_ << "family,genus,partition,method,value\n";
            for (const auto& [alpha, ev] : rows)
                out_ << to_string(family) << "," << o.genus << "," << csv_partition(alpha) << ","
                     << to_string(ev.method) << "," << to_string(ev.value) << "\n";
        } else {
            for (const auto& [alpha, ev] : rows)
                out_ << "H_" << o.genus << "(" << alpha.str() << ") = " << to_string(ev.value) << "\n";
        }
        return kExitOk;
    }

    int rational_form(const Options& o)
    {
        if (o.genus < 1)
            throw invalid_argument("rational-form: genus must be >= 1 (genus 0 has no rational form)");
        const auto t0 = std::chrono::steady_clock::now();
        ordered_json j;
        j["command"] = "rational-form";
        if (o.classical) {
            if (!tables().has(Family::classical, o.genus))
                throw invalid_argument("rational-form: no classical table for genus " + std::to_string(o.genus));
            j["method"] = "closed-form";
            j["form"] = form_json(tables().get(Family::classical, o.genus).form());
        } else if (o.genus == 1) {
            const LogForm f = genus1_closed();
            j["method"] = "pipeline";
            j["form"] = {{"family", "monotone"},
                         {"genus", 1},
                         {"log_eta", to_string(f.log_eta)},
                         {"log_gamma", to_string(f.log_gamma)}};
        } else {
            detail::bound(o.genus <= kMaxGenusPipeline, "rational-form: genus " + std::to_string(o.genus) +
                                                            " exceeds the bound g <= " +
                                                            std::to_string(kMaxGenusPipeline));
            j["method"] = "pipeline";
            j["form"] = form_json(pipeline_rational_form(o.genus));
        }
        if (o.timing)
            j["timing_ms"] = elapsed_ms(t0);
        if (o.format == "json") {
            out_ << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            const auto& f = j["form"];
            if (f.contains("log_eta")) {
                out_ << "term,coeff\nlog(1/(1-eta))," << f["log_eta"].get<std::string>() << "\nlog(1/(1-gamma)),"
                     << f["log_gamma"].get<std::string>() << "\n";
            } else {
                out_ << "alpha,coeff\nconstant," << f["constant"].get<std::string>() << "\n";
                for (const auto& t : f["terms"])
                    out_ << csv_partition(Partition(t["alpha"].get<std::vector<int>>())) << ","
                         << t["coeff"].get<std::string>() << "\n";
            }
        } else {
            const auto& f = j["form"];
            if (f.contains("log_eta")) {
                out_ << f["log_eta"].get<std::string>() << " log(1/(1-eta)) + " << f["log_gamma"].get<std::string>()
                     << " log(1/(1-gamma))\n";
            } else {
                const RationalForm rf = form_from_json(f);
                const std::string x = rf.family == Family::monotone ? "eta" : "phi";
                out_ << to_string(rf.constant);
                for (const auto& [alpha, c] : rf.terms) {
                    out_ << "\n + (" << to_string(c) << ")";
                    for (int k : alpha)
                        out_ << " " << x << "_" << k;
                    out_ << " / (1-" << x << ")^" << alpha.length() + 2 * rf.genus - 2;
                }
                out_ << "\n";
            }
        }
        return kExitOk;
    }

    int verify(const Options& o)
    {
        detail::require(o.jobs >= 1, "--jobs must be >= 1");
        const auto results = run_checks(suite_checks(o.suite, tables()), o.jobs);
        bool ok = true;
        for (const auto& r : results)
            ok = ok && r.passed;
        if (o.format == "json") {
            ordered_json j;
            j["command"] = "verify";
            j["suite"] = o.suite;
            j["passed"] = ok;
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                ordered_json c{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
                if (o.timing)
                    c["seconds"] = r.seconds;
                arr.push_back(std::move(c));
            }
            j["checks"] = std::move(arr);
            out_ << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            out_ << "check,passed\n";
            for (const auto& r : results)
                out_ << r.name << "," << (r.passed ? "true" : "false") << "\n";
        } else {
            for (const auto& r : results) {
                out_ << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
                if (o.timing)
                    out_ << " [" << r.seconds << " s]";
                out_ << "\n";
            }
        }
        return ok ? kExitOk : kExitFailed;
    }

private:
    const ReferenceTables& tables()
    {
        if (!tables_)
            tables_ = load_reference_tables();
        return *tables_;
    }

    static double elapsed_ms(std::chrono::steady_clock::time_point t0)
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    std::ostream& out_;
    std::ostream& err_;
    std::optional<ReferenceTables> tables_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact monotone and classical Hurwitz numbers", "hurwitz"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"json", "csv", "text"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_flag("--timing", o.timing, "Include wall-clock timings (output is then not reproducible)");
    };
    auto method_opt = [&](CLI::App* sub) {
        sub->add_option("--method", o.method, "auto, oracle, joincut, closed-form, pipeline or lagrange")
            ->check(CLI::IsMember({"auto", "oracle", "joincut", "closed-form", "pipeline", "lagrange"}));
        sub->add_flag("--classical", o.classical, "Classical instead of monotone Hurwitz numbers");
    };

    auto* compute = app.add_subcommand("compute", "One Hurwitz number H_g(alpha)");
    compute->add_option("--genus", o.genus, "Genus g >= 0")->required();
    compute->add_option("--partition", o.partition, "Parts of alpha, comma separated")->required();
    method_opt(compute);
    common(compute);

    auto* table = app.add_subcommand("table", "H_g(alpha) for every alpha with |alpha| <= max degree");
    table->add_option("--genus", o.genus, "Genus g >= 0")->required();
    table->add_option("--max-degree", o.max_degree, "Largest |alpha|");
    method_opt(table);
    common(table);

    auto* form = app.add_subcommand("rational-form", "Generating function of genus g in closed form");
    form->add_option("--genus", o.genus, "Genus g >= 1")->required();
    form->add_flag("--classical", o.classical, "Checked-in classical form (g = 2, 3)");
    common(form);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
    verify->add_option("--jobs", o.jobs, "Checks run in parallel");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Runner runner(out, err);
    try {
        if (compute->parsed())
            return runner.compute(o);
        if (table->parsed())
            return runner.table(o);
        if (form->parsed())
            return runner.rational_form(o);
        return runner.verify(o);
    } catch (const resource_limit& e) {
        err << "error: unsupported range: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"hurwitz"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace hurwitz::cli

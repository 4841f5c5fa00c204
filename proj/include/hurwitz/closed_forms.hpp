#pragma once

// Explicit formulas for single Hurwitz numbers in low genus, the single-cycle
// formula, the Bernoulli constants, the monotone/classical scaling relation
// and interpolation of the polynomial P_{g,l}.

#include <algorithm>
#include <functional>
#include <vector>

#include "pipeline.hpp"
#include "polynomial.hpp"
#include "tables.hpp"

namespace hurwitz {

namespace detail {

inline Rat central_product(const Partition& alpha)
{
    Rat p = 1;
    for (int a : alpha)
        p *= Rat(central_binomial(a));
    return p;
}

/// prod a^a / a!
inline Rat self_power_product(const Partition& alpha)
{
    Rat p = 1;
    for (int a : alpha)
        p *= Rat(pow(BigInt(a), static_cast<unsigned long>(a))) / Rat(factorial(a));
    return p;
}

inline Rat labelled_factor(const Partition& alpha)
{
    return Rat(factorial(alpha.size())) / Rat(aut_order(alpha));
}

inline void require_nonempty(const Partition& alpha)
{
    require(alpha.size() >= 1, "closed form: partition must have size >= 1");
}

} // namespace detail

inline Rat monotone_genus0(const Partition& alpha)
{
    detail::require_nonempty(alpha);
    const int d = alpha.size(), l = alpha.length();
    return detail::labelled_factor(alpha) * rising(Rat(2 * d + 1), l - 3) * detail::central_product(alpha);
}

inline Rat monotone_genus1(const Partition& alpha)
{
    detail::require_nonempty(alpha);
    const int d = alpha.size(), l = alpha.length();
    const Rat a(2 * d + 1);
    Rat bracket = rising(a, l) - 3 * rising(a, l - 1);
    for (int k = 2; k <= l; ++k)
        bracket -= Rat(factorial(k - 2)) * rising(a, l - k) * Rat(elem_sym_shifted(alpha, k));
    return Rat(1, 24) * detail::labelled_factor(alpha) * detail::central_product(alpha) * bracket;
}

inline Rat classical_genus0(const Partition& alpha)
{
    detail::require_nonempty(alpha);
    const int d = alpha.size(), l = alpha.length();
    return detail::labelled_factor(alpha) * Rat(factorial(d + l - 2)) * pow(Rat(d), l - 3) *
           detail::self_power_product(alpha);
}

inline Rat classical_genus1(const Partition& alpha)
{
    detail::require_nonempty(alpha);
    const int d = alpha.size(), l = alpha.length();
    const Rat dd(d);
    Rat bracket = pow(dd, l) - pow(dd, l - 1);
    for (int k = 2; k <= l; ++k)
        bracket -= Rat(factorial(k - 2)) * pow(dd, l - k) * Rat(elem_sym_parts(alpha, k));
    return Rat(1, 24) * detail::labelled_factor(alpha) * Rat(factorial(d + l)) * detail::self_power_product(alpha) *
           bracket;
}

/// Monotone H_g((d)) by the single-cycle formula
/// (2d)!/d! C(2g-2+2d, 2g-2) / (2g(2g-1)) [z^{2g}/(2g)!] (sinh(z/2)/(z/2))^{2d-2}.
inline Rat mn_single_cycle(int g, int d)
{
    detail::require(g >= 1, "mn_single_cycle: genus must be >= 1");
    detail::require(d >= 1, "mn_single_cycle: degree must be >= 1");
    // series in w = z^2 up to w^g
    std::vector<Rat> base(static_cast<std::size_t>(g) + 1), acc(static_cast<std::size_t>(g) + 1, 0);
    for (int n = 0; n <= g; ++n)
        base[n] = Rat(1) / (Rat(factorial(2 * n + 1)) * Rat(pow(BigInt(4), static_cast<unsigned long>(n))));
    acc[0] = 1;
    for (int e = 0; e < 2 * d - 2; ++e) {
        std::vector<Rat> next(acc.size(), 0);
        for (int i = 0; i <= g; ++i)
            for (int j = 0; i + j <= g; ++j)
                next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    const Rat zcoeff = acc[g] * Rat(factorial(2 * g));
    return Rat(factorial(2 * d)) / Rat(factorial(d)) * Rat(binomial(2 * g - 2 + 2 * d, 2 * g - 2)) /
           Rat(2 * g * (2 * g - 1)) * zcoeff;
}

/// -B_{2g} / (2g (2g - 2)).
inline Rat bernoulli_constant(int g)
{
    detail::require(g >= 2, "bernoulli_constant: genus must be >= 2");
    return -bernoulli(2 * g) / Rat(2 * g * (2 * g - 2));
}

struct ScalingEntry {
    Partition alpha;
    Rat monotone;  // c_{g,alpha}
    Rat classical; // a_{g,alpha}
    bool holds = false;
};

/// c_{g,alpha} = 2^{3g-3} a_{g,alpha} for every alpha of size 3g - 3.
inline std::vector<ScalingEntry> scaling_entries(const RationalForm& monotone, const RationalForm& classical)
{
    detail::require(monotone.genus == classical.genus, "scaling: genus mismatch");
    const int g = monotone.genus;
    const Rat factor(pow(BigInt(2), static_cast<unsigned long>(3 * g - 3)));
    std::vector<ScalingEntry> out;
    for (const auto& alpha : partitions_of(3 * g - 3)) {
        ScalingEntry e{alpha, monotone.coeff(alpha), classical.coeff(alpha), false};
        e.holds = e.monotone == factor * e.classical;
        out.push_back(std::move(e));
    }
    return out;
}

inline bool scaling_check(int g, const ReferenceTables& tables)
{
    detail::require(g >= 2, "scaling_check: genus must be >= 2");
    if (!tables.has(Family::classical, g))
        throw invalid_argument("scaling_check: no classical table for genus " + std::to_string(g));
    auto entries = scaling_entries(pipeline_rational_form(g), tables.get(Family::classical, g).form());
    return std::all_of(entries.begin(), entries.end(), [](const ScalingEntry& e) { return e.holds; });
}

/// P_{g,l}(alpha) = H_g(alpha) |Aut alpha| / (d! prod C(2 alpha_j, alpha_j)).
inline Rat polynomiality_value(const Rat& hurwitz, const Partition& alpha)
{
    return hurwitz / (detail::labelled_factor(alpha) * detail::central_product(alpha));
}

struct PolynomialityFit {
    int genus = 0;
    int length = 0;
    PolynomialQ polynomial;
    int degree = 0;     // smallest degree that fits and verifies
    int fit_points = 0; // samples used for the fit
    int held_out = 0;   // samples checked afterwards
};

namespace detail {

/// Distinct exponent vectors obtained by permuting lambda padded to n entries.
inline std::vector<std::vector<int>> symmetric_orbit(const Partition& lambda, int n)
{
    std::vector<int> e(lambda.begin(), lambda.end());
    e.resize(static_cast<std::size_t>(n), 0);
    std::sort(e.begin(), e.end());
    std::vector<std::vector<int>> out;
    do
        out.push_back(e);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline Rat monomial_symmetric(const Partition& lambda, const Partition& alpha)
{
    Rat s = 0;
    for (const auto& e : symmetric_orbit(lambda, alpha.length())) {
        Rat t = 1;
        for (int i = 0; i < alpha.length(); ++i)
            if (e[i])
                t *= pow(Rat(alpha[i]), e[i]);
        s += t;
    }
    return s;
}

} // namespace detail

inline constexpr int kHeldOutSamples = 3;

/// Interpolates P_{g,l} in the monomial symmetric basis, raising the degree
/// until a fit on all but the last three samples exists and reproduces those three.
inline PolynomialityFit polynomiality_extract(int g, int l, const std::vector<Partition>& samples,
                                              const std::function<Rat(const Partition&)>& hurwitz,
                                              int max_degree = 16)
{
    detail::require(g >= 0 && l >= 1, "polynomiality: need g >= 0 and l >= 1");
    detail::require(!(g == 0 && l <= 2), "polynomiality: (g, l) = (0, 1), (0, 2) have no polynomial");
    for (const auto& a : samples)
        detail::require(a.length() == l, "polynomiality: sample " + a.str() + " does not have " + std::to_string(l) +
                                             " parts");
    const int n_fit = static_cast<int>(samples.size()) - kHeldOutSamples;
    if (n_fit < 1)
        throw invalid_argument("polynomiality: insufficient samples");
    std::vector<Rat> values;
    for (const auto& a : samples)
        values.push_back(polynomiality_value(hurwitz(a), a));

    for (int deg = 0; deg <= max_degree; ++deg) {
        std::vector<Partition> basis;
        for (int k = 0; k <= deg; ++k)
            for (auto& lam : partitions_of(k, -1, l))
                basis.push_back(std::move(lam));
        if (static_cast<int>(basis.size()) > n_fit)
            throw invalid_argument("polynomiality: insufficient samples for degree " + std::to_string(deg) + " (" +
                                   std::to_string(basis.size()) + " unknowns, " + std::to_string(n_fit) +
                                   " fit points)");
        RatMatrix a;
        std::vector<Rat> b;
        for (int i = 0; i < n_fit; ++i) {
            std::vector<Rat> row;
            for (const auto& lam : basis)
                row.push_back(detail::monomial_symmetric(lam, samples[i]));
            a.push_back(std::move(row));
            b.push_back(values[i]);
        }
        std::vector<Rat> coeffs;
        try {
            coeffs = solve_exact(std::move(a), std::move(b));
        } catch (const inconsistent_system&) {
            continue;
        } catch (const singular_system&) {
            throw invalid_argument("polynomiality: samples do not determine a degree " + std::to_string(deg) +
                                   " symmetric polynomial");
        }
        PolynomialQ p(l);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (const auto& e : detail::symmetric_orbit(basis[i], l))
                p.add_term(e, coeffs[i]);
        bool verified = true;
        for (std::size_t i = static_cast<std::size_t>(n_fit); i < samples.size() && verified; ++i)
            verified = p.evaluate(std::span<const int>(samples[i].parts())) == values[i];
        if (verified)
            return {g, l, std::move(p), deg, n_fit, kHeldOutSamples};
    }
    throw verification_failure("polynomiality: no polynomial of degree <= " + std::to_string(max_degree) +
                               " fits P_{" + std::to_string(g) + "," + std::to_string(l) + "}");
}

} // namespace hurwitz

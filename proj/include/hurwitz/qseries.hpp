#pragma once

// The p <-> q change of variables, the auxiliary linear series, Lagrange
// extraction of p-coefficients, and expansion of closed generating-function
// forms into Hurwitz numbers.
//
// Monotone side:  q_j = p_j (1 - gamma)^{-2j},
//   gamma = sum C(2k,k) q_k, eta = sum (2k+1) C(2k,k) q_k,
//   eta_j = sum (2k+1) k^j C(2k,k) q_k,
//   [p_alpha] F = [q_alpha] (1 - eta) F (1 - gamma)^{-(2d+1)}.
// Classical side: r_j = p_j e^{j delta},
//   delta = sum k^k/k! r_k, phi = sum k^{k+1}/k! r_k, phi_j = sum k^{k+j+1}/k! r_k,
//   [p_alpha] F = [r_alpha] (1 - phi) e^{d delta} F.
// Both extraction rules are the multivariate Lagrange theorem with a rank-one
// Jacobian correction.

#include <functional>
#include <map>
#include <vector>

#include "family.hpp"
#include "mseries.hpp"

namespace hurwitz {

/// sum_k coeff(k) x_k over the variables the truncation admits.
inline MSeries linear_series(const Truncation& t, const std::function<Rat(int)>& coeff)
{
    MSeries s(t);
    for (int k = 1; k <= t.max_weight; ++k)
        if (t.admits_variable(k))
            s.add_term(Partition{k}, coeff(k));
    return s;
}

inline MSeries gamma_series(const Truncation& t)
{
    return linear_series(t, [](int k) -> Rat { return Rat(central_binomial(k)); });
}

inline MSeries eta_series(const Truncation& t)
{
    return linear_series(t, [](int k) -> Rat { return Rat((2 * k + 1) * central_binomial(k)); });
}

inline MSeries eta_j_series(const Truncation& t, int j)
{
    detail::require(j >= 0, "eta_j: negative index");
    return linear_series(t, [j](int k) -> Rat { return Rat((2 * k + 1) * pow(BigInt(k), j) * central_binomial(k)); });
}

inline MSeries delta_series(const Truncation& t)
{
    return linear_series(t, [](int k) -> Rat { return Rat(pow(BigInt(k), k)) / Rat(factorial(k)); });
}

inline MSeries phi_series(const Truncation& t)
{
    return linear_series(t, [](int k) -> Rat { return Rat(pow(BigInt(k), k + 1)) / Rat(factorial(k)); });
}

inline MSeries phi_j_series(const Truncation& t, int j)
{
    detail::require(j >= 0, "phi_j: negative index");
    return linear_series(t, [j](int k) -> Rat { return Rat(pow(BigInt(k), k + j + 1)) / Rat(factorial(k)); });
}

struct AuxSeries {
    MSeries gamma;
    MSeries eta;
    std::vector<MSeries> eta_j; // eta_j[j] for 0 <= j <= J; eta_j[0] = eta
};

inline AuxSeries aux_series(const Truncation& t, int J)
{
    detail::require(J >= 0, "aux_series: J must be >= 0");
    AuxSeries a{gamma_series(t), eta_series(t), {}};
    for (int j = 0; j <= J; ++j)
        a.eta_j.push_back(eta_j_series(t, j));
    return a;
}

/// Images new_j(p) of the new variables, found by fixed-point iteration of
/// new_j = p_j * factor(j, {new}). Each round fixes one more weight.
inline std::vector<MSeries> solve_implicit(const Truncation& t,
                                           const std::function<MSeries(int, const std::vector<MSeries>&)>& factor)
{
    const int w = t.max_weight;
    std::vector<MSeries> cur(static_cast<std::size_t>(w) + 1, MSeries(t));
    for (int j = 1; j <= w; ++j)
        cur[j] = MSeries::variable(t, j);
    for (int round = 0; round <= w + 1; ++round) {
        std::vector<MSeries> next(cur.size(), MSeries(t));
        for (int j = 1; j <= w; ++j)
            if (t.admits_variable(j))
                next[j] = MSeries::variable(t, j) * factor(j, cur);
        bool same = true;
        for (int j = 1; j <= w && same; ++j)
            same = next[j] == cur[j];
        cur = std::move(next);
        if (same)
            return cur;
    }
    throw verification_failure("implicit change of variables did not stabilise");
}

/// q_j as series in p.
inline std::vector<MSeries> q_in_p(const Truncation& t)
{
    return solve_implicit(t, [&t](int j, const std::vector<MSeries>& q) {
        MSeries g = substitute(gamma_series(t), q, t);
        return one_minus_pow(g, -2 * j);
    });
}

/// p_j as series in q: p_j = q_j (1 - gamma)^{2j}.
inline std::vector<MSeries> p_in_q(const Truncation& t)
{
    std::vector<MSeries> out(static_cast<std::size_t>(t.max_weight) + 1, MSeries(t));
    MSeries g = gamma_series(t);
    for (int j = 1; j <= t.max_weight; ++j)
        if (t.admits_variable(j))
            out[j] = MSeries::variable(t, j) * one_minus_pow(g, 2 * j);
    return out;
}

/// r_j as series in p (classical side).
inline std::vector<MSeries> r_in_p(const Truncation& t)
{
    return solve_implicit(t, [&t](int j, const std::vector<MSeries>& r) {
        MSeries dl = substitute(delta_series(t), r, t);
        return exp_series(dl * Rat(j));
    });
}

/// p_j = r_j e^{-j delta}.
inline std::vector<MSeries> p_in_r(const Truncation& t)
{
    std::vector<MSeries> out(static_cast<std::size_t>(t.max_weight) + 1, MSeries(t));
    MSeries dl = delta_series(t);
    for (int j = 1; j <= t.max_weight; ++j)
        if (t.admits_variable(j))
            out[j] = MSeries::variable(t, j) * exp_series(dl * Rat(-j));
    return out;
}

namespace detail {

inline MSeries restrict_for(const MSeries& f, const Partition& alpha)
{
    const Truncation need = Truncation::for_coefficient(alpha);
    if (!f.truncation().covers(need))
        throw invalid_argument("coefficient extraction at " + alpha.str() + " needs weight " +
                               std::to_string(alpha.size()) + " but the series is truncated at weight " +
                               std::to_string(f.max_weight()));
    return f.truncated(need);
}

} // namespace detail

/// [p_alpha] F for F given in the q variables (monotone change of variables).
inline Rat lagrange_extract(const MSeries& f, const Partition& alpha)
{
    MSeries F = detail::restrict_for(f, alpha);
    if (alpha.empty())
        return F.constant_term();
    const Truncation& t = F.truncation();
    const int d = alpha.size();
    MSeries one = MSeries::constant(t, 1);
    MSeries g = (one - eta_series(t)) * F * one_minus_pow(gamma_series(t), -(2 * d + 1));
    return g.coeff(alpha);
}

/// [p_alpha] F for F given in the r variables (classical change of variables).
inline Rat classical_lagrange_extract(const MSeries& f, const Partition& alpha)
{
    MSeries F = detail::restrict_for(f, alpha);
    if (alpha.empty())
        return F.constant_term();
    const Truncation& t = F.truncation();
    const int d = alpha.size();
    MSeries one = MSeries::constant(t, 1);
    MSeries g = (one - phi_series(t)) * exp_series(delta_series(t) * Rat(d)) * F;
    return g.coeff(alpha);
}

inline Rat extract(const MSeries& f, const Partition& alpha, Family family)
{
    return family == Family::monotone ? lagrange_extract(f, alpha) : classical_lagrange_extract(f, alpha);
}

/// [p_alpha] F by substituting the solved change of variables into F.
/// Slower, but shares nothing with the Lagrange route.
inline Rat extract_by_substitution(const MSeries& f, const Partition& alpha, Family family)
{
    MSeries F = detail::restrict_for(f, alpha);
    const Truncation& t = F.truncation();
    auto images = family == Family::monotone ? q_in_p(t) : r_in_p(t);
    return substitute(F, images, t).coeff(alpha);
}

/// constant + sum_alpha c_alpha x_alpha (1 - x)^{-(l(alpha) + 2g - 2)}, with
/// x_alpha = prod x_{alpha_i}; x, x_j are eta, eta_j (monotone) or phi, phi_j
/// (classical).
struct RationalForm {
    Family family = Family::monotone;
    int genus = 2;
    Rat constant;
    std::map<Partition, Rat> terms;

    Rat coeff(const Partition& alpha) const
    {
        auto it = terms.find(alpha);
        return it == terms.end() ? Rat(0) : it->second;
    }

    bool operator==(const RationalForm&) const = default;
};

/// a log(1/(1 - eta)) + b log(1/(1 - gamma)).
struct LogForm {
    Rat log_eta;
    Rat log_gamma;
    bool operator==(const LogForm&) const = default;
};

inline MSeries expand_rational_form(const RationalForm& form, const Truncation& t)
{
    detail::require(form.genus >= 2, "rational form: genus must be >= 2");
    const bool mono = form.family == Family::monotone;
    MSeries one = MSeries::constant(t, 1);
    MSeries x = mono ? eta_series(t) : phi_series(t);
    std::map<int, MSeries> xj;
    auto x_index = [&](int j) -> const MSeries& {
        auto it = xj.find(j);
        if (it == xj.end())
            it = xj.emplace(j, mono ? eta_j_series(t, j) : phi_j_series(t, j)).first;
        return it->second;
    };
    MSeries inv = one_minus_pow(x, -1);
    std::vector<MSeries> inv_pows{one};
    auto inv_pow = [&](int m) -> const MSeries& {
        detail::require(m >= 0, "rational form: negative denominator exponent");
        while (static_cast<int>(inv_pows.size()) <= m)
            inv_pows.push_back(inv_pows.back() * inv);
        return inv_pows[m];
    };
    MSeries out = MSeries::constant(t, form.constant);
    for (const auto& [alpha, c] : form.terms) {
        MSeries term = MSeries::constant(t, c);
        for (int a : alpha)
            term *= x_index(a);
        out += term * inv_pow(alpha.length() + 2 * form.genus - 2);
    }
    return out;
}

inline MSeries expand_log_form(const LogForm& form, const Truncation& t)
{
    return log_inv_one_minus(eta_series(t)) * form.log_eta + log_inv_one_minus(gamma_series(t)) * form.log_gamma;
}

/// (1/24) log(1/(1 - phi)) - (1/24) delta.
inline MSeries expand_classical_genus1(const Truncation& t)
{
    return log_inv_one_minus(phi_series(t)) * Rat(1, 24) - delta_series(t) * Rat(1, 24);
}

/// Hurwitz number from a genus-g generating function coefficient [p_alpha]:
/// monotone H = d! [p_alpha]; classical H = d! r! [p_alpha].
inline Rat hurwitz_from_coefficient(const Rat& coeff, const Partition& alpha, int genus, Family family)
{
    Rat h = coeff * Rat(factorial(alpha.size()));
    if (family == Family::classical)
        h *= Rat(factorial(transposition_count(genus, alpha.size(), alpha.length())));
    return h;
}

/// H_g(alpha) from a rational form, via Lagrange extraction on a capped truncation.
inline Rat evaluate_form(const RationalForm& form, const Partition& alpha)
{
    if (alpha.empty())
        return 0;
    const Truncation t = Truncation::for_coefficient(alpha);
    return hurwitz_from_coefficient(extract(expand_rational_form(form, t), alpha, form.family), alpha, form.genus,
                                    form.family);
}

inline Rat evaluate_log_form(const LogForm& form, const Partition& alpha)
{
    if (alpha.empty())
        return 0;
    const Truncation t = Truncation::for_coefficient(alpha);
    return hurwitz_from_coefficient(lagrange_extract(expand_log_form(form, t), alpha), alpha, 1, Family::monotone);
}

inline Rat evaluate_classical_genus1(const Partition& alpha)
{
    if (alpha.empty())
        return 0;
    const Truncation t = Truncation::for_coefficient(alpha);
    return hurwitz_from_coefficient(classical_lagrange_extract(expand_classical_genus1(t), alpha), alpha, 1,
                                    Family::classical);
}

} // namespace hurwitz

#pragma once

// Symbolic solution of the monotone join-cut recursion, genus by genus.
//
// For g >= 1 let E_g = (1 - eta)^{2g-1} (1 - 4y)^{1/2} Delta_1 H_g, so that
// Delta_1 H_g = v^{2g-1} s E_g. The recursion reads
//   (1 - T) E_g = v^{-(2g-2)} Delta_1(v^{2g-3} s E_{g-1}) + sum_{g'} u E_{g'} E_{g-g'},
// with E_0's role played by Delta_1^2 H_0 = Y^2. E_g is a polynomial in u and
// the h_k of weighted degree at most 3g - 1. Expanding s E_g in the basis
// {s, eta(y) - gamma(y), eta_{j-1}(y)} and integrating term by term yields the
// coefficients of the rational form of H_g.
//
// Delta_1 is a derivation; on generators
//   Delta_1 s^k = (k/2) (s^{k+5} - 2 s^{k+3} + s^{k+1}) v
//   Delta_1 v   = v^2 (eta_1(y) + (s^3 - s) h_1)
//   Delta_1 h_b = v (eta_{b+1}(y) + (s^3 - s) h_{b+1}) + h_b v (eta_1(y) + (s^3 - s) h_1)
// where eta_j(y) = theta^j (s^3) and theta = ((s^3 - s)/2) d/ds is y d/dy.

#include <map>
#include <mutex>
#include <vector>

#include "linalg.hpp"
#include "qseries.hpp"
#include "relement.hpp"

namespace hurwitz {

/// theta(c s^k) = (k/2) c (s^{k+2} - s^k).
inline RElement theta_y(const RElement& f)
{
    RElement out;
    for (const auto& [k, c] : f.terms()) {
        CoeffPoly half = c * make_rat(k, 2);
        out.add(k + 2, half);
        out.add(k, -half);
    }
    return out;
}

/// eta_j(y); eta_0(y) = eta(y) = s^3 - 1.
inline RElement eta_y(int j)
{
    detail::require(j >= 0, "eta_y: negative index");
    RElement f = RElement::s_pow(3);
    for (int i = 0; i < j; ++i)
        f = theta_y(f);
    if (j == 0)
        f -= RElement(1);
    return f;
}

inline RElement gamma_y()
{
    return RElement::s_pow(1) - RElement(1);
}

/// Delta_1^2 H_0 = y^2 (1 - 4y)^{-2} = Y^2.
inline RElement delta1_sq_H0()
{
    RElement y = RElement::Y();
    return y * y;
}

/// Delta_1 of an arbitrary element (any integer powers of s and v).
inline RElement delta1(const RElement& x)
{
    const RElement eta1 = eta_y(1);
    const RElement ds = RElement::s_pow(3) - RElement::s_pow(1); // eta(y) - gamma(y)
    // v^{-1} Delta_1 v / v = eta_1(y) + (s^3 - s) h_1
    const RElement dlog_v = eta1 + ds * CoeffPoly::h(1);
    std::map<int, RElement> eta_cache;
    auto eta_at = [&](int j) -> const RElement& {
        auto it = eta_cache.find(j);
        if (it == eta_cache.end())
            it = eta_cache.emplace(j, eta_y(j)).first;
        return it->second;
    };
    RElement out;
    for (const auto& [k, poly] : x.terms())
        for (const auto& [m, c] : poly.terms()) {
            const CoeffPoly mono = CoeffPoly::mono(m.v_exp + 1, m.h, c); // carries the extra v
            RElement acc;
            if (k != 0) {
                const Rat half = make_rat(k, 2);
                acc.add(k + 5, half);
                acc.add(k + 3, Rat(-2 * half));
                acc.add(k + 1, half);
            }
            const int n = m.v_exp + m.h.length();
            if (n != 0)
                acc += dlog_v.shifted(k) * Rat(n);
            RElement piece = acc * mono;
            for (auto [b, mult] : m.h.multiplicities()) {
                const CoeffPoly rest = CoeffPoly::mono(m.v_exp + 1, m.h.without(b), c * Rat(mult));
                RElement db = eta_at(b + 1) + ds * CoeffPoly::h(b + 1);
                piece += db.shifted(k) * rest;
            }
            out += piece;
        }
    return out;
}

/// Delta_1 ((1 - eta)^{-m} F).
inline RElement apply_delta1(const RElement& f, int m)
{
    return delta1(f.times_v(m));
}

namespace detail {

/// [y^k] y^i (1 - 4y)^{-3/2-i}.
inline Rat pi2_series_coeff(int i, int k)
{
    if (k < i)
        return 0;
    const int n = k - i;
    return Rat(pow(BigInt(4), static_cast<unsigned long>(n))) * rising(make_rat(3, 2) + i, n) / Rat(factorial(n));
}

} // namespace detail

/// (1 - eta)^{-1} Pi_2 (y^i (1 - 4y)^{-3/2-i}), constant term in y dropped
/// (so i = 0 projects eta(y) and gives v - 1).
inline CoeffPoly pi2_project(int i)
{
    detail::require(i >= 0, "pi2_project: negative index");
    const int n = i + 1; // unknowns p_0..p_i
    RatMatrix a;
    std::vector<Rat> b;
    for (int k = 1; k <= i + 4; ++k) {
        std::vector<Rat> row;
        for (int j = 0; j < n; ++j)
            row.push_back(Rat(pow(BigInt(k), static_cast<unsigned long>(j))));
        a.push_back(std::move(row));
        b.push_back(detail::pi2_series_coeff(i, k) / Rat((2 * k + 1) * central_binomial(k)));
    }
    std::vector<Rat> p;
    try {
        p = solve_exact(a, b); // the last three rows are the check points
    } catch (const inconsistent_system&) {
        throw verification_failure("pi2_project(" + std::to_string(i) +
                                   "): coefficients do not fit (2k+1) C(2k,k) p(k) with deg p <= i");
    }
    CoeffPoly out = (CoeffPoly::v() - CoeffPoly(1)) * p[0];
    for (int j = 1; j < n; ++j)
        out += CoeffPoly::h(j) * p[j];
    return out;
}

namespace detail {

inline const CoeffPoly& pi2_cached(int i)
{
    static std::mutex mu;
    static std::map<int, CoeffPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(i);
    if (it == cache.end())
        it = cache.emplace(i, pi2_project(i)).first;
    return it->second;
}

} // namespace detail

/// T on elements with even nonnegative s-exponents:
/// T(Y^k) = sum_{i=1}^{k-1} Y^{k-i} pi2_project(i), linear over the coefficients.
inline RElement apply_T(const RElement& f)
{
    for (const auto& [e, c] : f.terms())
        detail::require(e >= 0 && e % 2 == 0, "apply_T: s^" + std::to_string(e) + " is not a power of (1 - 4y)^{-1}");
    std::map<int, CoeffPoly> out;
    for (const auto& [k, c] : to_Y_basis(f))
        for (int i = 1; i <= k - 1; ++i)
            out[k - i] += c * detail::pi2_cached(i);
    return from_Y_basis(out);
}

/// (1 - T)^{-1} F = F + T F + T^2 F + ..., checked by applying 1 - T.
inline RElement invert_one_minus_T(const RElement& f)
{
    RElement sum = f, term = f;
    int guard = 0;
    for (const auto& [e, c] : f.terms())
        guard = std::max(guard, e / 2 + 1);
    while (!term.is_zero()) {
        detail::ensure(guard-- >= 0, "invert_one_minus_T: T is not nilpotent on the input");
        term = apply_T(term);
        sum += term;
    }
    detail::ensure(sum - apply_T(sum) == f, "invert_one_minus_T: (1 - T) of the result differs from the input");
    return sum;
}

/// E_g from E_1..E_{g-1} (lower[i] = E_{i+1}).
inline RElement solve_genus(int g, const std::vector<RElement>& lower)
{
    detail::require(g >= 1, "solve_genus: genus must be >= 1");
    detail::require(static_cast<int>(lower.size()) >= g - 1, "solve_genus: lower genera missing");
    RElement rhs;
    if (g == 1) {
        rhs = delta1_sq_H0();
    } else {
        rhs = apply_delta1(lower[g - 2].shifted(1), 2 * g - 3).times_v(-(2 * g - 2));
        const RElement u = RElement::u_pow(1);
        for (int gp = 1; gp <= g - 1; ++gp)
            rhs += u * lower[gp - 1] * lower[g - gp - 1];
    }
    detail::ensure(rhs.in_R(3 * g - 1),
                   "solve_genus: right-hand side for genus " + std::to_string(g) + " is not in R_" +
                       std::to_string(3 * g - 1));
    RElement e = invert_one_minus_T(rhs);
    detail::ensure(e.in_R(3 * g - 1),
                   "solve_genus: E_" + std::to_string(g) + " is not in R_" + std::to_string(3 * g - 1));
    return e;
}

/// s E_g = F_0 s + F_1 (eta(y) - gamma(y)) + sum_{j>=2} F_j eta_{j-1}(y).
struct BasisDecomp {
    int genus = 1;
    std::vector<CoeffPoly> F; // F[0..3g-1], polynomials in the h_k only
};

namespace detail {

/// Basis element j divided by s, as a polynomial in u: 1, u - 1, eta_{j-1}(y)/s.
inline RElement basis_over_s(int j)
{
    if (j == 0)
        return RElement(1);
    if (j == 1)
        return RElement::u_pow(1) - RElement(1);
    return eta_y(j - 1).shifted(-1);
}

/// -F_1 + sum_{j>=2} F_j h_{j-1}.
inline CoeffPoly cond2_residual(const BasisDecomp& b)
{
    CoeffPoly r = -b.F[1];
    for (std::size_t j = 2; j < b.F.size(); ++j)
        r += b.F[j] * CoeffPoly::h(static_cast<int>(j) - 1);
    return r;
}

} // namespace detail

inline RElement recompose(const BasisDecomp& b)
{
    RElement e;
    for (std::size_t j = 0; j < b.F.size(); ++j)
        e += detail::basis_over_s(static_cast<int>(j)) * b.F[j];
    return e;
}

inline BasisDecomp decompose_basis(int g, const RElement& e)
{
    detail::require(g >= 1, "decompose_basis: genus must be >= 1");
    const int top = 3 * g - 1;
    detail::require(e.in_R(top), "decompose_basis: input is not in R_" + std::to_string(top));
    BasisDecomp b{g, std::vector<CoeffPoly>(static_cast<std::size_t>(top) + 1)};
    RElement rest = e;
    for (int j = top; j >= 0; --j) {
        const RElement basis = detail::basis_over_s(j);
        const Rat lead = basis.coeff(2 * j).coeff({});
        const CoeffPoly fj = rest.coeff(2 * j) * (1 / lead);
        b.F[j] = fj;
        rest -= basis * fj;
    }
    detail::ensure(rest.is_zero(), "decompose_basis: residual after the triangular solve");
    detail::ensure(b.F[0].is_zero(), "decompose_basis: F_0 = " + b.F[0].str() + " is not zero");
    for (int j = 0; j <= top; ++j)
        detail::ensure(b.F[j].v_free() && b.F[j].weighted_degree() <= top - j,
                       "decompose_basis: F_" + std::to_string(j) + " has weighted degree above " +
                           std::to_string(top - j));
    if (g >= 2) {
        const CoeffPoly r = detail::cond2_residual(b);
        detail::ensure(r.is_zero(), "decompose_basis: -F_1 + sum F_j h_{j-1} = " + r.str() + " for genus " +
                                        std::to_string(g));
    }
    return b;
}

/// The rational form of H_g from the decomposition of s E_g (g >= 2).
inline RationalForm integrate_phi(int g, const BasisDecomp& b)
{
    detail::require(g >= 2, "integrate_phi: genus must be >= 2");
    detail::require(b.genus == g && static_cast<int>(b.F.size()) == 3 * g, "integrate_phi: malformed decomposition");
    detail::ensure(detail::cond2_residual(b).is_zero(), "integrate_phi: decomposition violates cond2");
    // eta_beta -> (v exponent -> coefficient)
    std::map<Partition, std::map<int, Rat>> acc;
    const int n2 = 2 * g - 3;
    // c eta_beta eta^e t^m (1 - eta t)^{-(m + 2g - 1)}, integrated over [0, 1]
    auto integrate = [&](const Partition& beta, int e, int m, const Rat& c) {
        for (int i = 0; i <= n2; ++i) {
            const Rat w = c * Rat(binomial(n2, i)) / Rat(m + 1 + i);
            // eta^{e+i} v^{m+1+i} with eta = 1 - v^{-1}
            const int pe = e + i;
            for (int k = 0; k <= pe; ++k) {
                Rat t = w * Rat(binomial(pe, k));
                if (k % 2)
                    t = -t;
                auto& slot = acc[beta][m + 1 + i - k];
                slot += t;
            }
        }
    };
    for (const auto& [mono, c] : b.F[2].terms())
        integrate(mono.h, 1, mono.h.length(), c); // F_2 eta
    for (int j = 3; j < static_cast<int>(b.F.size()); ++j)
        for (const auto& [mono, c] : b.F[j].terms()) {
            const Partition beta = mono.h.with(j - 2);
            integrate(beta, 0, beta.length() - 1, c);
        }
    RationalForm form;
    form.family = Family::monotone;
    form.genus = g;
    for (const auto& [beta, by_v] : acc)
        for (const auto& [ve, c] : by_v) {
            if (c == 0)
                continue;
            if (ve == beta.length() + 2 * g - 2) {
                form.terms[beta] = c;
            } else if (beta.empty() && ve == 0) {
                form.constant = c;
            } else {
                throw verification_failure("integrate_phi: stray term " + to_string(c) + " eta_" + beta.str() +
                                           " v^" + std::to_string(ve));
            }
        }
    detail::ensure(form.constant == -form.coeff({}), "integrate_phi: constant term of H_" + std::to_string(g) +
                                                          " does not vanish");
    return form;
}

/// (1/24) log(1/(1 - eta)) - (1/8) log(1/(1 - gamma)).
inline LogForm genus1_closed()
{
    return {Rat(1, 24), Rat(-1, 8)};
}

/// Caches E_g for successive genera. Thread-safe.
class GenusSolver {
public:
    const RElement& normalized(int g)
    {
        detail::require(g >= 1, "GenusSolver: genus must be >= 1");
        std::lock_guard lock(mu_);
        while (static_cast<int>(e_.size()) < g)
            e_.push_back(solve_genus(static_cast<int>(e_.size()) + 1, e_));
        return e_[g - 1];
    }

    /// Delta_1 H_g = v^{2g-1} s E_g.
    RElement delta1_H(int g) { return normalized(g).shifted(1).times_v(2 * g - 1); }

    BasisDecomp decomposition(int g) { return decompose_basis(g, normalized(g)); }

    RationalForm rational_form(int g)
    {
        detail::require(g >= 2, "rational form: genus must be >= 2 (genus 1 is a log form)");
        {
            std::lock_guard lock(mu_);
            if (auto it = forms_.find(g); it != forms_.end())
                return it->second;
        }
        RationalForm f = integrate_phi(g, decomposition(g));
        std::lock_guard lock(mu_);
        forms_.emplace(g, f);
        return f;
    }

private:
    std::mutex mu_;
    std::vector<RElement> e_;
    std::map<int, RationalForm> forms_;
};

inline RationalForm pipeline_rational_form(int g)
{
    static GenusSolver solver;
    return solver.rational_form(g);
}

} // namespace hurwitz

#pragma once

// Degree-by-degree solution of the monotone and classical join-cut equations.
//
// Write the generating function as sum a[alpha, r] z^d t^r p_alpha, where
// a = H^r(alpha)/d! (monotone) or H^r(alpha)/(d! r!) (classical). Let
// J[alpha, r] be the coefficient of z^d t^r p_alpha in
//   sum_{i,j >= 1} (i+j) p_i p_j dH/dp_{i+j} + ij p_{i+j} d2H/dp_i dp_j
//                  + ij p_{i+j} dH/dp_i dH/dp_j.
// Expanding on a single term a[beta, r] p_beta (m_k = multiplicity of k in beta):
//   cut:   for each part k and 1 <= i < k, weight k m_k, beta - k + {i, k-i}
//   join:  for parts i < j, weight 2 i j m_i m_j, beta - {i, j} + {i+j}
//          for a part i,    weight i^2 m_i (m_i - 1), beta - {i, i} + {2i}
// and on an ordered pair a[beta1, r1] a[beta2, r2], for parts i of beta1 and
// j of beta2, weight i j m_i(beta1) m_j(beta2), (beta1 - i) + (beta2 - j) + {i+j}
// at length r1 + r2. Then
//   monotone:  d a[alpha, r+1] = J[alpha, r],       seed a[(1), 0] = 1
//   classical: 2 (r+1) a[alpha, r+1] = J[alpha, r], seed a[(1), 0] = 1.

#include <map>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "family.hpp"

namespace hurwitz {

/// Hurwitz numbers H^r(alpha) for |alpha| <= D, r <= R.
class TruncatedH {
public:
    TruncatedH() = default;
    TruncatedH(Family family, int max_degree, int max_r) : family_(family), max_degree_(max_degree), max_r_(max_r) {}

    Family family() const noexcept { return family_; }
    int max_degree() const noexcept { return max_degree_; }
    int max_r() const noexcept { return max_r_; }

    Rat at(const Partition& alpha, int r) const
    {
        if (alpha.size() > max_degree_ || r > max_r_ || r < 0)
            throw invalid_argument("TruncatedH: (" + alpha.str() + ", r=" + std::to_string(r) + ") outside table");
        auto it = values_.find({alpha, r});
        return it == values_.end() ? Rat(0) : it->second;
    }

    /// H_g(alpha), with r fixed by Riemann-Hurwitz.
    Rat genus(const Partition& alpha, int g) const
    {
        const int r = transposition_count(g, alpha.size(), alpha.length());
        if (r < 0)
            return 0;
        return at(alpha, r);
    }

    void set(const Partition& alpha, int r, const Rat& v)
    {
        if (v == 0)
            values_.erase({alpha, r});
        else
            values_[{alpha, r}] = v;
    }

    const std::map<std::pair<Partition, int>, Rat>& entries() const noexcept { return values_; }

private:
    Family family_ = Family::monotone;
    int max_degree_ = 0;
    int max_r_ = 0;
    std::map<std::pair<Partition, int>, Rat> values_;
};

namespace detail {

using Layer = std::map<Partition, Rat>;

inline void accumulate(Layer& out, const Partition& alpha, const Rat& v)
{
    if (v == 0)
        return;
    auto [it, fresh] = out.try_emplace(alpha, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0)
            out.erase(it);
    }
}

/// Cut and join contributions of one layer.
inline void cut_join(const Layer& layer, Layer& out)
{
    for (const auto& [beta, a] : layer) {
        auto mult = beta.multiplicities();
        for (auto [k, mk] : mult) {
            Partition rest = beta.without(k);
            for (int i = 1; i < k; ++i)
                accumulate(out, rest.with(i).with(k - i), a * (k * mk));
        }
        for (std::size_t x = 0; x < mult.size(); ++x) {
            auto [i, mi] = mult[x];
            if (mi >= 2)
                accumulate(out, beta.without(i).without(i).with(2 * i), a * (i * i * mi * (mi - 1)));
            for (std::size_t y = x + 1; y < mult.size(); ++y) {
                auto [j, mj] = mult[y];
                accumulate(out, beta.without(i).without(j).with(i + j), a * (2 * i * j * mi * mj));
            }
        }
    }
}

/// Quadratic contribution of an ordered pair of layers, keeping total degree <= max_degree.
inline void product_term(const Layer& first, const Layer& second, int max_degree, Layer& out)
{
    for (const auto& [b1, a1] : first)
        for (const auto& [b2, a2] : second) {
            if (b1.size() + b2.size() > max_degree)
                continue;
            const Rat a12 = a1 * a2;
            for (auto [i, mi] : b1.multiplicities()) {
                Partition r1 = b1.without(i);
                for (auto [j, mj] : b2.multiplicities())
                    accumulate(out, r1.merged(b2.without(j)).with(i + j), a12 * (i * j * mi * mj));
            }
        }
}

inline TruncatedH solve_join_cut(Family family, int max_degree, int max_r)
{
    require(max_degree >= 1, "join-cut: max degree must be >= 1");
    require(max_r >= 0, "join-cut: max transposition count must be >= 0");
    std::vector<Layer> a(static_cast<std::size_t>(max_r) + 1);
    a[0][Partition{1}] = 1;
    for (int r = 0; r < max_r; ++r) {
        Layer rhs;
        cut_join(a[r], rhs);
        for (int r1 = 0; r1 <= r; ++r1)
            product_term(a[r1], a[r - r1], max_degree, rhs);
        for (auto& [alpha, v] : rhs) {
            if (alpha.size() > max_degree)
                continue;
            Rat next = family == Family::monotone ? v / alpha.size() : v / (2 * (r + 1));
            a[r + 1].emplace(alpha, std::move(next));
        }
    }
    TruncatedH out(family, max_degree, max_r);
    for (int r = 0; r <= max_r; ++r)
        for (const auto& [alpha, v] : a[r]) {
            Rat h = v * Rat(factorial(alpha.size()));
            if (family == Family::classical)
                h *= Rat(factorial(r));
            out.set(alpha, r, h);
        }
    return out;
}

} // namespace detail

/// Monotone Hurwitz numbers from the monotone join-cut equation.
inline TruncatedH solve_monotone(int max_degree, int max_r)
{
    return detail::solve_join_cut(Family::monotone, max_degree, max_r);
}

/// Classical Hurwitz numbers from the classical join-cut equation.
inline TruncatedH solve_classical(int max_degree, int max_r)
{
    return detail::solve_join_cut(Family::classical, max_degree, max_r);
}

inline TruncatedH solve(Family family, int max_degree, int max_r)
{
    return detail::solve_join_cut(family, max_degree, max_r);
}

/// Table deep enough to contain genus g for every |alpha| <= max_degree.
inline TruncatedH solve_through_genus(Family family, int max_degree, int genus)
{
    return solve(family, max_degree, transposition_count(genus, max_degree, max_degree));
}

} // namespace hurwitz

#pragma once

// Ground-truth counts of transposition factorizations in S_d.
//
// A factorization is a tuple (rho, tau_1, ..., tau_r) with rho of cycle type
// alpha, each tau_i = (a_i b_i), a_i < b_i, and rho tau_1 ... tau_r = id. The
// monotone variant additionally asks b_1 <= ... <= b_r. Since rho is forced to
// be (tau_1 ... tau_r)^{-1}, which has the cycle type of tau_1 ... tau_r, the
// count is the number of transposition sequences whose product has type alpha.
// Transitivity of <rho, tau_i> is connectivity of the graph with edges {a_i, b_i}.
//
// Two independent routes are provided:
//  - dp: dynamic programming over (group element, transposition count), one
//    b-layer at a time, giving counts without transitivity; transitive counts
//    are then recovered by inclusion-exclusion over the block containing the
//    point 1 (the orbit decomposition).
//  - dfs: plain depth-first enumeration of every sequence.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "family.hpp"
#include "permutation.hpp"

namespace hurwitz::oracle {

inline constexpr int kMaxDegreeDP = 8;
inline constexpr int kMaxLengthDP = 24;
inline constexpr int kMaxDegreeDFS = 7;
inline constexpr double kMaxDfsNodes = 2e8;

struct FactorQuery {
    Partition alpha;
    std::optional<Partition> beta; // absent means 1^d
    int r = 0;
    bool monotone = true;
    bool transitive = true;
};

/// (alpha, r) -> exact count. Absent entries are zero.
class CountTable {
public:
    CountTable() = default;
    CountTable(int max_degree, int max_r) : max_degree_(max_degree), max_r_(max_r) {}

    int max_degree() const noexcept { return max_degree_; }
    int max_r() const noexcept { return max_r_; }

    BigInt at(const Partition& alpha, int r) const
    {
        if (alpha.size() > max_degree_ || r > max_r_)
            throw invalid_argument("CountTable: (" + alpha.str() + ", " + std::to_string(r) + ") outside table");
        auto it = counts_.find({alpha, r});
        return it == counts_.end() ? BigInt(0) : it->second;
    }

    void add(const Partition& alpha, int r, const BigInt& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = counts_.try_emplace({alpha, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                counts_.erase(it);
        }
    }

    const std::map<std::pair<Partition, int>, BigInt>& entries() const noexcept { return counts_; }

private:
    int max_degree_ = 0;
    int max_r_ = 0;
    std::map<std::pair<Partition, int>, BigInt> counts_;
};

namespace detail {

inline void check_dp_bounds(int d, int r_max)
{
    if (d < 1)
        throw invalid_argument("oracle: degree must be >= 1");
    if (r_max < 0)
        throw invalid_argument("oracle: transposition count must be >= 0");
    if (d > kMaxDegreeDP)
        throw resource_limit("oracle: degree " + std::to_string(d) + " exceeds the DP bound d <= " +
                             std::to_string(kMaxDegreeDP));
    if (r_max > kMaxLengthDP)
        throw resource_limit("oracle: transposition count " + std::to_string(r_max) + " exceeds the DP bound r <= " +
                             std::to_string(kMaxLengthDP));
}

/// counts[r][idx]: sequences of length r with product elements()[idx],
/// no transitivity requirement.
inline std::vector<std::vector<BigInt>> product_counts(const SymmetricGroup& g, int r_max, Family family)
{
    const std::size_t n = g.order();
    std::vector<std::vector<BigInt>> f(static_cast<std::size_t>(r_max) + 1, std::vector<BigInt>(n, 0));
    f[0][g.identity_index()] = 1;
    const auto& ts = g.transpositions();
    if (family == Family::classical) {
        for (int r = 0; r < r_max; ++r)
            for (std::size_t i = 0; i < n; ++i) {
                if (f[r][i] == 0)
                    continue;
                for (std::size_t t = 0; t < ts.size(); ++t)
                    f[r + 1][g.times(i, t)] += f[r][i];
            }
        return f;
    }
    // Monotone: sweep b upward. Within a layer, lengths are processed in
    // increasing order so that several transpositions with the same b chain.
    std::size_t t_begin = 0;
    for (int b = 1; b < g.degree(); ++b) {
        const std::size_t t_end = t_begin + static_cast<std::size_t>(b);
        for (int r = 0; r < r_max; ++r)
            for (std::size_t i = 0; i < n; ++i) {
                if (f[r][i] == 0)
                    continue;
                for (std::size_t t = t_begin; t < t_end; ++t)
                    f[r + 1][g.times(i, t)] += f[r][i];
            }
        t_begin = t_end;
    }
    return f;
}

using Graded = std::map<Partition, std::vector<BigInt>>; // alpha -> counts indexed by r

inline Graded all_counts_graded(int d, int r_max, Family family)
{
    SymmetricGroup g(d);
    auto f = product_counts(g, r_max, family);
    Graded out;
    for (const auto& alpha : partitions_of(d))
        out.emplace(alpha, std::vector<BigInt>(static_cast<std::size_t>(r_max) + 1, 0));
    for (int r = 0; r <= r_max; ++r)
        for (std::size_t i = 0; i < g.order(); ++i)
            if (f[r][i] != 0)
                out[g.type_of(i)][r] += f[r][i];
    return out;
}

} // namespace detail

/// Non-transitive counts for every alpha |- d at length r (zeros included).
inline std::map<Partition, BigInt> count_all(int d, int r, Family family)
{
    detail::check_dp_bounds(d, r);
    std::map<Partition, BigInt> out;
    for (auto& [alpha, by_r] : detail::all_counts_graded(d, r, family))
        out.emplace(alpha, by_r[r]);
    return out;
}

inline std::map<Partition, BigInt> count_monotone_all(int d, int r)
{
    return count_all(d, r, Family::monotone);
}

/// Transitive counts for all |alpha| <= max_degree, r <= max_r, via DP and the
/// orbit decomposition.
///
/// A sequence on [d] splits by orbits into a set partition, with a transitive
/// sequence on each block (relabelled order-preservingly). Conversely, block
/// sequences recombine in exactly one monotone order (b-values of distinct
/// blocks differ), or in multinomially many orders in the classical case.
/// Hence with the block B containing the point 1,
///   N_d(alpha, r) = sum_{k} C(d-1, k-1) sum T_k(beta, r1) N_{d-k}(gamma, r2) w(r1, r2),
/// beta + gamma = alpha, r1 + r2 = r, w = 1 (monotone) or C(r, r1) (classical),
/// and the k = d term is T_d itself.
inline CountTable transitive_counts(int max_degree, int max_r, Family family)
{
    detail::check_dp_bounds(max_degree, max_r);
    std::vector<detail::Graded> all(static_cast<std::size_t>(max_degree) + 1);
    std::vector<detail::Graded> conn(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 1; d <= max_degree; ++d)
        all[d] = detail::all_counts_graded(d, max_r, family);

    CountTable table(max_degree, max_r);
    for (int d = 1; d <= max_degree; ++d) {
        detail::Graded t = all[d];
        for (int k = 1; k < d; ++k) {
            const BigInt ways = binomial(d - 1, k - 1);
            for (const auto& [beta, tb] : conn[k])
                for (const auto& [gamma, ng] : all[d - k]) {
                    auto& target = t[beta.merged(gamma)];
                    for (int r1 = 0; r1 <= max_r; ++r1) {
                        if (tb[r1] == 0)
                            continue;
                        for (int r2 = 0; r1 + r2 <= max_r; ++r2) {
                            if (ng[r2] == 0)
                                continue;
                            BigInt term = ways * tb[r1] * ng[r2];
                            if (family == Family::classical)
                                term *= binomial(r1 + r2, r1);
                            target[r1 + r2] -= term;
                        }
                    }
                }
        }
        for (const auto& [alpha, by_r] : t)
            for (int r = 0; r <= max_r; ++r) {
                if (by_r[r] < 0)
                    throw verification_failure("oracle: negative transitive count at " + alpha.str());
                table.add(alpha, r, by_r[r]);
            }
        conn[d] = std::move(t);
    }
    return table;
}

inline BigInt count_transitive(const Partition& alpha, int r, Family family)
{
    if (alpha.size() < 1)
        throw invalid_argument("oracle: partition must be nonempty");
    return transitive_counts(alpha.size(), r, family).at(alpha, r);
}

inline BigInt count_monotone_transitive(const Partition& alpha, int r)
{
    return count_transitive(alpha, r, Family::monotone);
}

inline BigInt count_classical_transitive(const Partition& alpha, int r)
{
    return count_transitive(alpha, r, Family::classical);
}

namespace detail {

inline double dfs_node_estimate(int d, int r_max, Family family)
{
    // Number of sequences of length <= r_max.
    if (family == Family::classical) {
        double t = d * (d - 1) / 2.0, total = 0, layer = 1;
        for (int r = 0; r <= r_max; ++r, layer *= t)
            total += layer;
        return total;
    }
    // complete homogeneous h_r(1, 2, ..., d-1)
    std::vector<double> h(static_cast<std::size_t>(r_max) + 1, 0.0);
    h[0] = 1;
    for (int x = 1; x < d; ++x)
        for (int r = 1; r <= r_max; ++r)
            h[r] += x * h[r - 1];
    double total = 0;
    for (double v : h)
        total += v;
    return total;
}

struct DfsState {
    int d;
    int r_max;
    Family family;
    bool transitive;
    std::vector<std::pair<int, int>> seq;
};

struct Dsu {
    std::array<std::uint8_t, kMaxPermDegree> parent{};
    int components = 0;
    explicit Dsu(int d) : components(d)
    {
        for (int i = 0; i < d; ++i)
            parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = static_cast<std::uint8_t>(b);
            --components;
        }
    }
};

template <class Visit>
void dfs_sequences(int d, int r_max, Family family, int depth, int min_b, const Perm& product, const Dsu& dsu,
                   Visit& visit)
{
    visit(depth, product, dsu);
    if (depth == r_max)
        return;
    for (int b = family == Family::monotone ? min_b : 1; b < d; ++b)
        for (int a = 0; a < b; ++a) {
            Dsu next = dsu;
            next.unite(a, b);
            dfs_sequences(d, r_max, family, depth + 1, b, times_transposition(product, a, b, d), next, visit);
        }
}

} // namespace detail

/// Naive enumeration of every transposition sequence of length <= r_max in
/// S_d; counts transitive ones by (cycle type of product, length).
inline CountTable dfs_transitive_counts(int d, int r_max, Family family)
{
    if (d < 1 || r_max < 0)
        throw invalid_argument("dfs oracle: need d >= 1 and r >= 0");
    if (d > kMaxDegreeDFS)
        throw resource_limit("dfs oracle: degree " + std::to_string(d) + " exceeds d <= " +
                             std::to_string(kMaxDegreeDFS));
    if (detail::dfs_node_estimate(d, r_max, family) > kMaxDfsNodes)
        throw resource_limit("dfs oracle: search space too large for d = " + std::to_string(d) +
                             ", r = " + std::to_string(r_max));
    CountTable table(d, r_max);
    std::map<std::pair<std::size_t, int>, long long> raw; // (perm rank, r) -> count
    SymmetricGroup g(d);
    auto visit = [&](int depth, const Perm& product, const detail::Dsu& dsu) {
        if (dsu.components == 1)
            ++raw[{g.rank(product), depth}];
    };
    detail::dfs_sequences(d, r_max, family, 0, 1, identity_perm(d), detail::Dsu(d), visit);
    for (const auto& [key, c] : raw)
        table.add(g.type_of(key.first), key.second, BigInt(static_cast<long>(c)));
    return table;
}

/// Double Hurwitz count: tuples (rho, sigma, tau_1..tau_r) with rho of type
/// alpha, sigma of type beta, rho sigma tau_1 ... tau_r = id, by brute force.
inline BigInt count_double(const Partition& alpha, const Partition& beta, int r, Family family, bool transitive)
{
    if (alpha.size() != beta.size())
        throw invalid_argument("count_double: |alpha| != |beta|");
    const int d = alpha.size();
    if (d < 1 || r < 0)
        throw invalid_argument("count_double: need d >= 1 and r >= 0");
    if (d > 6)
        throw resource_limit("count_double: degree " + std::to_string(d) + " exceeds d <= 6");
    if (detail::dfs_node_estimate(d, r, family) > kMaxDfsNodes / 10)
        throw resource_limit("count_double: search space too large");

    SymmetricGroup g(d);
    std::vector<Perm> sigmas;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.type_of(i) == beta)
            sigmas.push_back(g.elements()[i]);

    // Cache per product element and connectivity signature is overkill here;
    // sequences are few.
    BigInt total = 0;
    auto visit = [&](int depth, const Perm& product, const detail::Dsu& dsu) {
        if (depth != r)
            return;
        for (const auto& sigma : sigmas) {
            // rho = (sigma * product)^{-1}; same cycle type as sigma * product
            if (cycle_type(compose(sigma, product, d), d) != alpha)
                continue;
            if (transitive) {
                detail::Dsu full = dsu;
                for (int x = 0; x < d; ++x)
                    full.unite(x, sigma[x]);
                if (full.components != 1)
                    continue;
            }
            ++total;
        }
    };
    detail::dfs_sequences(d, r, family, 0, 1, identity_perm(d), detail::Dsu(d), visit);
    return total;
}

inline BigInt count_monotone_double(const Partition& alpha, const Partition& beta, int r)
{
    return count_double(alpha, beta, r, Family::monotone, true);
}

/// Dispatches a FactorQuery to the appropriate route.
inline BigInt count(const FactorQuery& q)
{
    const Family family = q.monotone ? Family::monotone : Family::classical;
    const int d = q.alpha.size();
    const bool single = !q.beta || *q.beta == Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
    if (q.beta && q.beta->size() != d)
        throw invalid_argument("FactorQuery: |alpha| != |beta|");
    if (single && q.transitive)
        return count_transitive(q.alpha, q.r, family);
    if (single)
        return count_all(d, q.r, family).at(q.alpha);
    return count_double(q.alpha, *q.beta, q.r, family, q.transitive);
}

} // namespace hurwitz::oracle

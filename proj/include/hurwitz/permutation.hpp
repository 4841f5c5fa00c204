#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "partition.hpp"

namespace hurwitz {

/// Permutation of {0..d-1}, d <= 8, stored as its image array.
///
/// Convention: permutations act on the right, so the product s*t means
/// "apply s, then t": (s*t)[x] = t[s[x]]. Products of factor lists are
/// evaluated left to right.
using Perm = std::array<std::uint8_t, 8>;

inline constexpr int kMaxPermDegree = 8;

inline Perm identity_perm(int d)
{
    Perm p{};
    for (int i = 0; i < d; ++i)
        p[i] = static_cast<std::uint8_t>(i);
    return p;
}

inline Perm compose(const Perm& s, const Perm& t, int d)
{
    Perm r{};
    for (int i = 0; i < d; ++i)
        r[i] = t[s[i]];
    return r;
}

inline Perm inverse(const Perm& s, int d)
{
    Perm r{};
    for (int i = 0; i < d; ++i)
        r[s[i]] = static_cast<std::uint8_t>(i);
    return r;
}

/// s * (a b): relabel the values a and b in the image array.
inline Perm times_transposition(Perm s, int a, int b, int d)
{
    for (int i = 0; i < d; ++i) {
        if (s[i] == a)
            s[i] = static_cast<std::uint8_t>(b);
        else if (s[i] == b)
            s[i] = static_cast<std::uint8_t>(a);
    }
    return s;
}

inline Partition cycle_type(const Perm& s, int d)
{
    std::array<bool, kMaxPermDegree> seen{};
    std::vector<int> lens;
    for (int i = 0; i < d; ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = s[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

/// Dense model of S_d for d <= 8: every element indexed by lexicographic
/// rank, with right multiplication by each transposition tabulated.
class SymmetricGroup {
public:
    struct Transposition {
        int a, b; // a < b
    };

    explicit SymmetricGroup(int d) : d_(d)
    {
        if (d < 1 || d > kMaxPermDegree)
            throw resource_limit("SymmetricGroup: degree must be in [1, 8]");
        for (int b = 1; b < d; ++b)
            for (int a = 0; a < b; ++a)
                transpositions_.push_back({a, b});
        Perm p = identity_perm(d);
        do {
            elements_.push_back(p);
        } while (std::next_permutation(p.begin(), p.begin() + d));
        types_.reserve(elements_.size());
        for (const auto& e : elements_)
            types_.push_back(cycle_type(e, d));
        const std::size_t nt = transpositions_.size();
        right_.resize(elements_.size() * nt);
        for (std::size_t i = 0; i < elements_.size(); ++i)
            for (std::size_t t = 0; t < nt; ++t)
                right_[i * nt + t] = static_cast<std::uint32_t>(
                    rank(times_transposition(elements_[i], transpositions_[t].a, transpositions_[t].b, d)));
    }

    int degree() const noexcept { return d_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Perm>& elements() const noexcept { return elements_; }
    const std::vector<Transposition>& transpositions() const noexcept { return transpositions_; }
    const Partition& type_of(std::size_t idx) const { return types_[idx]; }
    std::size_t identity_index() const noexcept { return 0; }

    /// Index of elements()[idx] * transpositions()[t].
    std::size_t times(std::size_t idx, std::size_t t) const { return right_[idx * transpositions_.size() + t]; }

    /// Lexicographic rank via the Lehmer code.
    std::size_t rank(const Perm& p) const
    {
        std::size_t r = 0;
        for (int i = 0; i < d_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < d_; ++j)
                if (p[j] < p[i])
                    ++smaller;
            r = r * static_cast<std::size_t>(d_ - i) + static_cast<std::size_t>(smaller);
        }
        return r;
    }

private:
    int d_;
    std::vector<Perm> elements_;
    std::vector<Partition> types_;
    std::vector<Transposition> transpositions_; // ordered by b, then a
    std::vector<std::uint32_t> right_;
};

} // namespace hurwitz

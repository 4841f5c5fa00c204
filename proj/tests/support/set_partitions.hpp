#pragma once

// Rebuilds non-transitive counts from transitive ones by explicitly listing
// every set partition of {1..d} into orbits.

#include <map>
#include <utility>
#include <vector>

#include "hurwitz/oracle.hpp"

namespace test_support {

using hurwitz::BigInt;
using hurwitz::Family;
using hurwitz::Partition;

inline void set_partitions_rec(int next, int d, std::vector<int>& block_sizes, std::vector<std::vector<int>>& out)
{
    if (next == d) {
        out.push_back(block_sizes);
        return;
    }
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        ++block_sizes[b];
        set_partitions_rec(next + 1, d, block_sizes, out);
        --block_sizes[b];
    }
    block_sizes.push_back(1);
    set_partitions_rec(next + 1, d, block_sizes, out);
    block_sizes.pop_back();
}

/// Block sizes of each set partition of {0..d-1}, one entry per set partition.
inline std::vector<std::vector<int>> set_partition_block_sizes(int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> sizes;
    set_partitions_rec(0, d, sizes, out);
    return out;
}

inline std::map<std::pair<Partition, int>, BigInt> rebuild_all_from_transitive(const hurwitz::oracle::CountTable& conn,
                                                                               int d, int r_max, Family family)
{
    std::map<std::pair<Partition, int>, BigInt> total;
    for (const auto& sizes : set_partition_block_sizes(d)) {
        // partial products: (type so far, length so far) -> weighted count
        std::map<std::pair<Partition, int>, BigInt> acc{{{Partition{}, 0}, 1}};
        for (int k : sizes) {
            std::map<std::pair<Partition, int>, BigInt> next;
            for (const auto& [key, c] : acc)
                for (const auto& beta : hurwitz::partitions_of(k))
                    for (int r = 0; key.second + r <= r_max; ++r) {
                        BigInt t = conn.at(beta, r);
                        if (t == 0)
                            continue;
                        BigInt w = c * t;
                        if (family == Family::classical)
                            w *= hurwitz::binomial(key.second + r, r);
                        next[{key.first.merged(beta), key.second + r}] += w;
                    }
            acc = std::move(next);
        }
        for (const auto& [key, c] : acc)
            total[key] += c;
    }
    return total;
}

} // namespace test_support

#pragma once

// Small random ring elements for operator cross-checks.

#include <random>

#include "hurwitz/relement.hpp"

namespace hurwitz::testing {

struct RandomShape {
    int min_exp = 0;
    int max_exp = 6;
    bool even_only = true;
    int max_h_weight = 2;
    int min_v = 0;
    int max_v = 0;
    int max_terms = 4;
};

inline RElement random_relement(std::mt19937& rng, const RandomShape& shape)
{
    std::uniform_int_distribution<int> n_terms(1, shape.max_terms), exp(shape.min_exp, shape.max_exp),
        vexp(shape.min_v, shape.max_v), hw(0, shape.max_h_weight), num(-5, 5), den(1, 4);
    RElement r;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) {
        int e = exp(rng);
        if (shape.even_only && e % 2 != 0)
            e = e > shape.min_exp ? e - 1 : e + 1;
        const auto hs = partitions_of(hw(rng));
        std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
        int c = num(rng);
        if (c == 0)
            c = 1;
        r.add(e, CoeffPoly::mono(vexp(rng), hs[pick(rng)], make_rat(c, den(rng))));
    }
    return r;
}

} // namespace hurwitz::testing

#pragma once

#include <span>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace hurwitz {

inline BigInt factorial(long n)
{
    detail::require(n >= 0, "factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Binomial coefficient C(n, k) for integer n (any sign) and k >= 0; 0 for k < 0.
inline BigInt binomial(long n, long k)
{
    if (k < 0)
        return 0;
    BigInt r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        BigInt nn(n);
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

/// Generalised binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
inline Rat binomial(const Rat& a, long k)
{
    if (k < 0)
        return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i)
        r *= (a - i);
    r /= Rat(factorial(k));
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Integer power of a rational; negative exponents invert (base must be nonzero).
inline Rat pow(const Rat& base, long e)
{
    if (e < 0) {
        if (base == 0)
            throw invalid_argument("zero to a negative power");
        return 1 / pow(base, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rat(n, d);
}

/// |Aut alpha| = product over distinct parts of (multiplicity)!.
inline BigInt aut_order(const Partition& alpha)
{
    BigInt r = 1;
    for (auto [part, mult] : alpha.multiplicities())
        r *= factorial(mult);
    return r;
}

/// Rising product a(a+1)...(a+k-1). For k < 0 the reciprocal convention
/// a^(k) = 1 / ((a+k)(a+k+1)...(a-1)) is used; a vanishing factor is an error.
inline Rat rising(const Rat& a, long k)
{
    Rat r = 1;
    if (k >= 0) {
        for (long i = 0; i < k; ++i)
            r *= a + i;
        return r;
    }
    for (long i = k; i < 0; ++i) {
        Rat f = a + i;
        if (f == 0)
            throw invalid_argument("rising product with negative length hits a zero factor");
        r *= f;
    }
    return 1 / r;
}

inline BigInt central_binomial(long k)
{
    detail::require(k >= 0, "central_binomial: negative index");
    return binomial(2 * k, k);
}

/// e_k of a list of integers.
inline BigInt elementary_symmetric(std::span<const BigInt> values, int k)
{
    detail::require(k >= 0 && k <= static_cast<int>(values.size()), "elementary_symmetric: k out of range");
    std::vector<BigInt> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (const auto& x : values)
        for (int j = k; j >= 1; --j)
            e[j] += e[j - 1] * x;
    return e[k];
}

/// e_k over the multiset {2 alpha_i + 1}.
inline BigInt elem_sym_shifted(const Partition& alpha, int k)
{
    detail::require(k >= 0 && k <= alpha.length(), "elem_sym_shifted: k out of range");
    std::vector<BigInt> vals;
    for (int p : alpha)
        vals.emplace_back(2 * p + 1);
    return elementary_symmetric(vals, k);
}

/// e_k over the parts of alpha.
inline BigInt elem_sym_parts(const Partition& alpha, int k)
{
    detail::require(k >= 0 && k <= alpha.length(), "elem_sym_parts: k out of range");
    std::vector<BigInt> vals;
    for (int p : alpha)
        vals.emplace_back(p);
    return elementary_symmetric(vals, k);
}

/// Bernoulli number B_n for even n >= 2, read off z/(e^z - 1) by inverting
/// the series (e^z - 1)/z = sum z^k/(k+1)!.
inline Rat bernoulli(int n)
{
    detail::require(n >= 2 && n % 2 == 0, "bernoulli: index must be even and >= 2");
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1), inv(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        a[k] = Rat(1) / Rat(factorial(k + 1));
    inv[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat s = 0;
        for (int k = 1; k <= m; ++k)
            s += a[k] * inv[m - k];
        inv[m] = -s;
    }
    return inv[n] * Rat(factorial(n));
}

} // namespace hurwitz

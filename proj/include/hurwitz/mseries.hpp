#pragma once

// Truncated multivariate power series over Q in variables x_1, x_2, ...
// where x_k has weight k. A monomial is the multiset of its variable indices,
// stored as a Partition, so its weight is the partition size.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace hurwitz {

/// Which monomials a series keeps: weight at most max_weight and, when a cap
/// is set, only divisors of the cap (as multisets). The cap is what makes a
/// single coefficient [x_alpha] cheap: everything else is dropped eagerly.
struct Truncation {
    int max_weight = 0;
    std::optional<Partition> cap;

    static Truncation weight(int w) { return {w, std::nullopt}; }
    static Truncation for_coefficient(const Partition& alpha) { return {alpha.size(), alpha}; }

    bool admits(const Partition& m) const { return m.size() <= max_weight && (!cap || m.divides(*cap)); }

    bool admits_variable(int k) const { return k <= max_weight && (!cap || cap->multiplicity(k) > 0); }

    /// Longest monomial that can survive.
    int max_length() const { return cap ? cap->length() : max_weight; }

    bool covers(const Truncation& o) const
    {
        if (o.max_weight > max_weight)
            return false;
        if (!cap)
            return true;
        return o.cap && o.cap->divides(*cap);
    }

    Truncation meet(const Truncation& o) const
    {
        Truncation t{std::min(max_weight, o.max_weight), std::nullopt};
        if (cap && o.cap) {
            std::vector<int> parts;
            for (auto [k, m] : cap->multiplicities())
                for (int i = 0; i < std::min(m, o.cap->multiplicity(k)); ++i)
                    parts.push_back(k);
            t.cap = Partition(std::move(parts));
        } else if (cap) {
            t.cap = cap;
        } else {
            t.cap = o.cap;
        }
        return t;
    }

    bool operator==(const Truncation&) const = default;
};

class MSeries {
public:
    using Terms = std::map<Partition, Rat>;

    MSeries() = default;
    explicit MSeries(Truncation t) : trunc_(std::move(t)) {}

    static MSeries constant(const Truncation& t, const Rat& c)
    {
        MSeries s(t);
        s.add_term(Partition{}, c);
        return s;
    }

    static MSeries variable(const Truncation& t, int k, const Rat& c = 1)
    {
        MSeries s(t);
        s.add_term(Partition{k}, c);
        return s;
    }

    const Truncation& truncation() const noexcept { return trunc_; }
    int max_weight() const noexcept { return trunc_.max_weight; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c x_m; silently dropped when m is outside the truncation.
    void add_term(const Partition& m, const Rat& c)
    {
        if (c == 0 || !trunc_.admits(m))
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rat coeff(const Partition& m) const
    {
        if (!trunc_.admits(m))
            throw invalid_argument("MSeries: coefficient " + m.str() + " lies outside the truncation");
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant_term() const { return coeff(Partition{}); }

    MSeries truncated(const Truncation& t) const
    {
        MSeries out(trunc_.meet(t));
        for (const auto& [m, c] : terms_)
            if (out.trunc_.admits(m))
                out.terms_.emplace(m, c);
        return out;
    }

    MSeries& operator+=(const MSeries& o)
    {
        if (!(o.trunc_ == trunc_))
            *this = truncated(o.trunc_);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    MSeries& operator-=(const MSeries& o)
    {
        if (!(o.trunc_ == trunc_))
            *this = truncated(o.trunc_);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    MSeries& operator*=(const Rat& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    MSeries operator-() const
    {
        MSeries out = *this;
        out *= Rat(-1);
        return out;
    }

    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
    friend MSeries operator*(MSeries a, const Rat& s) { return a *= s; }
    friend MSeries operator*(const Rat& s, MSeries a) { return a *= s; }

    friend MSeries operator*(const MSeries& a, const MSeries& b)
    {
        MSeries out(a.trunc_.meet(b.trunc_));
        const int w = out.trunc_.max_weight;
        for (const auto& [m1, c1] : a.terms_) {
            if (m1.size() > w)
                continue;
            for (const auto& [m2, c2] : b.terms_) {
                if (m1.size() + m2.size() > w)
                    continue;
                out.add_term(m1.merged(m2), c1 * c2);
            }
        }
        return out;
    }

    MSeries& operator*=(const MSeries& o) { return *this = *this * o; }

    /// Exact equality of coefficients on the common truncation.
    bool equals_on(const MSeries& o, const Truncation& t) const
    {
        return truncated(t).terms_ == o.truncated(t).terms_;
    }

    bool operator==(const MSeries& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

    std::string str(const std::string& var = "q") const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += to_string(c);
            for (int k : m)
                s += "*" + var + std::to_string(k);
        }
        return s;
    }

private:
    Truncation trunc_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MSeries& s)
{
    return os << s.str();
}

/// sum_n coeffs[n] x^n for x without constant term.
inline MSeries apply_power_series(const std::vector<Rat>& coeffs, const MSeries& x)
{
    if (x.constant_term() != 0)
        throw invalid_argument("apply_power_series: argument has a constant term");
    const Truncation& t = x.truncation();
    const int n_max = std::min<int>(static_cast<int>(coeffs.size()) - 1, t.max_length());
    MSeries out(t);
    for (int n = n_max; n >= 0; --n) {
        out = out * x;
        out.add_term(Partition{}, coeffs[n]);
    }
    return out;
}

/// (1 - x)^e for rational e.
inline MSeries one_minus_pow(const MSeries& x, const Rat& e)
{
    const int n = x.truncation().max_length();
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = binomial(e, k) * (k % 2 ? -1 : 1);
    return apply_power_series(c, x);
}

/// log(1 / (1 - x)) = sum_{m >= 1} x^m / m.
inline MSeries log_inv_one_minus(const MSeries& x)
{
    const int n = x.truncation().max_length();
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k)
        c[k] = Rat(1, k);
    return apply_power_series(c, x);
}

inline MSeries exp_series(const MSeries& x)
{
    const int n = x.truncation().max_length();
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = Rat(1) / Rat(factorial(k));
    return apply_power_series(c, x);
}

/// Multiplicative inverse; the constant term must be nonzero.
inline MSeries inverse(const MSeries& f)
{
    const Rat c0 = f.constant_term();
    if (c0 == 0)
        throw invalid_argument("MSeries inverse: zero constant term");
    MSeries y = f * (1 / c0);
    MSeries x = MSeries::constant(f.truncation(), 1) - y; // y = 1 - x
    return one_minus_pow(x, -1) * (1 / c0);
}

/// Non-negative integer power by repeated squaring.
inline MSeries power(const MSeries& f, int e)
{
    detail::require(e >= 0, "MSeries power: negative exponent");
    MSeries result = MSeries::constant(f.truncation(), 1);
    MSeries base = f;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

/// Replaces each variable x_k of f by images[k] (images[0] unused). Images
/// must have no constant term and only monomials of weight >= k, so that the
/// result is well defined on the truncation of the images.
inline MSeries substitute(const MSeries& f, const std::vector<MSeries>& images, const Truncation& t)
{
    MSeries out(t);
    std::map<std::pair<int, int>, MSeries> powers; // (k, e) -> images[k]^e
    auto image_power = [&](int k, int e) -> const MSeries& {
        detail::require(k < static_cast<int>(images.size()), "substitute: no image for variable " + std::to_string(k));
        int have = 0;
        for (int i = e; i >= 1; --i)
            if (powers.count({k, i})) {
                have = i;
                break;
            }
        for (int i = have + 1; i <= e; ++i) {
            MSeries base = images[k].truncated(t);
            MSeries v = i == 1 ? base : powers.at({k, i - 1}) * base;
            powers.emplace(std::make_pair(k, i), std::move(v));
        }
        return powers.at({k, e});
    };
    for (const auto& [m, c] : f.terms()) {
        if (m.size() > t.max_weight)
            continue;
        MSeries term = MSeries::constant(t, c);
        for (auto [k, e] : m.multiplicities())
            term *= image_power(k, e);
        out += term;
    }
    return out;
}

} // namespace hurwitz

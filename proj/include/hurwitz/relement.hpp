#pragma once

// Symbolic elements of the ring used to solve the genus recursion.
//
// CoeffPoly is a polynomial over Q in v = (1 - eta)^{-1} (any integer power)
// and h_k = eta_k (1 - eta)^{-1}, where h_k has weighted degree k.
// RElement is a finite sum  sum_e c_e s^e  with s = (1 - 4y)^{-1/2} and
// c_e a CoeffPoly; e is an integer, so half powers of (1 - 4y) are exact.
// u = s^2 = (1 - 4y)^{-1} and Y = y (1 - 4y)^{-1} = (u - 1) / 4.

#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "combinatorics.hpp"

namespace hurwitz {

/// v^v_exp * prod h_k over the parts of h.
struct CoeffMono {
    int v_exp = 0;
    Partition h;

    int weight() const { return h.size(); }
    auto operator<=>(const CoeffMono&) const = default;
};

class CoeffPoly {
public:
    using Terms = std::map<CoeffMono, Rat>;

    CoeffPoly() = default;
    CoeffPoly(const Rat& c) { add_term({}, c); } // NOLINT: constants convert implicitly
    CoeffPoly(int c) : CoeffPoly(Rat(c)) {}      // NOLINT

    static CoeffPoly mono(int v_exp, const Partition& h, const Rat& c = 1)
    {
        CoeffPoly p;
        p.add_term({v_exp, h}, c);
        return p;
    }
    static CoeffPoly v(int e = 1) { return mono(e, {}); }
    static CoeffPoly h(int k) { return mono(0, Partition{k}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const CoeffMono& m, const Rat& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rat coeff(const CoeffMono& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Largest weighted degree in the h_k; -1 for zero.
    int weighted_degree() const
    {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.weight());
        return d;
    }

    bool v_free() const
    {
        for (const auto& [m, c] : terms_)
            if (m.v_exp != 0)
                return false;
        return true;
    }

    CoeffPoly times_v(int e) const
    {
        CoeffPoly out;
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(CoeffMono{m.v_exp + e, m.h}, c);
        return out;
    }

    CoeffPoly& operator+=(const CoeffPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    CoeffPoly& operator-=(const CoeffPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    CoeffPoly& operator*=(const Rat& s)
    {
        if (s == 0)
            terms_.clear();
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }
    CoeffPoly operator-() const
    {
        CoeffPoly out = *this;
        return out *= Rat(-1);
    }

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(CoeffPoly a, const Rat& s) { return a *= s; }
    friend CoeffPoly operator*(const Rat& s, CoeffPoly a) { return a *= s; }

    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b)
    {
        CoeffPoly out;
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_)
                out.add_term({m1.v_exp + m2.v_exp, m1.h.merged(m2.h)}, c1 * c2);
        return out;
    }
    CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

    bool operator==(const CoeffPoly&) const = default;

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += to_string(c);
            if (m.v_exp)
                s += "*v^" + std::to_string(m.v_exp);
            for (int k : m.h)
                s += "*h" + std::to_string(k);
        }
        return s;
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const CoeffPoly& p)
{
    return os << p.str();
}

class RElement {
public:
    using Terms = std::map<int, CoeffPoly>; // s-exponent -> coefficient

    RElement() = default;
    RElement(const CoeffPoly& c) { add(0, c); } // NOLINT
    RElement(const Rat& c) : RElement(CoeffPoly(c)) {} // NOLINT
    RElement(int c) : RElement(CoeffPoly(c)) {}        // NOLINT

    /// c s^e.
    static RElement s_pow(int e, const CoeffPoly& c = 1)
    {
        RElement r;
        r.add(e, c);
        return r;
    }
    static RElement u_pow(int k, const CoeffPoly& c = 1) { return s_pow(2 * k, c); }
    /// Y = (u - 1) / 4.
    static RElement Y() { return (u_pow(1) - u_pow(0)) * Rat(1, 4); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(int e, const CoeffPoly& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_term(int e, const CoeffMono& m, const Rat& c)
    {
        if (c == 0)
            return;
        CoeffPoly p;
        p.add_term(m, c);
        add(e, p);
    }

    CoeffPoly coeff(int e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? CoeffPoly() : it->second;
    }

    /// Multiply by s^k.
    RElement shifted(int k) const
    {
        RElement out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e + k, c);
        return out;
    }

    RElement times_v(int k) const
    {
        RElement out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, c.times_v(k));
        return out;
    }

    /// All exponents even and nonnegative, and no v.
    bool is_ring_element() const
    {
        for (const auto& [e, c] : terms_)
            if (e < 0 || e % 2 != 0 || !c.v_free())
                return false;
        return true;
    }

    /// max over monomials of (u-degree + h-weight); -1 for zero. Needs is_ring_element().
    int weighted_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e / 2 + c.weighted_degree());
        return d;
    }

    bool in_R(int d) const { return is_ring_element() && weighted_degree() <= d; }

    RElement& operator+=(const RElement& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, c);
        return *this;
    }
    RElement& operator-=(const RElement& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, -c);
        return *this;
    }
    RElement& operator*=(const CoeffPoly& s)
    {
        RElement out;
        for (const auto& [e, c] : terms_)
            out.add(e, c * s);
        return *this = std::move(out);
    }
    RElement operator-() const
    {
        RElement out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, -c);
        return out;
    }

    friend RElement operator+(RElement a, const RElement& b) { return a += b; }
    friend RElement operator-(RElement a, const RElement& b) { return a -= b; }
    friend RElement operator*(RElement a, const CoeffPoly& s) { return a *= s; }
    friend RElement operator*(const CoeffPoly& s, RElement a) { return a *= s; }
    friend RElement operator*(RElement a, const Rat& s) { return a *= CoeffPoly(s); }
    friend RElement operator*(const Rat& s, RElement a) { return a *= CoeffPoly(s); }

    friend RElement operator*(const RElement& a, const RElement& b)
    {
        RElement out;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_)
                out.add(e1 + e2, c1 * c2);
        return out;
    }
    RElement& operator*=(const RElement& o) { return *this = *this * o; }

    bool operator==(const RElement&) const = default;

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += "(" + c.str() + ")";
            if (e)
                s += "*s^" + std::to_string(e);
        }
        return s;
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RElement& r)
{
    return os << r.str();
}

/// Sum c_k Y^k, with polynomial coefficients, as an RElement.
inline RElement from_Y_basis(const std::map<int, CoeffPoly>& by_power)
{
    RElement out;
    for (const auto& [k, c] : by_power)
        // Y^k = 4^{-k} (u - 1)^k
        for (int j = 0; j <= k; ++j) {
            Rat w = Rat(binomial(k, j)) / Rat(pow(BigInt(4), static_cast<unsigned long>(k)));
            if ((k - j) % 2)
                w = -w;
            out.add(2 * j, c * w);
        }
    return out;
}

/// Coefficients in the Y-power basis; r must have only even nonnegative exponents.
inline std::map<int, CoeffPoly> to_Y_basis(const RElement& r)
{
    std::map<int, CoeffPoly> out;
    for (const auto& [e, c] : r.terms()) {
        detail::require(e >= 0 && e % 2 == 0, "to_Y_basis: exponent s^" + std::to_string(e) + " is not a power of u");
        const int k = e / 2;
        // u^k = (1 + 4Y)^k
        for (int j = 0; j <= k; ++j) {
            auto& slot = out[j];
            slot += c * (Rat(binomial(k, j)) * Rat(pow(BigInt(4), static_cast<unsigned long>(j))));
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace hurwitz

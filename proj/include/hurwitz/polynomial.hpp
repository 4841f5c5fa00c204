#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace hurwitz {

/// Multivariate polynomial over Q in a fixed number of variables x1..xn.
/// Monomials are exponent vectors; zero coefficients are never stored.
class PolynomialQ {
public:
    using Exponents = std::vector<int>;

    PolynomialQ() = default;
    explicit PolynomialQ(int num_vars) : num_vars_(num_vars)
    {
        detail::require(num_vars >= 0, "PolynomialQ: negative variable count");
    }

    static PolynomialQ constant(int num_vars, const Rat& c)
    {
        PolynomialQ p(num_vars);
        p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
        return p;
    }

    int num_vars() const noexcept { return num_vars_; }
    const std::map<Exponents, Rat>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const Rat& c)
    {
        detail::require(static_cast<int>(e.size()) == num_vars_, "PolynomialQ: exponent arity mismatch");
        if (c == 0)
            return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rat coeff(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const
    {
        int deg = -1;
        for (const auto& [e, c] : terms_)
            deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
        return deg;
    }

    Rat evaluate(std::span<const Rat> x) const
    {
        detail::require(static_cast<int>(x.size()) == num_vars_, "PolynomialQ: evaluation arity mismatch");
        Rat sum = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < num_vars_; ++i)
                if (e[i])
                    t *= pow(x[i], e[i]);
            sum += t;
        }
        return sum;
    }

    Rat evaluate(std::span<const int> x) const
    {
        std::vector<Rat> xs(x.begin(), x.end());
        return evaluate(std::span<const Rat>(xs));
    }

    PolynomialQ& operator+=(const PolynomialQ& o)
    {
        detail::require(o.num_vars_ == num_vars_, "PolynomialQ: arity mismatch");
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    PolynomialQ& operator*=(const Rat& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    bool operator==(const PolynomialQ& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first)
                s += " + ";
            first = false;
            s += to_string(c);
            for (int i = 0; i < num_vars_; ++i) {
                if (e[i] == 0)
                    continue;
                s += "*x" + std::to_string(i + 1);
                if (e[i] > 1)
                    s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

private:
    int num_vars_ = 0;
    std::map<Exponents, Rat> terms_;
};

/// All exponent vectors in `num_vars` variables with total degree <= degree.
inline std::vector<PolynomialQ::Exponents> monomials_up_to(int num_vars, int degree)
{
    std::vector<PolynomialQ::Exponents> out;
    PolynomialQ::Exponents cur(static_cast<std::size_t>(num_vars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == num_vars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    if (num_vars == 0) {
        out.push_back(cur);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

struct InterpolationPoint {
    std::vector<Rat> x;
    Rat value;
};

/// The unique polynomial of total degree <= `degree` through all points.
/// Extra points beyond the number of monomials must be consistent.
inline PolynomialQ interpolate(std::span<const InterpolationPoint> points, int degree)
{
    detail::require(!points.empty(), "interpolate: no points");
    detail::require(degree >= 0, "interpolate: negative degree");
    const int n = static_cast<int>(points.front().x.size());
    for (const auto& pt : points)
        detail::require(static_cast<int>(pt.x.size()) == n, "interpolate: points of mixed arity");
    auto monos = monomials_up_to(n, degree);
    RatMatrix a;
    std::vector<Rat> b;
    for (const auto& pt : points) {
        std::vector<Rat> row;
        row.reserve(monos.size());
        for (const auto& e : monos) {
            Rat t = 1;
            for (int i = 0; i < n; ++i)
                if (e[i])
                    t *= pow(pt.x[i], e[i]);
            row.push_back(std::move(t));
        }
        a.push_back(std::move(row));
        b.push_back(pt.value);
    }
    auto coeffs = solve_exact(std::move(a), std::move(b));
    PolynomialQ p(n);
    for (std::size_t i = 0; i < monos.size(); ++i)
        p.add_term(monos[i], coeffs[i]);
    return p;
}

} // namespace hurwitz

#pragma once

// Exact integers and rationals. Everything numeric in the library goes
// through these two types; there is no floating point anywhere.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hurwitz {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form (reduced, positive denominator).
inline Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1)
{
    return make_rat(BigInt(num), BigInt(den));
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rat& r)
{
    return r.get_str(10);
}

inline std::string to_string(const BigInt& n)
{
    return n.get_str(10);
}

/// Parses "n" or "n/d" (optional leading sign on n). Rejects anything else.
inline Rat parse_rat(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+')
        n.erase(0, 1);
    return make_rat(BigInt(n), BigInt(std::string(den)));
}

inline bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

} // namespace hurwitz

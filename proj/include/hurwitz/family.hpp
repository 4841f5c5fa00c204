#pragma once

#include <string>

namespace hurwitz {

/// Which Hurwitz numbers: monotone (b_1 <= ... <= b_r) or classical.
enum class Family { monotone, classical };

inline std::string to_string(Family f)
{
    return f == Family::monotone ? "monotone" : "classical";
}

/// Riemann-Hurwitz: number of transpositions for genus g, |alpha| = d, l(alpha) = l.
constexpr int transposition_count(int genus, int d, int length) noexcept
{
    return 2 * genus - 2 + length + d;
}

} // namespace hurwitz

#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hurwitz {

/// An integer partition, parts stored weakly decreasing.
///
/// The empty partition (size 0, length 0) is valid; it indexes constant
/// terms of series. Partitions are also used as multisets of indices,
/// e.g. the monomial q_3 q_1^2 is the partition (3,1,1).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        for (int p : parts_)
            size_ += p;
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int part) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// (part, multiplicity) pairs, parts decreasing.
    std::vector<std::pair<int, int>> multiplicities() const
    {
        std::vector<std::pair<int, int>> out;
        for (int p : parts_) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
        return out;
    }

    Partition with(int part) const
    {
        Partition r = *this;
        r.parts_.insert(std::upper_bound(r.parts_.begin(), r.parts_.end(), part, std::greater<>()), part);
        r.size_ += part;
        return r;
    }

    /// Removes one copy of `part`; throws if absent.
    Partition without(int part) const
    {
        Partition r = *this;
        auto it = std::find(r.parts_.begin(), r.parts_.end(), part);
        if (it == r.parts_.end())
            throw invalid_argument("part " + std::to_string(part) + " not present");
        r.parts_.erase(it);
        r.size_ -= part;
        return r;
    }

    /// Multiset union.
    Partition merged(const Partition& other) const
    {
        Partition r;
        r.parts_.resize(parts_.size() + other.parts_.size());
        std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), r.parts_.begin(),
                   std::greater<>());
        r.size_ = size_ + other.size_;
        return r;
    }

    /// Multiset inclusion: every part of *this occurs in `other` at least as often.
    bool divides(const Partition& other) const
    {
        if (size_ > other.size_ || parts_.size() > other.parts_.size())
            return false;
        return std::includes(other.parts_.begin(), other.parts_.end(), parts_.begin(), parts_.end(), std::greater<>());
    }

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }

    // Graded: size first, then length, then parts lexicographically.
    std::strong_ordering operator<=>(const Partition& o) const noexcept
    {
        if (auto c = size_ <=> o.size_; c != 0)
            return c;
        if (auto c = parts_.size() <=> o.parts_.size(); c != 0)
            return c;
        return parts_ <=> o.parts_;
    }

    std::string str() const
    {
        if (parts_.empty())
            return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.str();
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                           std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of d, in reverse lexicographic order ((d) first, (1^d) last).
inline std::vector<Partition> partitions_of(int d, int max_part = -1, int max_length = -1)
{
    if (d < 0)
        throw invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(d, max_part < 0 ? d : max_part, max_length < 0 ? d : max_length, cur, out);
    return out;
}

/// Partitions of d with exactly `length` parts.
inline std::vector<Partition> partitions_with_length(int d, int length, int max_part = -1)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(d, max_part, length))
        if (p.length() == length)
            out.push_back(std::move(p));
    return out;
}

/// All partitions with exactly `length` parts, each part in [1, max_part].
inline std::vector<Partition> partitions_in_box(int length, int max_part)
{
    std::vector<Partition> out;
    for (int d = length; d <= length * max_part; ++d)
        for (auto& p : partitions_with_length(d, length, max_part))
            out.push_back(std::move(p));
    return out;
}

/// All partitions of every size 0..max_size, graded.
inline std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d)
        for (auto& p : partitions_of(d))
            out.push_back(std::move(p));
    return out;
}

/// Parses "3,2,2,1" (whitespace tolerated). The empty string is the empty partition.
inline Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        for (char c : token)
            if (c < '0' || c > '9')
                throw invalid_argument("malformed partition '" + text + "'");
        if (token.size() > 6)
            throw invalid_argument("partition part too large in '" + text + "'");
        parts.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            if (token.empty())
                throw invalid_argument("malformed partition '" + text + "'");
            flush();
        } else if (c != ' ' && c != '\t') {
            token += c;
        }
    }
    if (token.empty() && !parts.empty())
        throw invalid_argument("malformed partition '" + text + "'");
    flush();
    return Partition(std::move(parts));
}

} // namespace hurwitz

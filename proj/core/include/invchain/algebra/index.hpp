#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invchain {

/// Positive integer label (1-based). Zero never denotes an index.
using Index = std::uint32_t;

/// An element of <n>^k: k pairwise distinct positive integers.
class IndexTuple {
public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<Index> entries);

    std::size_t size() const { return entries_.size(); }
    Index operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Index> entries() const { return entries_; }

    /// |w|_inf, the largest entry (0 for the empty tuple).
    Index max_entry() const;

    std::string to_string() const;
    /// Accepts "(1,2,3)" or "1,2,3".
    static IndexTuple parse(std::string_view text);

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<Index> entries_;
};

/// A finite multiset of positive integers, stored as a sorted sequence.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<Index> elements);

    /// Multiset {1^{a_1}, 2^{a_2}, ..., n^{a_n}} for a count vector a.
    static MultiIndex from_counts(std::span<const std::int64_t> counts);
    /// Accepts "{1,1,2}" or "1,1,2".
    static MultiIndex parse(std::string_view text);

    std::span<const Index> elements() const { return elements_; }
    std::size_t total() const { return elements_.size(); }
    std::size_t count(Index i) const;
    std::size_t max_count() const;
    Index max_entry() const { return elements_.empty() ? 0 : elements_.back(); }
    /// Count vector of length n; throws InputError if an element exceeds n.
    std::vector<std::int64_t> counts(std::size_t n) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<Index> elements_;
};

/// Parses a comma separated list of integers; surrounding brackets are ignored.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace invchain

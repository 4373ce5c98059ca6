#include "invchain/algebra/index.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "invchain/error.hpp"

namespace invchain {

namespace {

std::string join(std::span<const Index> xs, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += close;
    return out;
}

std::vector<Index> to_indices(const std::vector<std::int64_t>& xs) {
    std::vector<Index> out;
    out.reserve(xs.size());
    for (auto x : xs) {
        if (x < 1) throw InputError("index must be a positive integer, got " + std::to_string(x));
        out.push_back(static_cast<Index>(x));
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '(' || text[i] == ')' ||
                                   text[i] == '{' || text[i] == '}' || text[i] == '[' || text[i] == ']'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc()) throw InputError("expected an integer in '" + std::string(text) + "'");
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
        skip();
        if (i < text.size()) {
            if (text[i] != ',') throw InputError("expected ',' in '" + std::string(text) + "'");
            ++i;
            skip();
        }
    }
    return out;
}

IndexTuple::IndexTuple(std::vector<Index> entries) : entries_(std::move(entries)) {
    std::unordered_set<Index> seen;
    for (auto e : entries_) {
        if (e < 1) throw InputError("tuple entries must be positive");
        if (!seen.insert(e).second)
            throw InputError("tuple entries must be pairwise distinct: " + join(entries_, '(', ')'));
    }
}

Index IndexTuple::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::string IndexTuple::to_string() const { return join(entries_, '(', ')'); }

IndexTuple IndexTuple::parse(std::string_view text) { return IndexTuple(to_indices(parse_int_list(text))); }

MultiIndex::MultiIndex(std::vector<Index> elements) : elements_(std::move(elements)) {
    for (auto e : elements_)
        if (e < 1) throw InputError("multiset elements must be positive");
    std::sort(elements_.begin(), elements_.end());
}

MultiIndex MultiIndex::from_counts(std::span<const std::int64_t> counts) {
    std::vector<Index> elements;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw InputError("multiplicities must be nonnegative");
        elements.insert(elements.end(), static_cast<std::size_t>(counts[i]), static_cast<Index>(i + 1));
    }
    MultiIndex m;
    m.elements_ = std::move(elements);
    return m;
}

MultiIndex MultiIndex::parse(std::string_view text) { return MultiIndex(to_indices(parse_int_list(text))); }

std::size_t MultiIndex::count(Index i) const {
    auto [lo, hi] = std::equal_range(elements_.begin(), elements_.end(), i);
    return static_cast<std::size_t>(hi - lo);
}

std::size_t MultiIndex::max_count() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < elements_.size();) {
        std::size_t j = i;
        while (j < elements_.size() && elements_[j] == elements_[i]) ++j;
        best = std::max(best, j - i);
        i = j;
    }
    return best;
}

std::vector<std::int64_t> MultiIndex::counts(std::size_t n) const {
    std::vector<std::int64_t> out(n, 0);
    for (auto e : elements_) {
        if (e > n) throw InputError("multiset element " + std::to_string(e) + " exceeds n=" + std::to_string(n));
        ++out[e - 1];
    }
    return out;
}

std::string MultiIndex::to_string() const { return join(elements_, '{', '}'); }

}  // namespace invchain

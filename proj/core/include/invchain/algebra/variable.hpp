#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invchain/algebra/index.hpp"
#include "invchain/algebra/permutation.hpp"

namespace invchain {

enum class VarKind : std::uint8_t { Plain, Extended };

/// An indeterminate: x_w for a tuple w (Plain, a variable of R_n) or for a
/// multiset w (Extended, a variable of the enlarged ring).
///
/// Variables are totally ordered by kind, then by the degree-lexicographic
/// order on their index sequence: largest entry first, then lexicographic.
/// Multisets are compared through their sorted element sequences.
class Variable {
public:
    Variable() = default;
    static Variable plain(const IndexTuple& tuple);
    static Variable extended(const MultiIndex& multiset);

    /// "(1,2)" parses as Plain, "{1,1,2}" as Extended; a leading 'x' is allowed.
    static Variable parse(std::string_view text);

    VarKind kind() const { return kind_; }
    bool is_plain() const { return kind_ == VarKind::Plain; }
    std::span<const Index> indices() const { return indices_; }
    Index max_index() const { return max_; }

    IndexTuple tuple() const;
    MultiIndex multiset() const;

    /// Relabels every index through p; Extended indices are re-sorted.
    Variable permuted(const Permutation& p) const;

    std::string to_string() const;

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.kind_ == b.kind_ && a.indices_ == b.indices_;
    }
    friend std::strong_ordering operator<=>(const Variable& a, const Variable& b);

private:
    Variable(VarKind kind, std::vector<Index> indices);
    VarKind kind_ = VarKind::Plain;
    std::vector<Index> indices_;
    Index max_ = 0;
};

struct VariableHash {
    std::size_t operator()(const Variable& v) const noexcept;
};

}  // namespace invchain

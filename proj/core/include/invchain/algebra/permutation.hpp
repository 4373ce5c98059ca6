#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invchain/algebra/index.hpp"

namespace invchain {

/// A bijection of [n] = {1, ..., n}, stored as its image sequence.
///
/// Permutations of different degrees compare and compose as elements of S_P:
/// the shorter one is extended by fixed points. Applying a permutation of
/// degree n to an index larger than n is an error, since the caller asked to
/// act on an object outside the permutation's range.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n);
    /// images[i] is the image of i+1; must be a bijection of [n].
    static Permutation from_images(std::vector<Index> images);
    /// Product of the given cycles, extended to degree n (or the largest entry).
    static Permutation from_cycles(const std::vector<std::vector<Index>>& cycles, std::size_t n = 0);
    /// Parses cycle notation such as "(1 3 9 2 7)", "(1 3 9)(2 7)" or "()".
    static Permutation parse(std::string_view text, std::size_t n = 0);

    std::size_t degree() const { return images_.size(); }
    std::span<const Index> images() const { return images_; }

    /// sigma(i); throws InputError if i is outside [1, degree()].
    Index operator()(Index i) const;

    Permutation inverse() const;
    Permutation extended(std::size_t n) const;
    bool is_identity() const;

    /// Cycle notation, fixed points omitted; the identity renders as "()".
    std::string to_string() const;

    /// (p * q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation& p, const Permutation& q);

private:
    explicit Permutation(std::vector<Index> images) : images_(std::move(images)) {}
    std::vector<Index> images_;
};

}  // namespace invchain

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invchain/algebra/index.hpp"
#include "invchain/algebra/permutation.hpp"

namespace invchain {

/// A k-tuple of positive integers; entries may repeat.
using Tuple = std::vector<Index>;

/// |v|_inf < |w|_inf, or equal maxima and v lexicographically smaller.
/// Throws InputError on arity mismatch.
std::strong_ordering dlex_compare(const Tuple& u, const Tuple& v);
std::strong_ordering dlex_compare(const IndexTuple& u, const IndexTuple& v);

/// Every tuple v of the same arity with v <_dlex t, in dlex order.
std::vector<Tuple> tuples_below(const Tuple& t);

struct WitnessResult {
    bool found = false;
    std::optional<Permutation> witness;
    std::size_t search_bound = 0;
};

/// Decides s ⪯ t: is there sigma in S_M, M = |t|_inf, with sigma(s) = t and
/// sigma({v : v <_dlex s}) contained in {v : v <_dlex t}? The first witness
/// in lexicographic order of image sequences is returned. Throws
/// ResourceError if M exceeds bound.
WitnessResult preceq_witness(const Tuple& s, const Tuple& t, std::size_t bound = 8);

/// Re-checks a witness against the definition.
bool is_preceq_witness(const Permutation& sigma, const Tuple& s, const Tuple& t);

std::string tuple_to_string(const Tuple& t);

}  // namespace invchain

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "invchain/algebra/binomial.hpp"

namespace invchain {

/// Canonical representative of the S_infinity-orbit of b up to sign, and a
/// permutation sigma with sigma(b) = rep or sigma(b) = -rep.
///
/// The support S of b is relabeled onto {1, ..., |S|} by every bijection and
/// the image whose serialized key is smallest wins; within the image the
/// smaller-keyed monomial becomes the lead. Supports larger than
/// max_support raise ResourceError.
struct OrbitRep {
    Binomial rep;
    Permutation witness;
};
OrbitRep canonical_orbit_rep(const Binomial& b, std::size_t max_support = 9);

/// Integer key ordering monomials structurally; used for orbit canonical forms.
std::vector<std::int64_t> monomial_key(const Monomial& m);

/// Calls f(p) for every partial injection support -> [n], given as a full
/// permutation of [max(n, max support)] that maps support[i] to image[i] and
/// the remaining points in increasing order. Stops early if f returns false.
void for_each_support_injection(const std::vector<Index>& support, std::size_t n,
                                const std::function<bool(const Permutation&)>& f);

/// All distinct images sigma(g), sigma in S_n, of each generator, oriented
/// lead > trail under the order. Generators must have indices <= n.
std::vector<Binomial> symmetrize(const std::vector<Binomial>& generators, std::size_t n,
                                 const TermOrder& order = TermOrder::degrevlex());

}  // namespace invchain

#pragma once

#include <cstddef>
#include <vector>

#include "invchain/algebra/monomial_map.hpp"
#include "invchain/groebner/ideal.hpp"
#include "invchain/lattice/int_matrix.hpp"

namespace invchain {

/// Every tuple of k distinct indices from [n], in variable order.
std::vector<IndexTuple> index_tuples(std::size_t k, std::size_t n);

/// Every multiset of d elements of [n] with multiplicities at most r, in variable order.
std::vector<MultiIndex> bounded_multisets(std::size_t d, std::size_t r, std::size_t n);

/// The n x n!/(n-k)! matrix whose column (u_1..u_k) has alpha_i in row u_i.
/// Columns are labeled by plain variables and sorted in variable order.
IntMatrix build_matrix_A(const MonomialSpec& spec, std::size_t n);

/// Columns are all a in N^n with |a| = |alpha| and every a_i <= max alpha,
/// labeled by the extended variable of the multiset {1^a_1, ..., n^a_n}.
IntMatrix build_matrix_B(const MonomialSpec& spec, std::size_t n);

/// Variables x_w for w in the tuples of arity k over [n].
PolyRing plain_ring(const MonomialSpec& spec, std::size_t n);
/// Variables x_w for the bounded multisets over [n].
PolyRing extended_ring(const MonomialSpec& spec, std::size_t n);

}  // namespace invchain

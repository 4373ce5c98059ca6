#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invchain/algebra/monomial_map.hpp"

namespace invchain {

using Vec = std::vector<std::int64_t>;

/// Integers b with sum b_i alpha_i = gcd(alpha). Built right to left as
/// gcd(alpha_1, gcd(alpha_2, ...)), taking the extended-Euclid pair at each step.
Vec bezout(const Vec& alpha);

/// The vector sigma(alpha_1, ..., alpha_k, 0, ..., 0) in Z^n placing alpha_i at
/// position w_i, for a tuple w of distinct positions.
Vec place_alpha(const MonomialSpec& spec, const IndexTuple& w, std::size_t n);
/// Inverse of place_alpha. Equal entries of alpha receive increasing
/// positions, so the tuple is canonical when alpha has repeats.
IndexTuple tuple_of_placement(const MonomialSpec& spec, const Vec& v);

/// True iff beta lies in the Z-span of the permutations of (alpha, 0, ..., 0),
/// that is iff |beta| = 0 mod |alpha|. Requires gcd(alpha) = 1 and n > k.
bool span_membership(const Vec& beta, const MonomialSpec& spec, std::size_t n);

struct DecompositionTerm {
    std::int64_t coefficient;
    Vec column;
    IndexTuple label;
};

/// beta = sum coefficient * column with every column a permutation of
/// (alpha, 0, ..., 0). Terms are merged by column, zero totals dropped, and
/// listed in order of first appearance.
struct Decomposition {
    std::vector<DecompositionTerm> terms;
    Vec sum(std::size_t n) const;
    std::string to_string() const;
};

/// The constructive decomposition behind |beta| = 0 mod |alpha|: start from
/// q * (alpha, 0, ..., 0) and correct each of the first n-1 coordinates with
/// differences of transposed alpha vectors. The result is re-summed and
/// checked before it is returned.
Decomposition integer_decompose(const Vec& beta, const MonomialSpec& spec, std::size_t n);

struct TelescopeStep {
    Vec multiplier;  ///< exponent of the monomial in front of z^{h+} - z^{h-}
    std::size_t h_index;
};

struct Telescope {
    Vec clearing;  ///< c >= 0
    std::vector<TelescopeStep> steps;
};

/// For u = v + sum h_i, writes z^c (z^u - z^v) = sum z^{m_i} (z^{h_i+} - z^{h_i-})
/// with c and every m_i nonnegative, by walking v, v + h_1, v + h_1 + h_2, ...
/// The identity is verified by expansion before returning. Throws InputError
/// if the sum does not match.
Telescope telescope_membership(const Vec& u, const Vec& v, const std::vector<Vec>& h_list);

/// Expands both sides of a telescope identity and compares them.
bool verify_telescope(const Telescope& t, const Vec& u, const Vec& v, const std::vector<Vec>& h_list);

struct NormalityWitness {
    Vec z;
    bool in_integer_span = false;
    bool in_cone = false;
    /// z is a nonnegative integer combination of columns.
    bool in_semigroup = true;
    /// Weights (1/|alpha|) on the cyclic shifts of alpha exhibiting z in the cone.
    std::vector<Vec> cone_columns;
};

/// z = (1, ..., 1, 0, ..., 0) with |alpha| ones lies in the integer span and
/// in the cone of the columns of A_n but not in their semigroup.
/// Requires alpha not square-free, gcd(alpha) = 1 and n >= |alpha|.
NormalityWitness normality_witness(const MonomialSpec& spec, std::size_t n);

std::string vec_to_string(const Vec& v);

}  // namespace invchain

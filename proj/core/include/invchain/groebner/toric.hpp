#pragma once

#include "invchain/algebra/monomial_map.hpp"
#include "invchain/groebner/ideal.hpp"
#include "invchain/lattice/int_matrix.hpp"

namespace invchain {

struct ToricOptions {
    GbOptions gb;
    SaturationMethod saturation = SaturationMethod::PerVariable;
    /// Also feed the degree-two moves x_a x_b - x_c x_d with equal column sums.
    /// They lie in the toric ideal, so the saturation is unchanged; they only
    /// shorten the computation.
    bool seed_quadrics = true;
    /// Rank the variables by column position (first column largest) instead
    /// of by dlex.
    bool column_order = false;
};

/// Binomials x^{v+} - x^{v-} for a Z-basis v of ker A, over the column labels.
BinomialIdeal lattice_basis_ideal(const IntMatrix& A, TermOrder order = TermOrder::degrevlex(),
                                  bool column_order = false);

/// The degree-two moves described above.
std::vector<Binomial> quadric_moves(const IntMatrix& A);

/// Reduced basis of the toric ideal of the labeled matrix A: the lattice basis
/// ideal saturated by the product of all variables. Every element is checked
/// to lie in ker A.
GroebnerBasis toric_ideal_from_matrix(const IntMatrix& A, TermOrder order = TermOrder::degrevlex(),
                                      const ToricOptions& opts = {});

/// Largest total degree in the reduced basis of I_n for y^alpha.
Exponent degree_complexity(const MonomialSpec& spec, std::size_t n, TermOrder order = TermOrder::degrevlex(),
                           const ToricOptions& opts = {});

}  // namespace invchain

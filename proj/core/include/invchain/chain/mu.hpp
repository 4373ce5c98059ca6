#pragma once

#include <cstddef>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/algebra/monomial_map.hpp"

namespace invchain {

/// A Laurent monomial mu(x_w) in the plain variables with the same image as
/// the extended variable x_w. Variables in the image of eta map to their
/// canonical plain preimage; the others go through integer_decompose.
/// Requires gcd(alpha) = 1 and n > k. The image is checked before returning.
LaurentMonomial construct_mu(const Variable& w, const MonomialSpec& spec, std::size_t n);

/// mu applied to every variable of an extended monomial.
LaurentMonomial substitute_mu(const Monomial& m, const MonomialSpec& spec, std::size_t n);

/// mu(lead) - mu(trail).
LaurentElement substitute_mu(const Binomial& b, const MonomialSpec& spec, std::size_t n);

/// True iff the extended variable is eta(x_u) for some tuple u.
bool in_eta_image(const Variable& w, const MonomialSpec& spec);

/// Linear binomials x_u - x_v for distinct tuples with eta(x_u) = eta(x_v).
/// Empty unless alpha has repeated entries.
std::vector<Binomial> eta_kernel(const MonomialSpec& spec, std::size_t n);

}  // namespace invchain

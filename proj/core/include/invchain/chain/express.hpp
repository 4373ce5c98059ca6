#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/algebra/monomial_map.hpp"

namespace invchain {

struct ExpressionTerm {
    std::int64_t sign;
    LaurentMonomial coefficient;
    Permutation sigma;
    std::size_t generator;
};

/// target = sum sign * coefficient * sigma(G[generator]).
struct EquivariantExpression {
    Binomial target;
    std::vector<ExpressionTerm> terms;
    bool verified = false;

    /// Re-expands the sum and compares it with the target.
    bool check(const std::vector<Binomial>& generators) const;
    std::string to_string() const;
};

struct ExpressOptions {
    /// Largest m accepted.
    std::size_t max_m = 10;
    /// Largest number of telescoping steps before giving up.
    std::size_t max_steps = 200000;
};

/// Writes f as a Laurent combination of permuted generators in R_m^{+-}.
/// f must lie in the Laurent toric ideal (phi(lead) = phi(trail)). If f is a
/// monomial times a generator image (up to sign) that term is returned.
/// Otherwise the exponent difference of f is written as a sum of one or two
/// image differences, or failing that solved over a subset of images spanning
/// the same lattice, and the solution is telescoped into monomial multipliers.
/// The result is verified by expansion.
/// Throws MembershipError if f is outside the kernel or outside the Laurent
/// ideal generated by G, and ResourceError if m exceeds the limit.
EquivariantExpression express_equivariant(const Binomial& f, const std::vector<Binomial>& G,
                                          const MonomialSpec& spec, std::size_t m,
                                          const ExpressOptions& opts = {});

}  // namespace invchain

#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "invchain/algebra/monomial_map.hpp"
#include "invchain/groebner/ideal.hpp"

namespace invchain {

enum class GeneratorSide { Plain, Extended };

struct MinimalGeneratorCount {
    std::size_t total = 0;
    std::map<Exponent, std::size_t> by_degree;
    /// Orbits, up to sign, of the binomials x^u - x^v with u and v in
    /// different components of a fiber. Zero unless requested.
    std::size_t modulo_symmetry = 0;
    /// Fibers of degree up to this bound were inspected.
    Exponent degree_limit = 0;
};

struct CountOptions {
    /// Degrees to inspect. Without it the bound is the degree complexity,
    /// which needs the full reduced basis.
    std::optional<Exponent> degree_limit;
    GbOptions gb;
    bool count_orbits = false;
};

/// Number of minimal generators of the toric ideal I_n (plain) or of the
/// extended toric ideal (extended). For a positively graded toric ideal the
/// fiber of b contributes (number of components) - 1 minimal generators of
/// degree |u|, where monomials of the fiber are joined when they share a
/// variable.
MinimalGeneratorCount count_minimal_generators(const MonomialSpec& spec, std::size_t n, GeneratorSide which,
                                               const CountOptions& opts = {});

/// Largest degree of a minimal generator of I_n. Order independent, and at
/// most the degree complexity, which bounds the fibers inspected.
Exponent max_generator_degree(const MonomialSpec& spec, std::size_t n, const GbOptions& opts = {});

/// The same count by greedy pruning of the reduced basis: going up in degree,
/// an element is dropped if it lies in the ideal of the ones kept so far plus
/// the remaining elements of its degree. Slow; a cross-check for small n.
std::size_t count_minimal_generators_by_pruning(const GroebnerBasis& gb, const GbOptions& opts = {});

}  // namespace invchain

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "invchain/algebra/binomial.hpp"
#include "invchain/algebra/monomial_map.hpp"
#include "invchain/groebner/ideal.hpp"

namespace invchain {

enum class VerifyMethod {
    /// Compare the exponent lattices (Hermite bases).
    Lattice,
    /// Compare saturated reduced Groebner bases.
    Saturation,
    /// Run both and require agreement.
    Both,
};

VerifyMethod parse_verify_method(const std::string& text);
std::string to_string(VerifyMethod m);

/// The Laurent ideal generated by all sigma(g), sigma in S_n, g in G, equals
/// the Laurent toric ideal I_n for y^alpha. Each generator is moved only by
/// injections of its support into [n]. With Both, a disagreement between the
/// two routes raises VerificationError.
bool verify_generating_set(const std::vector<Binomial>& G, const MonomialSpec& spec, std::size_t n,
                           VerifyMethod method = VerifyMethod::Lattice, const GbOptions& opts = {});

struct ChainGenerator {
    /// mu(lead) - mu(trail) for the extended quadric it came from.
    LaurentElement laurent;
    /// Cleared denominators, common factor removed, canonical orbit form.
    Binomial binomial;
    /// The extended quadric, or the binomial itself for an eta-kernel element.
    Binomial source;
    bool from_eta_kernel = false;
};

struct ChainStats {
    std::size_t extended_quadrics = 0;
    std::size_t extended_orbits = 0;
    std::size_t plain_orbits = 0;
    std::size_t after_pruning = 0;
    double seconds = 0;
};

struct ChainGeneratorSet {
    MonomialSpec spec;
    /// Stabilization bound 2 |alpha|.
    std::size_t bound = 0;
    std::vector<ChainGenerator> generators;
    ChainStats stats;
    /// Result of verify_generating_set per checked n.
    std::map<std::size_t, bool> verified;

    std::vector<Binomial> binomials() const;
    bool all_verified() const;
};

struct ChainOptions {
    TermOrder order = TermOrder::degrevlex();
    GbOptions gb;
    /// Drop generators whose removal keeps the set generating at the bound.
    bool prune = true;
    /// Values of n to certify; empty means {bound, bound + 1}.
    std::vector<std::size_t> verify_at;
    VerifyMethod method = VerifyMethod::Lattice;
    /// Threads for the mu substitution stage. The result does not depend on it.
    std::size_t workers = 1;
};

/// Generators of the chain of Laurent toric ideals induced by y^alpha, up to
/// symmetry: the quadrics of the extended toric ideal at n = 2|alpha|, one per
/// orbit, pushed through mu, deduplicated again and pruned. The spec must be
/// normalized (gcd 1). Every generator is checked to lie in the kernel.
ChainGeneratorSet chain_generators(const MonomialSpec& spec, const ChainOptions& opts = {});

/// Degree-two part of the reduced basis of the extended toric ideal at n.
std::vector<Binomial> extended_quadrics(const MonomialSpec& spec, std::size_t n, const TermOrder& order,
                                        const GbOptions& opts = {});

/// One canonical representative per orbit, sorted by degree and text.
std::vector<Binomial> orbit_representatives(const std::vector<Binomial>& bs);

}  // namespace invchain

#include "invchain/chain/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>

#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/chain/mu.hpp"
#include "invchain/error.hpp"
#include "invchain/groebner/toric.hpp"

namespace invchain {

VerifyMethod parse_verify_method(const std::string& text) {
    if (text == "lattice") return VerifyMethod::Lattice;
    if (text == "saturation") return VerifyMethod::Saturation;
    if (text == "both") return VerifyMethod::Both;
    throw InputError("unknown verification method '" + text + "' (lattice, saturation, both)");
}

std::string to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::Lattice: return "lattice";
        case VerifyMethod::Saturation: return "saturation";
        case VerifyMethod::Both: return "both";
    }
    return "?";
}

bool verify_generating_set(const std::vector<Binomial>& G, const MonomialSpec& spec, std::size_t n,
                           VerifyMethod method, const GbOptions& opts) {
    auto ring = plain_ring(spec, n);
    BinomialIdeal sym{ring, symmetrize(G, n), TermOrder::degrevlex()};
    const auto A = build_matrix_A(spec, n);

    std::optional<bool> by_lattice, by_saturation;
    if (method != VerifyMethod::Saturation) by_lattice = laurent_equal_lattice(sym, lattice_basis_ideal(A));
    if (method != VerifyMethod::Lattice) {
        // I_n is already saturated; its basis comes from the toric route.
        auto toric = toric_ideal_from_matrix(A, TermOrder::degrevlex(), {opts});
        by_saturation = saturate(sym, SaturationMethod::PerVariable, opts) == toric;
    }
    if (by_lattice && by_saturation && *by_lattice != *by_saturation)
        throw VerificationError("lattice and saturation routes disagree at n=" + std::to_string(n));
    return by_lattice ? *by_lattice : *by_saturation;
}

std::vector<Binomial> ChainGeneratorSet::binomials() const {
    std::vector<Binomial> out;
    for (const auto& g : generators) out.push_back(g.binomial);
    return out;
}

bool ChainGeneratorSet::all_verified() const {
    return !verified.empty() &&
           std::all_of(verified.begin(), verified.end(), [](const auto& kv) { return kv.second; });
}

std::vector<Binomial> extended_quadrics(const MonomialSpec& spec, std::size_t n, const TermOrder& order,
                                        const GbOptions& opts) {
    auto B = build_matrix_B(spec, n);
    BinomialIdeal ideal{PolyRing(B.labels()), quadric_moves(B), order};
    // The degree-two piece of a toric ideal is spanned by these moves, so the
    // truncated basis is the quadratic part of the full reduced basis.
    GbOptions o = opts;
    o.degree_bound = 2;
    auto gb = reduced_gb(ideal, o).elements();
    for (const auto& g : gb) {
        if (g.degree() != 2) throw VerificationError("truncated basis has an element of degree " + std::to_string(g.degree()));
        if (!in_kernel(g, spec, n)) throw VerificationError("quadric " + g.to_string() + " is not in the kernel");
    }
    return gb;
}

std::vector<Binomial> orbit_representatives(const std::vector<Binomial>& bs) {
    std::set<std::pair<Monomial, Monomial>> seen;
    std::vector<Binomial> out;
    for (const auto& b : bs) {
        auto rep = canonical_orbit_rep(b).rep;
        if (seen.emplace(rep.lead(), rep.trail()).second) out.push_back(std::move(rep));
    }
    std::stable_sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    return out;
}

namespace {

struct Substituted {
    LaurentElement laurent;
    std::optional<Binomial> binomial;
};

Substituted push_through_mu(const Binomial& q, const MonomialSpec& spec, std::size_t n) {
    Substituted s{substitute_mu(q, spec, n), std::nullopt};
    if (s.laurent.lead() == s.laurent.trail()) return s;
    auto b = s.laurent.cleared().without_common_factor();
    if (!in_kernel(b, spec, n)) throw VerificationError("mu image " + b.to_string() + " is not in the kernel");
    s.binomial = canonical_orbit_rep(b).rep;
    return s;
}

std::vector<Substituted> substitute_all(const std::vector<Binomial>& reps, const MonomialSpec& spec, std::size_t n,
                                        std::size_t workers) {
    std::vector<Substituted> out(reps.size());
    workers = std::max<std::size_t>(1, std::min(workers, reps.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < reps.size(); ++i) out[i] = push_through_mu(reps[i], spec, n);
        return out;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < reps.size(); i += workers) out[i] = push_through_mu(reps[i], spec, n);
        }));
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace

ChainGeneratorSet chain_generators(const MonomialSpec& spec, const ChainOptions& opts) {
    if (spec.gcd() != 1) throw PreconditionError("chain_generators needs gcd(alpha) = 1; normalize " + spec.to_string() + " first");
    const auto t0 = std::chrono::steady_clock::now();
    ChainGeneratorSet out;
    out.spec = spec;
    out.bound = static_cast<std::size_t>(2 * spec.d());
    const auto N = out.bound;

    auto quads = extended_quadrics(spec, N, opts.order, opts.gb);
    out.stats.extended_quadrics = quads.size();
    auto ext_reps = orbit_representatives(quads);
    out.stats.extended_orbits = ext_reps.size();

    auto subs = substitute_all(ext_reps, spec, N, opts.workers);
    std::set<std::pair<Monomial, Monomial>> seen;
    std::vector<ChainGenerator> gens;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i].binomial) continue;
        const auto& b = *subs[i].binomial;
        if (!seen.emplace(b.lead(), b.trail()).second) continue;
        gens.push_back({subs[i].laurent, b, ext_reps[i], false});
    }
    for (const auto& e : orbit_representatives(eta_kernel(spec, N)))
        if (seen.emplace(e.lead(), e.trail()).second) gens.push_back({LaurentElement(e), e, e, true});
    std::stable_sort(gens.begin(), gens.end(), [](const ChainGenerator& a, const ChainGenerator& b) {
        if (a.binomial.degree() != b.binomial.degree()) return a.binomial.degree() < b.binomial.degree();
        return a.binomial.to_string() < b.binomial.to_string();
    });
    out.stats.plain_orbits = gens.size();

    auto as_binomials = [](const std::vector<ChainGenerator>& gs) {
        std::vector<Binomial> bs;
        for (const auto& g : gs) bs.push_back(g.binomial);
        return bs;
    };
    if (opts.prune && verify_generating_set(as_binomials(gens), spec, N, VerifyMethod::Lattice, opts.gb)) {
        for (std::size_t i = 0; i < gens.size();) {
            auto trial = gens;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (verify_generating_set(as_binomials(trial), spec, N, VerifyMethod::Lattice, opts.gb))
                gens = std::move(trial);
            else
                ++i;
        }
    }
    out.generators = std::move(gens);
    out.stats.after_pruning = out.generators.size();

    auto checks = opts.verify_at.empty() ? std::vector<std::size_t>{N, N + 1} : opts.verify_at;
    for (auto n : checks) out.verified[n] = verify_generating_set(out.binomials(), spec, n, opts.method, opts.gb);
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace invchain

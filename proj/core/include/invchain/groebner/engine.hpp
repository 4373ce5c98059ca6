#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invchain/algebra/term_order.hpp"

namespace invchain {

using Clock = std::chrono::steady_clock;

/// Dense exponent vector; position 0 is the largest variable.
using DenseExp = std::vector<std::int32_t>;

/// A monomial order on dense exponents. With elimination_block = e > 0 the
/// first e variables are compared by their total degree first, which makes
/// the order eliminate them; ties fall through to the base order.
struct DenseOrder {
    TermOrder base;
    std::size_t elimination_block = 0;

    std::strong_ordering compare(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const;
};

struct DenseBinomial {
    DenseExp lead;
    DenseExp trail;
    friend bool operator==(const DenseBinomial&, const DenseBinomial&) = default;
};

struct EngineStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis_size = 0;
};

/// Buchberger's algorithm for ideals generated by pure-difference binomials
/// x^u - x^v. S-polynomials and reductions of such binomials stay binomials,
/// so everything runs on pairs of exponent vectors.
///
/// Pairs are handled with the Gebauer-Moeller criteria and selected by least
/// lcm degree, ties broken by the order on the lcm and then by creation.
class BinomialBuchberger {
public:
    BinomialBuchberger(std::size_t nvars, DenseOrder order);

    void set_deadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }
    /// Truncates the computation: inputs and S-pairs of degree above the bound
    /// are discarded. For homogeneous input the result is the part of the
    /// reduced basis in degrees up to the bound.
    void set_degree_bound(std::optional<std::int64_t> bound) { degree_bound_ = bound; }
    /// Divides every new element by the gcd of its two monomials before it
    /// joins the basis. The ideal then grows inside its saturation by the
    /// product of all variables, so this is only for saturation steps.
    void set_strip_common_factors(bool on) { strip_ = on; }

    /// Adds an input generator; equal monomials are ignored.
    void add_generator(DenseExp a, DenseExp b);

    /// Runs to completion and returns the reduced Groebner basis, sorted by
    /// leading monomial, largest first. Throws TimeoutError past the deadline.
    std::vector<DenseBinomial> run();

    const EngineStats& stats() const { return stats_; }
    std::size_t nvars() const { return n_; }
    const DenseOrder& order() const { return order_; }

private:
    struct Elem {
        DenseExp lead, trail;
        std::uint64_t lead_mask = 0;
        bool in_basis = false;
    };
    struct Pair {
        std::uint32_t i, j;
        DenseExp lcm;
        std::uint64_t lcm_mask;
        std::int64_t degree;
        std::uint64_t seq;
        bool alive = true;
    };

    std::uint64_t mask_of(const DenseExp& e) const;
    bool divides(const DenseExp& a, std::uint64_t am, const DenseExp& b, std::uint64_t bm) const;
    /// Top-reduces lead - trail in place; returns false if it reduces to zero.
    bool top_reduce(DenseExp& lead, DenseExp& trail);
    void orient(DenseExp& a, DenseExp& b) const;
    void insert(DenseExp lead, DenseExp trail);
    void check_deadline();

    std::size_t n_;
    DenseOrder order_;
    std::optional<Clock::time_point> deadline_;
    std::optional<std::int64_t> degree_bound_;
    bool strip_ = false;
    std::vector<Elem> elems_;
    std::vector<std::uint32_t> basis_;
    std::vector<Pair> pairs_;
    std::vector<std::uint32_t> heap_;
    std::vector<DenseBinomial> pending_;
    std::uint64_t seq_ = 0;
    std::size_t ticks_ = 0;
    EngineStats stats_;
};

/// Normal form of a monomial modulo a binomial Groebner basis; the normal form
/// of a monomial is again a monomial.
DenseExp dense_normal_form(DenseExp m, const std::vector<DenseBinomial>& gb);

/// Full S-pair check: every S-polynomial of gb reduces to zero and no leading
/// monomial divides another. Pairs with coprime leads are skipped, which is
/// sound by Buchberger's first criterion.
bool certify_groebner(const std::vector<DenseBinomial>& gb, const DenseOrder& order);

}  // namespace invchain

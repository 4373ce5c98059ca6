#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invchain/algebra/binomial.hpp"

namespace invchain {

/// The exponent vector alpha of the inducing monomial y^alpha.
struct MonomialSpec {
    std::vector<std::int64_t> alpha;
    /// alpha as given, before gcd division and sorting.
    std::vector<std::int64_t> original;
    bool normalized = false;

    std::size_t k() const { return alpha.size(); }
    std::int64_t d() const;
    std::int64_t r() const;
    std::int64_t gcd() const;
    bool square_free() const { return r() == 1; }

    /// Uses alpha verbatim (no gcd division, no reordering).
    static MonomialSpec raw(std::vector<std::int64_t> alpha);
    std::string to_string() const;
};

/// Divides alpha by its gcd and sorts it descending. Throws InputError on
/// empty input or entries below 1.
MonomialSpec normalize_spec(std::vector<std::int64_t> alpha);

/// Exponent vector in Z^n of the image of m under
/// x_(u_1..u_k) -> t_{u_1}^{alpha_1} ... t_{u_k}^{alpha_k} and
/// x_{multiset} -> prod t_i^{count(i)}.
std::vector<std::int64_t> evaluate_phi(const Monomial& m, const MonomialSpec& spec, std::size_t n);
std::vector<std::int64_t> evaluate_phi(const LaurentMonomial& m, const MonomialSpec& spec, std::size_t n);
/// Image of a single variable; Plain arity must equal k.
void add_phi(const Variable& v, std::int64_t e, const MonomialSpec& spec, std::span<std::int64_t> out);

/// phi(lead) == phi(trail).
bool in_kernel(const Binomial& b, const MonomialSpec& spec, std::size_t n);

/// x_w -> x_{ {w_1^alpha_1, ..., w_k^alpha_k} }.
Variable embed_eta(const Variable& v, const MonomialSpec& spec);
Monomial embed_eta(const Monomial& m, const MonomialSpec& spec);
Binomial embed_eta(const Binomial& b, const MonomialSpec& spec);

}  // namespace invchain

#include "invchain/algebra/monomial_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "invchain/error.hpp"

namespace invchain {

std::int64_t MonomialSpec::d() const { return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0}); }

std::int64_t MonomialSpec::r() const { return alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end()); }

std::int64_t MonomialSpec::gcd() const {
    std::int64_t g = 0;
    for (auto a : alpha) g = std::gcd(g, a);
    return g;
}

MonomialSpec MonomialSpec::raw(std::vector<std::int64_t> alpha) {
    if (alpha.empty()) throw InputError("alpha must be nonempty");
    for (auto a : alpha)
        if (a < 1) throw InputError("alpha entries must be positive, got " + std::to_string(a));
    MonomialSpec s;
    s.original = alpha;
    s.alpha = std::move(alpha);
    return s;
}

std::string MonomialSpec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out + ')';
}

MonomialSpec normalize_spec(std::vector<std::int64_t> alpha) {
    auto s = MonomialSpec::raw(std::move(alpha));
    auto g = s.gcd();
    for (auto& a : s.alpha) a /= g;
    std::sort(s.alpha.begin(), s.alpha.end(), std::greater<>());
    s.normalized = true;
    return s;
}

void add_phi(const Variable& v, std::int64_t e, const MonomialSpec& spec, std::span<std::int64_t> out) {
    auto idx = v.indices();
    if (v.max_index() > out.size())
        throw InputError("variable " + v.to_string() + " has an index above n=" + std::to_string(out.size()));
    if (v.is_plain()) {
        if (idx.size() != spec.k())
            throw InputError("variable " + v.to_string() + " does not have arity " + std::to_string(spec.k()));
        for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i] - 1] += e * spec.alpha[i];
    } else {
        for (auto i : idx) out[i - 1] += e;
    }
}

std::vector<std::int64_t> evaluate_phi(const Monomial& m, const MonomialSpec& spec, std::size_t n) {
    std::vector<std::int64_t> out(n, 0);
    for (const auto& [v, e] : m.terms()) add_phi(v, e, spec, out);
    return out;
}

std::vector<std::int64_t> evaluate_phi(const LaurentMonomial& m, const MonomialSpec& spec, std::size_t n) {
    std::vector<std::int64_t> out(n, 0);
    for (const auto& [v, e] : m.terms()) add_phi(v, e, spec, out);
    return out;
}

bool in_kernel(const Binomial& b, const MonomialSpec& spec, std::size_t n) {
    return evaluate_phi(b.lead(), spec, n) == evaluate_phi(b.trail(), spec, n);
}

Variable embed_eta(const Variable& v, const MonomialSpec& spec) {
    if (!v.is_plain()) throw InputError("embed_eta expects a plain variable, got " + v.to_string());
    auto idx = v.indices();
    if (idx.size() != spec.k())
        throw InputError("variable " + v.to_string() + " does not have arity " + std::to_string(spec.k()));
    std::vector<Index> elems;
    for (std::size_t i = 0; i < idx.size(); ++i) elems.insert(elems.end(), spec.alpha[i], idx[i]);
    return Variable::extended(MultiIndex(std::move(elems)));
}

Monomial embed_eta(const Monomial& m, const MonomialSpec& spec) {
    std::vector<Term> out;
    for (const auto& [v, e] : m.terms()) out.emplace_back(embed_eta(v, spec), e);
    return Monomial(std::move(out));
}

Binomial embed_eta(const Binomial& b, const MonomialSpec& spec) {
    return Binomial(embed_eta(b.lead(), spec), embed_eta(b.trail(), spec));
}

}  // namespace invchain

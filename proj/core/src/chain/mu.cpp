#include "invchain/chain/mu.hpp"

#include <algorithm>
#include <map>

#include "invchain/chain/matrices.hpp"
#include "invchain/error.hpp"
#include "invchain/lattice/decompose.hpp"

namespace invchain {

namespace {

void require_extended(const Variable& w) {
    if (w.is_plain()) throw InputError("mu is defined on extended variables, got " + w.to_string());
}

}  // namespace

bool in_eta_image(const Variable& w, const MonomialSpec& spec) {
    require_extended(w);
    auto counts = w.multiset().counts(w.max_index());
    std::vector<std::int64_t> nonzero;
    for (auto c : counts)
        if (c) nonzero.push_back(c);
    auto a = spec.alpha;
    std::sort(a.begin(), a.end());
    std::sort(nonzero.begin(), nonzero.end());
    return a == nonzero;
}

LaurentMonomial construct_mu(const Variable& w, const MonomialSpec& spec, std::size_t n) {
    require_extended(w);
    if (spec.gcd() != 1) throw PreconditionError("mu needs gcd(alpha) = 1, got " + spec.to_string());
    if (n <= spec.k()) throw PreconditionError("mu needs n > k");
    if (w.max_index() > n) throw InputError("variable " + w.to_string() + " has an index above n");
    auto beta = w.multiset().counts(n);

    LaurentMonomial out;
    if (in_eta_image(w, spec)) {
        out = LaurentMonomial({{Variable::plain(tuple_of_placement(spec, beta)), 1}});
    } else {
        std::vector<Term> terms;
        for (const auto& t : integer_decompose(beta, spec, n).terms)
            terms.emplace_back(Variable::plain(t.label), t.coefficient);
        out = LaurentMonomial(std::move(terms));
    }
    if (evaluate_phi(out, spec, n) != beta)
        throw VerificationError("mu(" + w.to_string() + ") = " + out.to_string() + " has the wrong image");
    return out;
}

LaurentMonomial substitute_mu(const Monomial& m, const MonomialSpec& spec, std::size_t n) {
    LaurentMonomial out;
    for (const auto& [v, e] : m.terms()) {
        if (v.is_plain()) {
            out = out * LaurentMonomial({{v, e}});
        } else {
            out = out * construct_mu(v, spec, n).pow(e);
        }
    }
    return out;
}

LaurentElement substitute_mu(const Binomial& b, const MonomialSpec& spec, std::size_t n) {
    return {substitute_mu(b.lead(), spec, n), substitute_mu(b.trail(), spec, n)};
}

std::vector<Binomial> eta_kernel(const MonomialSpec& spec, std::size_t n) {
    std::map<Variable, std::vector<Variable>> fibers;
    for (const auto& u : index_tuples(spec.k(), n)) {
        auto x = Variable::plain(u);
        fibers[embed_eta(x, spec)].push_back(x);
    }
    std::vector<Binomial> out;
    for (const auto& [w, xs] : fibers)
        for (std::size_t i = 1; i < xs.size(); ++i)
            out.emplace_back(Monomial({{xs[i], 1}}), Monomial({{xs[0], 1}}));
    return out;
}

}  // namespace invchain

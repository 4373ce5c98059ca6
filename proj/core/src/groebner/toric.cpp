#include "invchain/groebner/toric.hpp"

#include <map>

#include "invchain/chain/matrices.hpp"
#include "invchain/error.hpp"
#include "invchain/lattice/normal_form.hpp"

namespace invchain {

namespace {

void require_labels(const IntMatrix& A) {
    if (!A.has_labels()) throw InputError("toric ideal construction needs labeled columns");
}

}  // namespace

BinomialIdeal lattice_basis_ideal(const IntMatrix& A, TermOrder order, bool column_order) {
    require_labels(A);
    auto ring = column_order ? PolyRing::ordered(A.labels()) : PolyRing(A.labels());
    std::vector<Binomial> gens;
    for (const auto& v : kernel_basis(A)) {
        std::vector<Term> pos, neg;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            if (!v[j].fits_slong_p()) throw ResourceError("kernel entry too large");
            auto e = v[j].get_si();
            if (e > 0) pos.emplace_back(A.labels()[j], e);
            else neg.emplace_back(A.labels()[j], -e);
        }
        gens.emplace_back(Monomial(std::move(pos)), Monomial(std::move(neg)));
    }
    return {std::move(ring), std::move(gens), order};
}

std::vector<Binomial> quadric_moves(const IntMatrix& A) {
    require_labels(A);
    std::map<IntVector, std::vector<Monomial>> fibers;
    for (std::size_t i = 0; i < A.cols(); ++i)
        for (std::size_t j = i; j < A.cols(); ++j) {
            IntVector s(A.rows());
            for (std::size_t r = 0; r < A.rows(); ++r) s[r] = A(r, i) + A(r, j);
            fibers[s].push_back(Monomial({{A.labels()[i], 1}, {A.labels()[j], 1}}));
        }
    std::vector<Binomial> out;
    for (const auto& [s, ms] : fibers)
        for (std::size_t t = 1; t < ms.size(); ++t) out.emplace_back(ms[0], ms[t]);
    return out;
}

GroebnerBasis toric_ideal_from_matrix(const IntMatrix& A, TermOrder order, const ToricOptions& opts) {
    auto ideal = lattice_basis_ideal(A, order, opts.column_order);
    if (opts.seed_quadrics) {
        auto q = quadric_moves(A);
        ideal.generators.insert(ideal.generators.end(), q.begin(), q.end());
    }
    auto gb = saturate(ideal, opts.saturation, opts.gb);
    const auto& ring = gb.ring();
    for (const auto& g : gb.dense()) {
        IntVector diff(A.cols());
        for (std::size_t j = 0; j < A.cols(); ++j) diff[j] = g.lead[ring.index_of(A.labels()[j])] - g.trail[ring.index_of(A.labels()[j])];
        auto img = A * diff;
        for (const auto& x : img)
            if (x != 0) throw VerificationError("toric basis element outside ker A");
    }
    return gb;
}

Exponent degree_complexity(const MonomialSpec& spec, std::size_t n, TermOrder order, const ToricOptions& opts) {
    if (n <= spec.k()) throw PreconditionError("degree complexity needs n > k");
    return toric_ideal_from_matrix(build_matrix_A(spec, n), order, opts).max_degree();
}

}  // namespace invchain

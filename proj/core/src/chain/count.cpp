#include "invchain/chain/count.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/error.hpp"
#include "invchain/groebner/toric.hpp"

namespace invchain {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

using Key = std::vector<std::int64_t>;

}  // namespace

MinimalGeneratorCount count_minimal_generators(const MonomialSpec& spec, std::size_t n, GeneratorSide which,
                                               const CountOptions& opts) {
    const auto A = which == GeneratorSide::Plain ? build_matrix_A(spec, n) : build_matrix_B(spec, n);
    MinimalGeneratorCount out;
    out.degree_limit = opts.degree_limit ? *opts.degree_limit
                                         : toric_ideal_from_matrix(A, TermOrder::degrevlex(), {opts.gb}).max_degree();
    const std::size_t nv = A.cols();
    std::vector<Key> cols(nv, Key(n));
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = A(i, j).get_si();

    std::set<std::pair<Monomial, Monomial>> orbits;
    for (Exponent D = 1; D <= out.degree_limit; ++D) {
        // Monomials of degree D as nondecreasing variable sequences, grouped by image.
        std::map<Key, std::vector<std::vector<std::size_t>>> fibers;
        std::vector<std::size_t> seq(static_cast<std::size_t>(D));
        Key image(n, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
            if (pos == seq.size()) {
                fibers[image].push_back(seq);
                return;
            }
            for (std::size_t j = from; j < nv; ++j) {
                seq[pos] = j;
                for (std::size_t i = 0; i < n; ++i) image[i] += cols[j][i];
                self(self, pos + 1, j);
                for (std::size_t i = 0; i < n; ++i) image[i] -= cols[j][i];
            }
        };
        rec(rec, 0, 0);

        std::size_t in_degree = 0;
        for (const auto& [b, monos] : fibers) {
            if (monos.size() < 2) continue;
            UnionFind uf(monos.size());
            std::vector<std::size_t> first(nv, monos.size());
            for (std::size_t m = 0; m < monos.size(); ++m)
                for (auto j : monos[m]) {
                    if (first[j] == monos.size()) first[j] = m;
                    else uf.unite(m, first[j]);
                }
            std::size_t comps = 0;
            for (std::size_t m = 0; m < monos.size(); ++m) comps += uf.find(m) == m;
            if (comps < 2) continue;
            in_degree += comps - 1;
            if (!opts.count_orbits) continue;
            auto mono = [&](const std::vector<std::size_t>& js) {
                std::vector<Term> t;
                for (auto j : js) t.emplace_back(A.labels()[j], 1);
                return Monomial(std::move(t));
            };
            for (std::size_t a = 0; a < monos.size(); ++a)
                for (std::size_t c = a + 1; c < monos.size(); ++c) {
                    if (uf.find(a) == uf.find(c)) continue;
                    auto rep = canonical_orbit_rep(Binomial(mono(monos[a]), mono(monos[c]))).rep;
                    orbits.emplace(rep.lead(), rep.trail());
                }
        }
        if (in_degree) out.by_degree[D] = in_degree;
        out.total += in_degree;
    }
    out.modulo_symmetry = orbits.size();
    return out;
}

Exponent max_generator_degree(const MonomialSpec& spec, std::size_t n, const GbOptions& opts) {
    CountOptions co;
    co.gb = opts;
    auto c = count_minimal_generators(spec, n, GeneratorSide::Plain, co);
    return c.by_degree.empty() ? 0 : c.by_degree.rbegin()->first;
}

std::size_t count_minimal_generators_by_pruning(const GroebnerBasis& gb, const GbOptions& opts) {
    auto elems = gb.elements();
    for (const auto& g : elems)
        if (!g.is_homogeneous()) throw PreconditionError("pruning count needs a homogeneous basis");
    std::stable_sort(elems.begin(), elems.end(), [](const Binomial& a, const Binomial& b) { return a.degree() < b.degree(); });
    std::vector<bool> alive(elems.size(), true);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (j != i && alive[j] && elems[j].degree() <= elems[i].degree()) others.push_back(elems[j]);
        if (others.empty()) continue;
        GbOptions o = opts;
        o.degree_bound = elems[i].degree();
        auto sub = reduced_gb({gb.ring(), others, gb.order()}, o);
        if (sub.contains(elems[i])) alive[i] = false;
    }
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

}  // namespace invchain

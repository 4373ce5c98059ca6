#include "invchain/chain/matrices.hpp"

#include <algorithm>

#include "invchain/error.hpp"

namespace invchain {

namespace {

void require_arity(const MonomialSpec& spec, std::size_t n) {
    if (n < spec.k())
        throw InputError("n=" + std::to_string(n) + " is smaller than the number of alpha entries k=" +
                         std::to_string(spec.k()));
}

IntMatrix labeled(const std::vector<Variable>& vars, std::size_t n, const MonomialSpec& spec) {
    IntMatrix M(n, vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) {
        std::vector<std::int64_t> col(n, 0);
        add_phi(vars[j], 1, spec, col);
        for (std::size_t i = 0; i < n; ++i) M(i, j) = static_cast<long>(col[i]);
    }
    M.set_labels(vars);
    return M;
}

}  // namespace

std::vector<IndexTuple> index_tuples(std::size_t k, std::size_t n) {
    std::vector<IndexTuple> out;
    std::vector<Index> cur(k);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            out.emplace_back(cur);
            return;
        }
        for (Index x = 1; x <= n; ++x) {
            if (used[x]) continue;
            used[x] = true;
            cur[pos] = x;
            self(self, pos + 1);
            used[x] = false;
        }
    };
    if (k <= n) rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const IndexTuple& a, const IndexTuple& b) {
        return Variable::plain(a) < Variable::plain(b);
    });
    return out;
}

std::vector<MultiIndex> bounded_multisets(std::size_t d, std::size_t r, std::size_t n) {
    std::vector<MultiIndex> out;
    std::vector<std::int64_t> counts(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos == n) {
            if (left == 0) out.push_back(MultiIndex::from_counts(counts));
            return;
        }
        for (std::size_t c = 0; c <= std::min(r, left); ++c) {
            counts[pos] = static_cast<std::int64_t>(c);
            self(self, pos + 1, left - c);
        }
        counts[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return Variable::extended(a) < Variable::extended(b);
    });
    return out;
}

PolyRing plain_ring(const MonomialSpec& spec, std::size_t n) {
    require_arity(spec, n);
    std::vector<Variable> vars;
    for (const auto& w : index_tuples(spec.k(), n)) vars.push_back(Variable::plain(w));
    return PolyRing(std::move(vars));
}

PolyRing extended_ring(const MonomialSpec& spec, std::size_t n) {
    require_arity(spec, n);
    std::vector<Variable> vars;
    for (const auto& w :
         bounded_multisets(static_cast<std::size_t>(spec.d()), static_cast<std::size_t>(spec.r()), n))
        vars.push_back(Variable::extended(w));
    return PolyRing(std::move(vars));
}

IntMatrix build_matrix_A(const MonomialSpec& spec, std::size_t n) {
    return labeled(plain_ring(spec, n).variables(), n, spec);
}

IntMatrix build_matrix_B(const MonomialSpec& spec, std::size_t n) {
    return labeled(extended_ring(spec, n).variables(), n, spec);
}

}  // namespace invchain

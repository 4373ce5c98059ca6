#include "invchain/lattice/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invchain/error.hpp"

namespace invchain {

namespace {

struct Egcd {
    std::int64_t g, x, y;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    auto r = egcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

void require_coprime(const MonomialSpec& spec, std::size_t n) {
    if (spec.gcd() != 1) throw PreconditionError("gcd of alpha " + spec.to_string() + " is not 1");
    if (n <= spec.k())
        throw PreconditionError("dimension n=" + std::to_string(n) + " must exceed k=" + std::to_string(spec.k()));
}

std::int64_t total(const Vec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

Vec base_alpha(const MonomialSpec& spec, std::size_t n) {
    Vec v(n, 0);
    std::copy(spec.alpha.begin(), spec.alpha.end(), v.begin());
    return v;
}

/// Applies the transposition (a b) to the positions of v (1-based).
Vec transposed(Vec v, std::size_t a, std::size_t b) {
    std::swap(v[a - 1], v[b - 1]);
    return v;
}

}  // namespace

std::string vec_to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ')';
}

Vec bezout(const Vec& alpha) {
    if (alpha.empty()) throw InputError("bezout of an empty vector");
    Vec b(alpha.size(), 0);
    b.back() = 1;
    std::int64_t g = alpha.back();
    for (std::size_t i = alpha.size() - 1; i-- > 0;) {
        auto e = egcd(alpha[i], g);
        b[i] = e.x;
        for (std::size_t j = i + 1; j < alpha.size(); ++j) b[j] *= e.y;
        g = e.g;
    }
    if (g < 0) {
        for (auto& x : b) x = -x;
    }
    return b;
}

Vec place_alpha(const MonomialSpec& spec, const IndexTuple& w, std::size_t n) {
    if (w.size() != spec.k()) throw InputError("tuple " + w.to_string() + " does not have arity k");
    Vec v(n, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > n) throw InputError("tuple " + w.to_string() + " exceeds n=" + std::to_string(n));
        v[w[i] - 1] = spec.alpha[i];
    }
    return v;
}

IndexTuple tuple_of_placement(const MonomialSpec& spec, const Vec& v) {
    std::vector<Index> w(spec.k(), 0);
    std::vector<bool> used(v.size(), false);
    for (std::size_t i = 0; i < spec.k(); ++i) {
        for (std::size_t p = 0; p < v.size(); ++p)
            if (!used[p] && v[p] == spec.alpha[i]) {
                used[p] = true;
                w[i] = static_cast<Index>(p + 1);
                break;
            }
        if (!w[i]) throw InputError("vector " + vec_to_string(v) + " is not a permutation of alpha");
    }
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!used[p] && v[p] != 0) throw InputError("vector " + vec_to_string(v) + " is not a permutation of alpha");
    return IndexTuple(std::move(w));
}

bool span_membership(const Vec& beta, const MonomialSpec& spec, std::size_t n) {
    require_coprime(spec, n);
    if (beta.size() != n) throw InputError("vector length " + std::to_string(beta.size()) + " differs from n");
    return total(beta) % spec.d() == 0;
}

Vec Decomposition::sum(std::size_t n) const {
    Vec s(n, 0);
    for (const auto& t : terms)
        for (std::size_t i = 0; i < n && i < t.column.size(); ++i) s[i] += t.coefficient * t.column[i];
    return s;
}

std::string Decomposition::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        auto c = t.coefficient;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
        out += vec_to_string(t.column);
    }
    return out;
}

Decomposition integer_decompose(const Vec& beta, const MonomialSpec& spec, std::size_t n) {
    require_coprime(spec, n);
    if (beta.size() != n) throw InputError("vector length " + std::to_string(beta.size()) + " differs from n");
    const auto d = spec.d();
    const auto s = total(beta);
    if (s % d != 0)
        throw MembershipError("|beta| = " + std::to_string(s) + " is " + std::to_string(((s % d) + d) % d) +
                              " mod " + std::to_string(d) + ", not 0");
    const auto b = bezout(spec.alpha);
    const auto q = s / d;
    const auto va = base_alpha(spec, n);

    std::vector<Vec> order;
    std::map<Vec, std::int64_t> acc;
    auto put = [&](const Vec& v, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = acc.try_emplace(v, 0);
        if (fresh) order.push_back(v);
        it->second += c;
    };
    put(va, q);
    for (std::size_t j = 1; j < n; ++j) {
        const auto r = beta[j - 1] - va[j - 1] * q;
        if (r == 0) continue;
        for (std::size_t i = 1; i <= spec.k(); ++i) {
            auto v = transposed(va, i, j);
            put(v, r * b[i - 1]);
            put(transposed(v, j, n), -b[i - 1] * r);
        }
    }

    Decomposition out;
    for (const auto& v : order) {
        auto c = acc[v];
        if (c != 0) out.terms.push_back({c, v, tuple_of_placement(spec, v)});
    }
    if (out.sum(n) != beta)
        throw VerificationError("integer decomposition does not re-sum to " + vec_to_string(beta));
    return out;
}

namespace {

Vec plus(const Vec& a, const Vec& b) {
    Vec c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vec positive_part(const Vec& a) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max<std::int64_t>(a[i], 0);
    return c;
}

Vec negative_part(const Vec& a) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max<std::int64_t>(-a[i], 0);
    return c;
}

}  // namespace

Telescope telescope_membership(const Vec& u, const Vec& v, const std::vector<Vec>& h_list) {
    const auto n = u.size();
    if (v.size() != n) throw InputError("u and v have different lengths");
    Vec acc = v;
    for (const auto& h : h_list) {
        if (h.size() != n) throw InputError("h vector has the wrong length");
        acc = plus(acc, h);
    }
    if (acc != u) throw InputError("u differs from v + sum h: " + vec_to_string(u) + " vs " + vec_to_string(acc));

    Telescope t;
    std::vector<Vec> raw;
    Vec w = v;
    Vec c(n, 0);
    for (std::size_t i = 0; i < n; ++i) c[i] = std::max<std::int64_t>({0, -u[i], -v[i]});
    for (std::size_t idx = 0; idx < h_list.size(); ++idx) {
        const auto& h = h_list[idx];
        const auto hm = negative_part(h);
        Vec m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = w[i] - hm[i];
        w = plus(w, h);
        if (std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; })) continue;
        for (std::size_t i = 0; i < n; ++i) c[i] = std::max(c[i], -m[i]);
        raw.push_back(m);
        t.steps.push_back({{}, idx});
    }
    t.clearing = c;
    for (std::size_t s = 0; s < t.steps.size(); ++s) t.steps[s].multiplier = plus(raw[s], c);
    if (!verify_telescope(t, u, v, h_list)) throw VerificationError("telescope expansion failed");
    return t;
}

bool verify_telescope(const Telescope& t, const Vec& u, const Vec& v, const std::vector<Vec>& h_list) {
    std::map<Vec, std::int64_t> lhs, rhs;
    auto put = [](std::map<Vec, std::int64_t>& m, const Vec& e, std::int64_t c) {
        if ((m[e] += c) == 0) m.erase(e);
    };
    for (auto x : t.clearing)
        if (x < 0) return false;
    put(lhs, plus(t.clearing, u), 1);
    put(lhs, plus(t.clearing, v), -1);
    for (const auto& s : t.steps) {
        if (s.h_index >= h_list.size()) return false;
        for (auto x : s.multiplier)
            if (x < 0) return false;
        const auto& h = h_list[s.h_index];
        put(rhs, plus(s.multiplier, positive_part(h)), 1);
        put(rhs, plus(s.multiplier, negative_part(h)), -1);
    }
    for (const auto& [e, c] : lhs)
        for (auto x : e)
            if (x < 0) return false;
    return lhs == rhs;
}

NormalityWitness normality_witness(const MonomialSpec& spec, std::size_t n) {
    if (spec.square_free()) throw PreconditionError("alpha " + spec.to_string() + " is square-free");
    require_coprime(spec, n);
    const auto d = static_cast<std::size_t>(spec.d());
    if (n < d) throw PreconditionError("n must be at least |alpha| = " + std::to_string(d));

    NormalityWitness w;
    w.z.assign(n, 0);
    std::fill(w.z.begin(), w.z.begin() + static_cast<std::ptrdiff_t>(d), 1);
    w.in_integer_span = span_membership(w.z, spec, n);

    // Cyclic shifts of (alpha, 0, ..., 0) inside the first |alpha| positions sum to |alpha| * z.
    Vec sum(n, 0);
    Vec va = base_alpha(spec, n);
    for (std::size_t s = 0; s < d; ++s) {
        Vec shifted(n, 0);
        for (std::size_t p = 0; p < d; ++p) shifted[(p + s) % d] = va[p];
        w.cone_columns.push_back(shifted);
        sum = plus(sum, shifted);
    }
    Vec target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<std::int64_t>(d) * w.z[i];
    w.in_cone = sum == target;

    // Exhaustive search over nonnegative combinations of columns with
    // coefficient sum at most |alpha|, pruned by z - partial >= 0.
    std::vector<Vec> columns;
    std::vector<Index> tuple(spec.k());
    std::vector<bool> used(n + 1, false);
    auto gen = [&](auto&& self, std::size_t pos) -> void {
        if (pos == spec.k()) {
            columns.push_back(place_alpha(spec, IndexTuple(tuple), n));
            return;
        }
        for (Index x = 1; x <= n; ++x) {
            if (used[x]) continue;
            used[x] = true;
            tuple[pos] = x;
            self(self, pos + 1);
            used[x] = false;
        }
    };
    gen(gen, 0);
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

    bool reachable = false;
    auto search = [&](auto&& self, const Vec& rest, std::size_t from, std::size_t budget) -> void {
        if (reachable) return;
        if (std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; })) {
            reachable = true;
            return;
        }
        if (budget == 0) return;
        for (std::size_t c = from; c < columns.size() && !reachable; ++c) {
            Vec next(rest);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = (next[i] -= columns[c][i]) >= 0;
            if (ok) self(self, next, c, budget - 1);
        }
    };
    search(search, w.z, 0, d);
    w.in_semigroup = reachable;
    return w;
}

}  // namespace invchain

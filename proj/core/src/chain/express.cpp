#include "invchain/chain/express.hpp"

#include <map>
#include <optional>
#include <tuple>

#include "invchain/algebra/laurent_polynomial.hpp"
#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/error.hpp"
#include "invchain/lattice/decompose.hpp"
#include "invchain/lattice/normal_form.hpp"

namespace invchain {

bool EquivariantExpression::check(const std::vector<Binomial>& generators) const {
    LaurentPolynomial rhs;
    for (const auto& t : terms) {
        if (t.generator >= generators.size()) return false;
        rhs.add_multiple(t.sign, t.coefficient, LaurentElement(generators[t.generator].permuted(t.sigma)));
    }
    return rhs == LaurentPolynomial::of(target);
}

std::string EquivariantExpression::to_string() const {
    std::string out = target.to_string() + " =";
    if (terms.empty()) return out + " 0";
    bool first = true;
    for (const auto& t : terms) {
        out += first ? (t.sign < 0 ? " -" : " ") : (t.sign < 0 ? " - " : " + ");
        first = false;
        if (std::abs(t.sign) != 1) out += std::to_string(std::abs(t.sign)) + "*";
        out += "[" + t.coefficient.to_string() + "] " + t.sigma.to_string() + " g" + std::to_string(t.generator + 1);
    }
    return out;
}

namespace {

struct Image {
    std::size_t generator;
    Permutation sigma;
    Vec diff;    ///< lead - trail
    Vec common;  ///< exponent of gcd(lead, trail)
};

LaurentMonomial laurent_of(const PolyRing& ring, const Vec& e) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t.emplace_back(ring.variable(i), e[i]);
    return LaurentMonomial(std::move(t));
}

Vec dense64(const PolyRing& ring, const Monomial& m) {
    auto d = ring.dense(m);
    return Vec(d.begin(), d.end());
}

Vec negated(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

// Greedy descent: subtract the image that shrinks the 1-norm of the remainder
// most, finishing as soon as the remainder is one or two images (found by
// lookup). Gives up when no image helps.
std::optional<IntVector> short_combination(const std::vector<Image>& images, const std::map<Vec, std::size_t>& seen,
                                           Vec rest, std::size_t max_rounds) {
    IntVector sol(images.size(), 0);
    auto hit = [&](const Vec& v) -> std::optional<std::pair<std::size_t, int>> {
        if (auto it = seen.find(v); it != seen.end()) return std::pair{it->second, 1};
        if (auto it = seen.find(negated(v)); it != seen.end()) return std::pair{it->second, -1};
        return std::nullopt;
    };
    auto norm = [](const Vec& v) {
        std::int64_t s = 0;
        for (auto x : v) s += std::abs(x);
        return s;
    };
    Vec tmp(rest.size());
    for (std::size_t round = 0; round < max_rounds; ++round) {
        if (auto h = hit(rest)) {
            sol[h->first] += h->second;
            return sol;
        }
        std::int64_t best = norm(rest);
        std::optional<std::pair<std::size_t, int>> pick;
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (int s : {1, -1}) {
                for (std::size_t k = 0; k < rest.size(); ++k) tmp[k] = rest[k] - s * images[i].diff[k];
                if (auto h = hit(tmp)) {
                    sol[i] += s;
                    sol[h->first] += h->second;
                    return sol;
                }
                if (auto nt = norm(tmp); nt < best) {
                    best = nt;
                    pick = std::pair{i, s};
                }
            }
        }
        if (!pick) return std::nullopt;
        sol[pick->first] += pick->second;
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= pick->second * images[pick->first].diff[k];
    }
    return std::nullopt;
}

Integer l1(const IntVector& x) {
    Integer s = 0;
    for (const auto& c : x) s += abs(c);
    return s;
}

// Shortens x along kernel directions: rounded projections first, then unit
// steps while the 1-norm decreases.
void size_reduce(IntVector& x, const std::vector<IntVector>& kernel) {
    auto dot = [](const IntVector& a, const IntVector& b) {
        Integer s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    auto axpy = [](IntVector& y, const Integer& c, const IntVector& k) {
        for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * k[i];
    };
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (const auto& k : kernel) {
            const Integer kk = dot(k, k);
            if (kk == 0) continue;
            Integer num = 2 * dot(x, k) + kk, c;
            mpz_fdiv_q(c.get_mpz_t(), num.get_mpz_t(), Integer(2 * kk).get_mpz_t());
            if (c == 0) continue;
            axpy(x, c, k);
            changed = true;
        }
        if (!changed) break;
    }
    std::size_t budget = 10000;
    for (bool improved = true; improved && budget > 0; --budget) {
        improved = false;
        for (const auto& k : kernel) {
            for (int s : {1, -1}) {
                IntVector y(x);
                axpy(y, s, k);
                if (l1(y) < l1(x)) {
                    x = std::move(y);
                    improved = true;
                }
            }
        }
    }
}

// Solves over linearly independent images first, whose solution is unique
// and small; further images are added only if the target needs them.
std::optional<IntVector> solve_over_basis(const std::vector<Image>& images, const Vec& target) {
    if (images.empty()) return std::nullopt;
    const auto t = to_int_vector(target);
    LatticeBasis lat(images.front().diff.size());
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto before = lat.rank();
        lat.add(to_int_vector(images[i].diff));
        if (lat.rank() > before) chosen.push_back(i);
    }
    LatticeBasis part(lat.dim());
    for (auto i : chosen) part.add(to_int_vector(images[i].diff));
    for (std::size_t i = 0; i < images.size() && !part.contains(t); ++i) {
        auto v = to_int_vector(images[i].diff);
        if (part.contains(v)) continue;
        part.add(v);
        chosen.push_back(i);
    }
    if (!part.contains(t)) return std::nullopt;
    std::vector<IntVector> cols;
    for (auto i : chosen) cols.push_back(to_int_vector(images[i].diff));
    const auto M = IntMatrix::from_columns(cols);
    auto x = solve_integer(M, t);
    if (!x) throw VerificationError("lattice membership and integer solving disagree");
    size_reduce(*x, kernel_basis(M));
    IntVector sol(images.size(), 0);
    for (std::size_t j = 0; j < chosen.size(); ++j) sol[chosen[j]] = (*x)[j];
    return sol;
}

}  // namespace

EquivariantExpression express_equivariant(const Binomial& f, const std::vector<Binomial>& G, const MonomialSpec& spec,
                                          std::size_t m, const ExpressOptions& opts) {
    if (m > opts.max_m)
        throw ResourceError("m=" + std::to_string(m) + " exceeds the limit " + std::to_string(opts.max_m));
    if (f.max_index() > m) throw InputError("target " + f.to_string() + " has an index above m");
    if (!in_kernel(f, spec, m)) throw MembershipError(f.to_string() + " is not in the Laurent toric ideal");

    EquivariantExpression out;
    out.target = f;
    auto ring = plain_ring(spec, m);
    std::vector<Image> images;
    std::map<Vec, std::size_t> seen;
    bool direct = false;
    const auto reduced = f.without_common_factor();
    const auto factor = exact_quotient(f.lead(), reduced.lead()).to_laurent();
    for (std::size_t gi = 0; gi < G.size() && !direct; ++gi) {
        if (G[gi].max_index() > m) continue;
        for_each_support_injection(G[gi].support_indices(), m, [&](const Permutation& p) {
            auto img = G[gi].permuted(p);
            if (img == reduced || img.negated() == reduced) {
                out.terms.push_back({img == reduced ? 1 : -1, factor, p, gi});
                direct = true;
                return false;
            }
            auto a = dense64(ring, img.lead());
            auto b = dense64(ring, img.trail());
            Vec diff(a.size()), common(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                diff[i] = a[i] - b[i];
                common[i] = std::min(a[i], b[i]);
            }
            if (seen.emplace(diff, images.size()).second) images.push_back({gi, p, diff, common});
            return true;
        });
    }

    if (!direct) {
        const auto u = dense64(ring, f.lead());
        const auto v = dense64(ring, f.trail());
        Vec target(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) target[i] = u[i] - v[i];

        if (images.empty()) throw MembershipError(f.to_string() + " is not in the Laurent ideal generated by the given set");
        auto sol = short_combination(images, seen, target, 64);
        if (!sol) sol = solve_over_basis(images, target);
        if (!sol) throw MembershipError(f.to_string() + " is not in the Laurent ideal generated by the given set");

        std::vector<Vec> h_list;
        std::vector<std::pair<std::size_t, int>> origin;
        Integer steps = 0;
        for (const auto& c : *sol) steps += abs(c);
        if (steps > opts.max_steps)
            throw ResourceError("expression needs " + steps.get_str() + " telescoping steps, above the limit");
        for (std::size_t j = 0; j < sol->size(); ++j) {
            const auto c = (*sol)[j].get_si();
            if (c == 0) continue;
            const int s = c > 0 ? 1 : -1;
            Vec h(images[j].diff);
            if (s < 0)
                for (auto& x : h) x = -x;
            for (std::int64_t r = 0; r < std::abs(c); ++r) {
                h_list.push_back(h);
                origin.emplace_back(j, s);
            }
        }

        // z^c (f) = sum z^{m_s} (z^{h+} - z^{h-}) and z^{h+} - z^{h-} = s z^{-common} image.
        auto tel = telescope_membership(u, v, h_list);
        std::map<std::tuple<std::size_t, LaurentMonomial>, std::int64_t> merged;
        for (const auto& st : tel.steps) {
            auto [j, s] = origin[st.h_index];
            Vec e(st.multiplier);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] -= images[j].common[i] + tel.clearing[i];
            merged[{j, laurent_of(ring, e)}] += s;
        }
        for (const auto& [key, c] : merged) {
            if (c == 0) continue;
            const auto& im = images[std::get<0>(key)];
            out.terms.push_back({c, std::get<1>(key), im.sigma, im.generator});
        }
    }

    out.verified = out.check(G);
    if (!out.verified) throw VerificationError("expression for " + f.to_string() + " does not re-expand");
    return out;
}

}  // namespace invchain

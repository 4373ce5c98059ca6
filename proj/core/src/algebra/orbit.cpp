#include "invchain/algebra/orbit.hpp"

#include <algorithm>
#include <set>

#include "invchain/error.hpp"

namespace invchain {

std::vector<std::int64_t> monomial_key(const Monomial& m) {
    std::vector<std::int64_t> key;
    for (const auto& [v, e] : m.terms()) {
        key.push_back(static_cast<std::int64_t>(v.kind()));
        key.push_back(v.max_index());
        key.push_back(static_cast<std::int64_t>(v.indices().size()));
        key.insert(key.end(), v.indices().begin(), v.indices().end());
        key.push_back(e);
    }
    key.push_back(-1);
    return key;
}

namespace {

std::pair<std::vector<std::int64_t>, bool> binomial_key(const Binomial& b) {
    auto kl = monomial_key(b.lead());
    auto kt = monomial_key(b.trail());
    bool swap = kt < kl;
    if (swap) std::swap(kl, kt);
    kl.insert(kl.end(), kt.begin(), kt.end());
    return {std::move(kl), swap};
}

Permutation completed(const std::vector<Index>& support, const std::vector<Index>& image, std::size_t n) {
    std::size_t deg = n;
    for (auto s : support) deg = std::max<std::size_t>(deg, s);
    std::vector<Index> images(deg, 0);
    std::vector<bool> used(deg + 1, false);
    for (std::size_t i = 0; i < support.size(); ++i) {
        images[support[i] - 1] = image[i];
        used[image[i]] = true;
    }
    Index next = 1;
    for (std::size_t i = 0; i < deg; ++i) {
        if (images[i]) continue;
        while (used[next]) ++next;
        images[i] = next;
        used[next] = true;
    }
    return Permutation::from_images(std::move(images));
}

}  // namespace

void for_each_support_injection(const std::vector<Index>& support, std::size_t n,
                                const std::function<bool(const Permutation&)>& f) {
    const std::size_t s = support.size();
    if (s > n) return;
    std::vector<Index> image(s, 0);
    std::vector<bool> used(n + 1, false);
    bool go = true;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (!go) return;
        if (pos == s) {
            go = f(completed(support, image, n));
            return;
        }
        for (Index j = 1; j <= n && go; ++j) {
            if (used[j]) continue;
            used[j] = true;
            image[pos] = j;
            rec(pos + 1);
            used[j] = false;
        }
    };
    rec(0);
}

OrbitRep canonical_orbit_rep(const Binomial& b, std::size_t max_support) {
    auto support = b.support_indices();
    if (support.size() > max_support)
        throw ResourceError("orbit canonical form: support of size " + std::to_string(support.size()) +
                            " exceeds the limit " + std::to_string(max_support));
    std::vector<Index> image(support.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<Index>(i + 1);

    std::vector<std::int64_t> best_key;
    std::vector<Index> best_image;
    do {
        auto p = completed(support, image, support.size());
        auto [key, swap] = binomial_key(b.permuted(p));
        if (best_image.empty() || key < best_key) {
            best_key = std::move(key);
            best_image = image;
        }
    } while (std::next_permutation(image.begin(), image.end()));

    auto witness = completed(support, best_image, support.size());
    auto img = b.permuted(witness);
    if (binomial_key(img).second) img = img.negated();
    return {img, witness};
}

std::vector<Binomial> symmetrize(const std::vector<Binomial>& generators, std::size_t n, const TermOrder& order) {
    std::vector<Binomial> out;
    std::set<std::pair<Monomial, Monomial>> seen;
    for (const auto& g : generators) {
        if (g.max_index() > n)
            throw InputError("generator " + g.to_string() + " has an index above n=" + std::to_string(n));
        for_each_support_injection(g.support_indices(), n, [&](const Permutation& p) {
            auto img = g.permuted(p).oriented(order);
            if (seen.emplace(img.lead(), img.trail()).second) out.push_back(std::move(img));
            return true;
        });
    }
    return out;
}

}  // namespace invchain

#include "invchain/wpo/dlex.hpp"

#include <algorithm>
#include <numeric>

#include "invchain/error.hpp"

namespace invchain {

namespace {

Index max_of(const Tuple& t) { return t.empty() ? 0 : *std::max_element(t.begin(), t.end()); }

void check_tuple(const Tuple& t) {
    for (auto x : t)
        if (x < 1) throw InputError("tuple entries must be positive: " + tuple_to_string(t));
}

Tuple image_of(const Permutation& p, const Tuple& t) {
    Tuple out;
    out.reserve(t.size());
    for (auto x : t) out.push_back(p(x));
    return out;
}

}  // namespace

std::string tuple_to_string(const Tuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out + ')';
}

std::strong_ordering dlex_compare(const Tuple& u, const Tuple& v) {
    if (u.size() != v.size())
        throw InputError("dlex comparison of tuples of different arity: " + tuple_to_string(u) + " vs " +
                         tuple_to_string(v));
    if (auto c = max_of(u) <=> max_of(v); c != 0) return c;
    return u <=> v;
}

std::strong_ordering dlex_compare(const IndexTuple& u, const IndexTuple& v) {
    return dlex_compare(Tuple(u.entries().begin(), u.entries().end()), Tuple(v.entries().begin(), v.entries().end()));
}

std::vector<Tuple> tuples_below(const Tuple& t) {
    check_tuple(t);
    const Index m = max_of(t);
    const std::size_t k = t.size();
    std::vector<Tuple> out;
    if (k == 0) return out;
    Tuple v(k, 1);
    // Odometer over [m]^k, already in lexicographic order; sorted by dlex below.
    while (true) {
        if (dlex_compare(v, t) < 0) out.push_back(v);
        std::size_t i = k;
        while (i > 0 && v[i - 1] == m) v[--i] = 1;
        if (i == 0) break;
        ++v[i - 1];
    }
    std::sort(out.begin(), out.end(), [](const Tuple& a, const Tuple& b) { return dlex_compare(a, b) < 0; });
    return out;
}

bool is_preceq_witness(const Permutation& sigma, const Tuple& s, const Tuple& t) {
    const std::size_t m = std::max<std::size_t>(max_of(s), max_of(t));
    auto p = sigma.extended(m);
    if (image_of(p, s) != t) return false;
    for (const auto& v : tuples_below(s))
        if (dlex_compare(image_of(p, v), t) >= 0) return false;
    return true;
}

WitnessResult preceq_witness(const Tuple& s, const Tuple& t, std::size_t bound) {
    check_tuple(s);
    check_tuple(t);
    WitnessResult result;
    const Index m = max_of(t);
    result.search_bound = m;
    if (dlex_compare(s, t) > 0) return result;
    if (m > bound)
        throw ResourceError("bound too large: witness search needs S_" + std::to_string(m) +
                            " but the limit is " + std::to_string(bound));
    const auto below = tuples_below(s);
    std::vector<Index> images(m);
    std::iota(images.begin(), images.end(), Index{1});
    do {
        bool maps = true;
        for (std::size_t i = 0; i < s.size() && maps; ++i) maps = images[s[i] - 1] == t[i];
        if (!maps) continue;
        bool ok = true;
        for (const auto& v : below) {
            Tuple w;
            w.reserve(v.size());
            for (auto x : v) w.push_back(images[x - 1]);
            if (dlex_compare(w, t) >= 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.found = true;
            result.witness = Permutation::from_images(images);
            return result;
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

}  // namespace invchain

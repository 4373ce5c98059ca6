#include "invchain/algebra/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "invchain/error.hpp"

namespace invchain {

Permutation Permutation::identity(std::size_t n) {
    std::vector<Index> images(n);
    std::iota(images.begin(), images.end(), Index{1});
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Index> images) {
    std::vector<bool> hit(images.size() + 1, false);
    for (auto x : images) {
        if (x < 1 || x > images.size() || hit[x]) throw InputError("image sequence is not a bijection");
        hit[x] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Index>>& cycles, std::size_t n) {
    for (const auto& c : cycles)
        for (auto x : c) {
            if (x < 1) throw InputError("cycle entries must be positive");
            n = std::max<std::size_t>(n, x);
        }
    auto result = identity(n);
    // Rightmost cycle acts first.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& c = *it;
        std::vector<bool> seen(n + 1, false);
        for (auto x : c) {
            if (seen[x]) throw InputError("repeated entry inside a cycle");
            seen[x] = true;
        }
        auto step = identity(n);
        for (std::size_t i = 0; i < c.size(); ++i) step.images_[c[i] - 1] = c[(i + 1) % c.size()];
        result = step * result;
    }
    return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<Index>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
        ++i;
        std::vector<Index> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            unsigned long value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc()) throw InputError("bad integer in cycle notation: " + std::string(text));
            cycle.push_back(static_cast<Index>(value));
            i = static_cast<std::size_t>(ptr - text.data());
            skip_ws();
        }
        if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
        ++i;
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    return from_cycles(cycles, n);
}

Index Permutation::operator()(Index i) const {
    if (i < 1 || i > images_.size())
        throw InputError("index " + std::to_string(i) + " out of permutation range [1," +
                         std::to_string(images_.size()) + "]");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<Index> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<Index>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::extended(std::size_t n) const {
    if (n <= images_.size()) return *this;
    auto images = images_;
    for (std::size_t i = images.size(); i < n; ++i) images.push_back(static_cast<Index>(i + 1));
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (Index start = 1; start <= images_.size(); ++start) {
        if (seen[start] || images_[start - 1] == start) continue;
        out += '(';
        Index x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = images_[x - 1];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    std::size_t n = std::max(p.degree(), q.degree());
    auto pe = p.extended(n);
    auto qe = q.extended(n);
    std::vector<Index> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = pe.images_[qe.images_[i] - 1];
    return Permutation(std::move(images));
}

bool operator==(const Permutation& p, const Permutation& q) {
    std::size_t n = std::max(p.degree(), q.degree());
    return p.extended(n).images_ == q.extended(n).images_;
}

}  // namespace invchain

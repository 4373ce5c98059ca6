#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "invchain/algebra/monomial.hpp"

namespace invchain {

/// Monomial order over the global variable order. Variables are ranked by
/// dlex: the dlex-smallest variable is the largest one for the term order,
/// so x_(1,2) > x_(2,1) > x_(1,3) > ... as in the usual x_1 > x_2 > ...
class TermOrder {
public:
    enum class Kind { Degrevlex, Deglex, Lex };

    TermOrder() = default;
    explicit TermOrder(Kind kind) : kind_(kind) {}
    static TermOrder degrevlex() { return TermOrder(Kind::Degrevlex); }
    static TermOrder deglex() { return TermOrder(Kind::Deglex); }
    static TermOrder lex() { return TermOrder(Kind::Lex); }
    /// "degrevlex", "deglex" or "lex".
    static TermOrder parse(std::string_view name);

    Kind kind() const { return kind_; }
    std::string name() const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    /// Same comparison on dense exponent vectors listed from the largest variable down.
    template <class E>
    std::strong_ordering compare_dense(std::span<const E> a, std::span<const E> b) const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    Kind kind_ = Kind::Degrevlex;
};

template <class E>
std::strong_ordering TermOrder::compare_dense(std::span<const E> a, std::span<const E> b) const {
    const std::size_t n = a.size();
    if (kind_ != Kind::Lex) {
        long long da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
    }
    if (kind_ == Kind::Degrevlex) {
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

}  // namespace invchain

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invchain/algebra/variable.hpp"

namespace invchain {

using Exponent = std::int64_t;
using Term = std::pair<Variable, Exponent>;

/// A monomial x^a over tuple- or multiset-indexed variables, stored sparsely
/// as (variable, exponent) pairs sorted by variable. Zero exponents are never
/// stored, so structural equality is monomial equality.
///
/// With Laurent = false exponents are positive; with Laurent = true they are
/// arbitrary nonzero integers.
template <bool Laurent>
class BasicMonomial {
public:
    BasicMonomial() = default;
    /// Terms may be unsorted and repeated; they are merged and zeros dropped.
    explicit BasicMonomial(std::vector<Term> terms);
    static BasicMonomial variable(const Variable& v, Exponent e = 1) { return BasicMonomial({{v, e}}); }

    /// Text form "(1,2)^2*(3,1)"; "1" is the unit monomial.
    static BasicMonomial parse(std::string_view text);

    std::span<const Term> terms() const { return terms_; }
    bool is_one() const { return terms_.empty(); }
    Exponent degree() const;
    Exponent exponent(const Variable& v) const;
    Index max_index() const;
    /// Sorted distinct indices occurring in any variable.
    std::vector<Index> support_indices() const;

    BasicMonomial permuted(const Permutation& p) const;

    std::string to_string() const;

    friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
    /// Structural order for use as a container key; not a term order.
    friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;

    friend BasicMonomial operator*(const BasicMonomial& a, const BasicMonomial& b) {
        std::vector<Term> t(a.terms_);
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return BasicMonomial(std::move(t));
    }

protected:
    std::vector<Term> terms_;
};

class Monomial;

class LaurentMonomial : public BasicMonomial<true> {
public:
    using BasicMonomial<true>::BasicMonomial;
    LaurentMonomial(BasicMonomial<true> m) : BasicMonomial<true>(std::move(m)) {}
    static LaurentMonomial parse(std::string_view text) { return BasicMonomial<true>::parse(text); }

    LaurentMonomial inverse() const;
    LaurentMonomial pow(Exponent e) const;
    /// Positive part x^{a+}.
    Monomial numerator() const;
    /// Negative part x^{a-}, so that this = numerator / denominator.
    Monomial denominator() const;
    bool is_polynomial() const;
    LaurentMonomial permuted(const Permutation& p) const { return BasicMonomial<true>::permuted(p); }

    friend LaurentMonomial operator/(const LaurentMonomial& a, const LaurentMonomial& b) { return a * b.inverse(); }
};

class Monomial : public BasicMonomial<false> {
public:
    using BasicMonomial<false>::BasicMonomial;
    Monomial(BasicMonomial<false> m) : BasicMonomial<false>(std::move(m)) {}
    static Monomial parse(std::string_view text) { return BasicMonomial<false>::parse(text); }
    /// Throws InputError if m has a negative exponent.
    static Monomial from_laurent(const LaurentMonomial& m);

    bool divides(const Monomial& other) const;
    Monomial pow(Exponent e) const;
    LaurentMonomial to_laurent() const;
    Monomial permuted(const Permutation& p) const { return BasicMonomial<false>::permuted(p); }

    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    /// a / b; throws InputError unless b divides a.
    friend Monomial exact_quotient(const Monomial& a, const Monomial& b);
};

}  // namespace invchain

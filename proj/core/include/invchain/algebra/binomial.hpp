#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "invchain/algebra/monomial.hpp"
#include "invchain/algebra/term_order.hpp"

namespace invchain {

/// lead - trail, with unit coefficients.
class Binomial {
public:
    Binomial() = default;
    /// Throws InputError if lead == trail.
    Binomial(Monomial lead, Monomial trail);
    /// "lead - trail", e.g. "(1,2)^2*(3,1) - (1,3)^2*(2,1)".
    static Binomial parse(std::string_view text);

    const Monomial& lead() const { return lead_; }
    const Monomial& trail() const { return trail_; }

    Exponent degree() const { return std::max(lead_.degree(), trail_.degree()); }
    bool is_homogeneous() const { return lead_.degree() == trail_.degree(); }
    Index max_index() const { return std::max(lead_.max_index(), trail_.max_index()); }
    std::vector<Index> support_indices() const;
    /// Every variable occurring in either monomial, sorted, without repeats.
    std::vector<Variable> variables() const;

    /// trail - lead.
    Binomial negated() const { return Binomial(trail_, lead_); }
    /// The same binomial up to sign with lead > trail under the order.
    Binomial oriented(const TermOrder& order) const;
    /// Divides both monomials by their gcd.
    Binomial without_common_factor() const;
    /// lead / trail as a Laurent monomial.
    LaurentMonomial ratio() const { return lead_.to_laurent() / trail_.to_laurent(); }

    Binomial permuted(const Permutation& p) const { return Binomial(lead_.permuted(p), trail_.permuted(p)); }

    std::string to_string() const { return lead_.to_string() + " - " + trail_.to_string(); }

    friend bool operator==(const Binomial&, const Binomial&) = default;

private:
    Monomial lead_;
    Monomial trail_;
};

/// A formal difference lead - trail of Laurent monomials.
class LaurentElement {
public:
    LaurentElement() = default;
    LaurentElement(LaurentMonomial lead, LaurentMonomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}
    explicit LaurentElement(const Binomial& b) : lead_(b.lead().to_laurent()), trail_(b.trail().to_laurent()) {}
    static LaurentElement parse(std::string_view text);

    const LaurentMonomial& lead() const { return lead_; }
    const LaurentMonomial& trail() const { return trail_; }

    /// q = lead / trail; the element equals trail * (q - 1).
    LaurentMonomial ratio() const { return lead_ / trail_; }
    /// num(q) - den(q): the binomial generating the same Laurent ideal,
    /// equal to this element times the monomial den(q) / trail.
    /// Throws InputError if lead == trail.
    Binomial cleared() const;

    LaurentElement permuted(const Permutation& p) const { return {lead_.permuted(p), trail_.permuted(p)}; }
    std::string to_string() const { return lead_.to_string() + " - " + trail_.to_string(); }

    friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

private:
    LaurentMonomial lead_;
    LaurentMonomial trail_;
};

/// Relabels indices through p. Every index must lie in [1, p.degree()].
inline IndexTuple apply_permutation(const Permutation& p, const IndexTuple& w) {
    std::vector<Index> out;
    for (auto i : w.entries()) out.push_back(p(i));
    return IndexTuple(std::move(out));
}
inline Monomial apply_permutation(const Permutation& p, const Monomial& m) { return m.permuted(p); }
inline LaurentMonomial apply_permutation(const Permutation& p, const LaurentMonomial& m) { return m.permuted(p); }
inline Binomial apply_permutation(const Permutation& p, const Binomial& b) { return b.permuted(p); }
inline LaurentElement apply_permutation(const Permutation& p, const LaurentElement& e) { return e.permuted(p); }

}  // namespace invchain

#include "invchain/algebra/binomial.hpp"

#include <algorithm>

#include "invchain/error.hpp"

namespace invchain {

namespace {

std::pair<std::string_view, std::string_view> split_difference(std::string_view text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '{') ++depth;
        else if (c == ')' || c == '}') --depth;
        // A '-' right after '^' is an exponent sign.
        else if (c == '-' && depth == 0 && !(i > 0 && text[i - 1] == '^'))
            return {text.substr(0, i), text.substr(i + 1)};
    }
    throw InputError("expected 'lead - trail': " + std::string(text));
}

}  // namespace

Binomial::Binomial(Monomial lead, Monomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {
    if (lead_ == trail_) throw InputError("binomial with equal monomials: " + lead_.to_string());
}

Binomial Binomial::parse(std::string_view text) {
    auto [l, t] = split_difference(text);
    return Binomial(Monomial::parse(l), Monomial::parse(t));
}

std::vector<Index> Binomial::support_indices() const {
    auto a = lead_.support_indices();
    auto b = trail_.support_indices();
    std::vector<Index> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Variable> Binomial::variables() const {
    std::vector<Variable> out;
    for (const auto& t : lead_.terms()) out.push_back(t.first);
    for (const auto& t : trail_.terms()) out.push_back(t.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Binomial Binomial::oriented(const TermOrder& order) const {
    return order.compare(lead_, trail_) > 0 ? *this : negated();
}

Binomial Binomial::without_common_factor() const {
    auto g = gcd(lead_, trail_);
    if (g.is_one()) return *this;
    return Binomial(exact_quotient(lead_, g), exact_quotient(trail_, g));
}

LaurentElement LaurentElement::parse(std::string_view text) {
    auto [l, t] = split_difference(text);
    return {LaurentMonomial::parse(l), LaurentMonomial::parse(t)};
}

Binomial LaurentElement::cleared() const {
    auto q = ratio();
    if (q.is_one()) throw InputError("Laurent element is zero: " + to_string());
    return Binomial(q.numerator(), q.denominator());
}

}  // namespace invchain

#include "invchain/algebra/term_order.hpp"

#include <vector>

#include "invchain/error.hpp"

namespace invchain {

TermOrder TermOrder::parse(std::string_view name) {
    if (name == "degrevlex" || name == "grevlex") return degrevlex();
    if (name == "deglex" || name == "glex") return deglex();
    if (name == "lex") return lex();
    throw InputError("unknown term order '" + std::string(name) + "' (expected degrevlex, deglex or lex)");
}

std::string TermOrder::name() const {
    switch (kind_) {
        case Kind::Degrevlex: return "degrevlex";
        case Kind::Deglex: return "deglex";
        case Kind::Lex: return "lex";
    }
    return "degrevlex";
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    // Merge both supports into one dense slice in variable order.
    std::vector<Exponent> ea, eb;
    auto x = a.terms();
    auto y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            ea.push_back(x[i++].second);
            eb.push_back(0);
        } else if (i == x.size() || y[j].first < x[i].first) {
            ea.push_back(0);
            eb.push_back(y[j++].second);
        } else {
            ea.push_back(x[i++].second);
            eb.push_back(y[j++].second);
        }
    }
    return compare_dense<Exponent>(ea, eb);
}

}  // namespace invchain

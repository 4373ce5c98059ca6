#include "invchain/algebra/laurent_polynomial.hpp"

namespace invchain {

LaurentPolynomial LaurentPolynomial::of(const Binomial& b) { return of(LaurentElement(b)); }

LaurentPolynomial LaurentPolynomial::of(const LaurentElement& e) {
    LaurentPolynomial p;
    p.add(e.lead(), 1);
    p.add(e.trail(), -1);
    return p;
}

void LaurentPolynomial::add(const LaurentMonomial& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

void LaurentPolynomial::add_multiple(std::int64_t c, const LaurentMonomial& m, const LaurentElement& e) {
    add(m * e.lead(), c);
    add(m * e.trail(), -c);
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        auto a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += m.to_string();
    }
    return out;
}

}  // namespace invchain

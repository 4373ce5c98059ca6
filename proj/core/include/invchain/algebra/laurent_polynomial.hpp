#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "invchain/algebra/binomial.hpp"

namespace invchain {

/// Sparse integer combination of Laurent monomials. Only used to re-expand
/// and check certificates, so it supports accumulation and comparison only.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial of(const Binomial& b);
    static LaurentPolynomial of(const LaurentElement& e);

    void add(const LaurentMonomial& m, std::int64_t c);
    /// this += c * m * (lead - trail)
    void add_multiple(std::int64_t c, const LaurentMonomial& m, const LaurentElement& e);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<LaurentMonomial, std::int64_t>& terms() const { return terms_; }
    std::string to_string() const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::map<LaurentMonomial, std::int64_t> terms_;
};

}  // namespace invchain

#include "invchain/algebra/monomial.hpp"

#include <algorithm>
#include <charconv>

#include "invchain/error.hpp"

namespace invchain {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

template <bool Laurent>
BasicMonomial<Laurent>::BasicMonomial(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first)
            terms_.back().second += t.second;
        else
            terms_.push_back(std::move(t));
        if (terms_.back().second == 0) terms_.pop_back();
    }
    if constexpr (!Laurent) {
        for (const auto& t : terms_)
            if (t.second < 0) throw InputError("negative exponent in a polynomial monomial");
    }
}

template <bool Laurent>
BasicMonomial<Laurent> BasicMonomial<Laurent>::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InputError("empty monomial");
    if (text == "1") return {};
    std::vector<Term> terms;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto piece = trim(text.substr(start, end - start));
        if (piece.empty()) throw InputError("empty factor in monomial: " + std::string(text));
        Exponent e = 1;
        if (auto caret = piece.rfind('^'); caret != std::string_view::npos && piece.find_first_of(")}", caret) == std::string_view::npos) {
            auto es = trim(piece.substr(caret + 1));
            auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
            if (ec != std::errc() || ptr != es.data() + es.size())
                throw InputError("bad exponent in monomial: " + std::string(piece));
            piece = piece.substr(0, caret);
        }
        terms.emplace_back(Variable::parse(piece), e);
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '{') ++depth;
        else if (c == ')' || c == '}') --depth;
        else if (c == '*' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    for (const auto& t : terms)
        if (!Laurent && t.second < 0) throw InputError("negative exponent in a polynomial monomial");
    return BasicMonomial(std::move(terms));
}

template <bool Laurent>
Exponent BasicMonomial<Laurent>::degree() const {
    Exponent d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
}

template <bool Laurent>
Exponent BasicMonomial<Laurent>::exponent(const Variable& v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const Term& t, const Variable& x) { return t.first < x; });
    return it != terms_.end() && it->first == v ? it->second : 0;
}

template <bool Laurent>
Index BasicMonomial<Laurent>::max_index() const {
    Index m = 0;
    for (const auto& t : terms_) m = std::max(m, t.first.max_index());
    return m;
}

template <bool Laurent>
std::vector<Index> BasicMonomial<Laurent>::support_indices() const {
    std::vector<Index> out;
    for (const auto& t : terms_) out.insert(out.end(), t.first.indices().begin(), t.first.indices().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <bool Laurent>
BasicMonomial<Laurent> BasicMonomial<Laurent>::permuted(const Permutation& p) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first.permuted(p), t.second);
    return BasicMonomial(std::move(out));
}

template <bool Laurent>
std::string BasicMonomial<Laurent>::to_string() const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += '*';
        out += t.first.to_string();
        if (t.second != 1) out += '^' + std::to_string(t.second);
    }
    return out;
}

template class BasicMonomial<false>;
template class BasicMonomial<true>;

LaurentMonomial LaurentMonomial::inverse() const { return pow(-1); }

LaurentMonomial LaurentMonomial::pow(Exponent e) const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    for (auto& t : out) t.second *= e;
    return LaurentMonomial(std::move(out));
}

Monomial LaurentMonomial::numerator() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.second > 0) out.push_back(t);
    return Monomial(std::move(out));
}

Monomial LaurentMonomial::denominator() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.second < 0) out.emplace_back(t.first, -t.second);
    return Monomial(std::move(out));
}

bool LaurentMonomial::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

Monomial Monomial::from_laurent(const LaurentMonomial& m) {
    if (!m.is_polynomial()) throw InputError("Laurent monomial has negative exponents: " + m.to_string());
    return Monomial(std::vector<Term>(m.terms().begin(), m.terms().end()));
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    auto b = other.terms();
    for (const auto& t : terms_) {
        while (j < b.size() && b[j].first < t.first) ++j;
        if (j == b.size() || !(b[j].first == t.first) || b[j].second < t.second) return false;
    }
    return true;
}

Monomial Monomial::pow(Exponent e) const {
    if (e < 0) throw InputError("negative power of a polynomial monomial");
    std::vector<Term> out(terms_.begin(), terms_.end());
    for (auto& t : out) t.second *= e;
    return Monomial(std::move(out));
}

LaurentMonomial Monomial::to_laurent() const {
    return LaurentMonomial(std::vector<Term>(terms_.begin(), terms_.end()));
}

namespace {

template <class Pick>
Monomial merge(const Monomial& a, const Monomial& b, Pick pick, bool keep_unpaired) {
    std::vector<Term> out;
    auto x = a.terms();
    auto y = b.terms();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            if (keep_unpaired) out.push_back(x[i]);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            if (keep_unpaired) out.push_back(y[j]);
            ++j;
        } else {
            out.emplace_back(x[i].first, pick(x[i].second, y[j].second));
            ++i;
            ++j;
        }
    }
    return Monomial(std::move(out));
}

}  // namespace

Monomial gcd(const Monomial& a, const Monomial& b) {
    return merge(a, b, [](Exponent p, Exponent q) { return std::min(p, q); }, false);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    return merge(a, b, [](Exponent p, Exponent q) { return std::max(p, q); }, true);
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw InputError(b.to_string() + " does not divide " + a.to_string());
    return Monomial::from_laurent(a.to_laurent() / b.to_laurent());
}

}  // namespace invchain

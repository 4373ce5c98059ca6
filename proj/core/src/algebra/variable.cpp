#include "invchain/algebra/variable.hpp"

#include <algorithm>

#include "invchain/error.hpp"

namespace invchain {

Variable::Variable(VarKind kind, std::vector<Index> indices) : kind_(kind), indices_(std::move(indices)) {
    max_ = indices_.empty() ? 0 : *std::max_element(indices_.begin(), indices_.end());
}

Variable Variable::plain(const IndexTuple& tuple) {
    return Variable(VarKind::Plain, {tuple.entries().begin(), tuple.entries().end()});
}

Variable Variable::extended(const MultiIndex& multiset) {
    return Variable(VarKind::Extended, {multiset.elements().begin(), multiset.elements().end()});
}

Variable Variable::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == 'x') text.remove_prefix(1);
    if (text.empty()) throw InputError("empty variable");
    if (text.front() == '(') return plain(IndexTuple::parse(text));
    if (text.front() == '{') return extended(MultiIndex::parse(text));
    throw InputError("variable must look like (1,2) or {1,1,2}: '" + std::string(text) + "'");
}

IndexTuple Variable::tuple() const {
    if (kind_ != VarKind::Plain) throw InputError("not a plain variable: " + to_string());
    return IndexTuple(indices_);
}

MultiIndex Variable::multiset() const {
    if (kind_ == VarKind::Plain) return MultiIndex(indices_);
    MultiIndex m(indices_);
    return m;
}

Variable Variable::permuted(const Permutation& p) const {
    std::vector<Index> out;
    out.reserve(indices_.size());
    for (auto i : indices_) out.push_back(p(i));
    if (kind_ == VarKind::Extended) std::sort(out.begin(), out.end());
    return Variable(kind_, std::move(out));
}

std::string Variable::to_string() const {
    std::string out(1, kind_ == VarKind::Plain ? '(' : '{');
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_[i]);
    }
    out += kind_ == VarKind::Plain ? ')' : '}';
    return out;
}

std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.max_ <=> b.max_; c != 0) return c;
    return a.indices_ <=> b.indices_;
}

std::size_t VariableHash::operator()(const Variable& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.kind()) * 0x9e3779b97f4a7c15ULL;
    for (auto i : v.indices()) h = (h ^ i) * 0x100000001b3ULL;
    return h;
}

}  // namespace invchain

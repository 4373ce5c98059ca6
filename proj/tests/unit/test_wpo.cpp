#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "invchain/error.hpp"
#include "invchain/wpo/dlex.hpp"

using namespace invchain;

namespace {

// Brute-force enumeration of [M]^k filtered by the definition.
std::vector<Tuple> below_ref(const Tuple& t) {
    Index m = *std::max_element(t.begin(), t.end());
    std::vector<Tuple> out;
    Tuple cur(t.size(), 1);
    while (true) {
        Index mc = *std::max_element(cur.begin(), cur.end());
        if (mc < m || (mc == m && cur < t)) out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == m) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

std::set<Tuple> as_set(const std::vector<Tuple>& v) { return {v.begin(), v.end()}; }

Tuple act(const Permutation& p, const Tuple& t) {
    Tuple out;
    for (auto i : t) out.push_back(i <= p.degree() ? p(i) : i);
    return out;
}

}  // namespace

TEST_CASE("dlex comparisons") {
    CHECK(dlex_compare(Tuple{2, 3}, Tuple{2, 4}) < 0);
    CHECK(dlex_compare(Tuple{2, 3}, Tuple{3, 1}) < 0);
    CHECK(dlex_compare(Tuple{2, 3}, Tuple{2, 3}) == 0);
    CHECK(dlex_compare(Tuple{3, 1}, Tuple{1, 3}) > 0);
    CHECK_THROWS_AS(dlex_compare(Tuple{1, 2}, Tuple{1, 2, 3}), InputError);
}

TEST_CASE("tuples below") {
    auto below31 = as_set(tuples_below({3, 1}));
    CHECK(below31 == std::set<Tuple>{{2, 3}, {1, 3}, {2, 1}, {1, 2}, {1, 1}, {2, 2}});
    auto below23 = as_set(tuples_below({2, 3}));
    for (Tuple t : {Tuple{1, 3}, Tuple{2, 1}, Tuple{2, 2}, Tuple{1, 2}}) CHECK(below23.count(t) == 1);
    CHECK(tuples_below({2, 4}).size() == 10);
    for (Tuple t : {Tuple{2, 3}, Tuple{3, 1}, Tuple{2, 4}, Tuple{4, 4, 1}, Tuple{1, 5, 2}, Tuple{1}}) {
        auto got = tuples_below(t);
        CHECK(as_set(got) == as_set(below_ref(t)));
        CHECK(got.size() == below_ref(t).size());
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const Tuple& a, const Tuple& b) { return dlex_compare(a, b) < 0; }));
    }
}

TEST_CASE("witness examples") {
    auto yes = preceq_witness({2, 3}, {2, 4});
    REQUIRE(yes.found);
    CHECK(is_preceq_witness(*yes.witness, {2, 3}, {2, 4}));
    CHECK(is_preceq_witness(Permutation::parse("(3 4)"), {2, 3}, {2, 4}));
    CHECK(yes.search_bound == 4);

    auto no = preceq_witness({2, 3}, {3, 1});
    CHECK_FALSE(no.found);
    CHECK_FALSE(no.witness.has_value());

    auto refl = preceq_witness({2, 3}, {2, 3});
    REQUIRE(refl.found);
    CHECK(refl.witness->is_identity());

    CHECK_THROWS_AS(preceq_witness({1, 2}, {1, 9}, 8), ResourceError);
    CHECK_FALSE(is_preceq_witness(Permutation::parse("(1 3 2)"), {2, 3}, {3, 1}));
}

TEST_CASE("witness search is exhaustive on small tuples") {
    std::vector<Tuple> all;
    for (Index a = 1; a <= 4; ++a)
        for (Index b = 1; b <= 4; ++b) all.push_back({a, b});
    std::vector<Index> img{1, 2, 3, 4};
    std::vector<Permutation> group;
    do group.push_back(Permutation::from_images(img));
    while (std::next_permutation(img.begin(), img.end()));

    for (const auto& s : all) {
        for (const auto& t : all) {
            auto ts = as_set(tuples_below(t));
            bool expected = false;
            for (const auto& p : group) {
                if (act(p, s) != t) continue;
                bool ok = true;
                for (const auto& v : tuples_below(s)) ok = ok && ts.count(act(p, v));
                if (ok) expected = true;
            }
            auto r = preceq_witness(s, t);
            CHECK(r.found == expected);
            if (r.found) {
                CHECK(is_preceq_witness(*r.witness, s, t));
                CHECK(dlex_compare(s, t) <= 0);
            }
        }
    }
}

TEST_CASE("witnessed relation is transitive") {
    std::vector<Tuple> all;
    for (Index a = 1; a <= 4; ++a)
        for (Index b = 1; b <= 4; ++b) all.push_back({a, b});
    std::map<std::pair<Tuple, Tuple>, WitnessResult> rel;
    for (const auto& s : all)
        for (const auto& t : all) rel[{s, t}] = preceq_witness(s, t);
    int composed = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            const auto& ab = rel[{a, b}];
            if (!ab.found) continue;
            for (const auto& c : all) {
                const auto& bc = rel[{b, c}];
                if (!bc.found) continue;
                auto p = ab.witness->extended(4), q = bc.witness->extended(4);
                CHECK(is_preceq_witness(q * p, a, c));
                CHECK(rel[{a, c}].found);
                ++composed;
            }
        }
    }
    CHECK(composed > 16);
}

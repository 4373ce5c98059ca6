#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/error.hpp"
#include "invchain/lattice/decompose.hpp"
#include "invchain/lattice/normal_form.hpp"

using namespace invchain;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int bound = 6) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows)
        for (auto& x : row) x = rng() % 3 == 0 ? 0 : d(rng);
    return IntMatrix::from_rows(rows);
}

// Leibniz expansion.
Integer det_ref(const IntMatrix& A) {
    std::size_t n = A.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) sign = -sign;
        Integer term = sign;
        for (std::size_t i = 0; i < n; ++i) term *= A(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

bool unimodular(const IntMatrix& U) {
    auto d = determinant(U);
    return d == 1 || d == -1;
}

bool is_hermite(const IntMatrix& H) {
    std::size_t last = 0;
    bool seen = false;
    bool zero_rows = false;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t p = H.cols();
        for (std::size_t j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) {
                p = j;
                break;
            }
        if (p == H.cols()) {
            zero_rows = true;
            continue;
        }
        if (zero_rows) return false;
        if (seen && p <= last) return false;
        if (H(i, p) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
        last = p;
        seen = true;
    }
    return true;
}

using Poly = std::map<Vec, long>;

void add_term(Poly& p, const Vec& e, long c) {
    if ((p[e] += c) == 0) p.erase(e);
}

Vec plus(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

TEST_CASE("determinant against Leibniz") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 5;
        auto A = random_matrix(n, n, rng);
        CHECK(determinant(A) == det_ref(A));
    }
}

TEST_CASE("hermite form") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto A = random_matrix(r, c, rng);
        auto res = hnf(A);
        CHECK(res.U * A == res.D);
        CHECK(unimodular(res.U));
        CHECK(is_hermite(res.D));
        auto W = hnf(random_matrix(r, r, rng)).U;  // some unimodular matrix
        CHECK(hnf(W * A).D == res.D);
    }
}

TEST_CASE("smith form") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto A = random_matrix(r, c, rng);
        auto res = snf(A);
        REQUIRE(res.V.has_value());
        CHECK(res.U * A * *res.V == res.D);
        CHECK(unimodular(res.U));
        CHECK(unimodular(*res.V));
        CHECK(res.D.is_diagonal());
        auto d = res.D.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
        }
    }
    auto D = snf(IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).D;
    CHECK(D.diagonal() == IntVector{2, 6, 12});
}

TEST_CASE("kernel and integer solving") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 2 + rng() % 5;
        auto A = random_matrix(r, c, rng);
        auto K = kernel_basis(A);
        auto rank = hnf(A).rank;
        CHECK(K.size() == c - rank);
        for (const auto& k : K) {
            auto Ak = A * k;
            CHECK(std::all_of(Ak.begin(), Ak.end(), [](const Integer& x) { return x == 0; }));
        }
        if (!K.empty()) {
            // A saturated lattice has all elementary divisors equal to 1.
            auto d = snf(IntMatrix::from_columns(K)).D.diagonal();
            for (std::size_t i = 0; i < K.size(); ++i) CHECK(d[i] == 1);
        }
        std::uniform_int_distribution<int> e(-4, 4);
        IntVector x(c);
        for (auto& v : x) v = e(rng);
        auto b = A * x;
        auto sol = solve_integer(A, b);
        REQUIRE(sol.has_value());
        CHECK(A * *sol == b);
    }
    auto A = IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{2, 4}});
    CHECK_FALSE(solve_integer(A, IntVector{3}).has_value());
    CHECK(solve_integer(A, IntVector{6}).has_value());
}

TEST_CASE("smith form of A_n") {
    for (auto alpha : std::vector<std::vector<std::int64_t>>{{2, 1}, {3, 1}, {3, 2}, {2, 1, 1}}) {
        auto spec = normalize_spec(alpha);
        for (std::size_t n = spec.k() + 1; n <= 5; ++n) {
            auto d = snf(build_matrix_A(spec, n)).D.diagonal();
            IntVector expected(n, 1);
            expected.back() = spec.d();
            CHECK(d == expected);
        }
    }
}

TEST_CASE("span membership agrees with integer solvability") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> e(-9, 9);
    for (auto alpha : std::vector<std::vector<std::int64_t>>{{2, 1}, {3, 2}, {2, 1, 1}}) {
        auto spec = normalize_spec(alpha);
        for (std::size_t n = spec.k() + 1; n <= 5; ++n) {
            auto A = build_matrix_A(spec, n);
            for (int trial = 0; trial < 50; ++trial) {
                Vec beta(n);
                for (auto& b : beta) b = e(rng);
                bool expected = solve_integer(A, to_int_vector(beta)).has_value();
                CHECK(span_membership(beta, spec, n) == expected);
            }
        }
    }
}

TEST_CASE("bezout and placements") {
    for (auto alpha : std::vector<Vec>{{2, 1}, {3, 2}, {6, 10, 15}, {4, 2}}) {
        auto b = bezout(alpha);
        std::int64_t s = 0, g = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            s += b[i] * alpha[i];
            g = std::gcd(g, alpha[i]);
        }
        CHECK(s == g);
    }
    auto spec = normalize_spec({2, 1, 1});
    auto v = place_alpha(spec, IndexTuple({3, 1, 4}), 5);
    CHECK(v == Vec{1, 0, 2, 1, 0});
    CHECK(tuple_of_placement(spec, v) == IndexTuple({3, 1, 4}));
    CHECK(tuple_of_placement(spec, place_alpha(spec, IndexTuple({3, 4, 1}), 5)) == IndexTuple({3, 1, 4}));
}

TEST_CASE("integer decomposition") {
    auto spec = normalize_spec({2, 1});
    auto dec = integer_decompose({1, 1, 1}, spec, 3);
    CHECK(dec.sum(3) == Vec{1, 1, 1});
    for (const auto& t : dec.terms) {
        auto c = t.column;
        std::sort(c.begin(), c.end());
        CHECK(c == Vec{0, 1, 2});
        CHECK(place_alpha(spec, t.label, 3) == t.column);
        CHECK(t.coefficient != 0);
    }
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> e(-6, 6);
    for (auto alpha : std::vector<std::vector<std::int64_t>>{{2, 1}, {3, 2}, {2, 1, 1}, {5, 3}}) {
        auto s = normalize_spec(alpha);
        for (std::size_t n = s.k() + 1; n <= 6; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                Vec beta(n);
                for (auto& b : beta) b = e(rng);
                std::int64_t total = std::accumulate(beta.begin(), beta.end(), std::int64_t{0});
                beta[0] -= ((total % s.d()) + s.d()) % s.d();
                CHECK(integer_decompose(beta, s, n).sum(n) == beta);
            }
            CHECK_THROWS_AS(integer_decompose(Vec(n, 0) = [&] { Vec z(n, 0); z[0] = 1; return z; }(), s, n),
                            MembershipError);
        }
    }
}

TEST_CASE("kernel of A_5 matches the printed basis") {
    auto spec = normalize_spec({2, 1});
    auto A = build_matrix_A(spec, 5);
    std::map<Variable, std::size_t> col;
    for (std::size_t j = 0; j < A.cols(); ++j) col[A.labels()[j]] = j;
    LatticeBasis printed(A.cols()), computed(A.cols());
    for (std::size_t c = 0; c < 15; ++c) {
        IntVector v(A.cols());
        for (std::size_t r = 0; r < 20; ++r) {
            long x = r < 5 ? fixtures::a5_kernel_top[r][c] : (r - 5 == c ? 1 : 0);
            v[col.at(Variable::parse(fixtures::a5_kernel_rows[r]))] = x;
        }
        auto Av = A * v;
        CHECK(std::all_of(Av.begin(), Av.end(), [](const Integer& x) { return x == 0; }));
        printed.add(v);
    }
    for (const auto& k : kernel_basis(A)) computed.add(k);
    CHECK(printed.rank() == 15);
    CHECK(printed == computed);
}

TEST_CASE("lattice basis membership") {
    LatticeBasis L(3);
    L.add(std::vector<std::int64_t>{2, 0, 0});
    L.add(std::vector<std::int64_t>{1, 3, 0});
    CHECK(L.contains(to_int_vector({3, 3, 0})));
    CHECK(L.contains(to_int_vector({0, 6, 0})));
    CHECK_FALSE(L.contains(to_int_vector({0, 3, 0})));
    CHECK_FALSE(L.contains(to_int_vector({0, 0, 1})));
    LatticeBasis M(3);
    M.add(std::vector<std::int64_t>{3, 3, 0});
    M.add(std::vector<std::int64_t>{-2, 0, 0});
    CHECK(L == M);
}

TEST_CASE("telescoping membership") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 4, m = 1 + rng() % 5;
        std::vector<Vec> h(m, Vec(n));
        for (auto& v : h)
            for (auto& x : v) x = e(rng);
        Vec v0(n);
        for (auto& x : v0) x = rng() % 3;
        Vec u = v0;
        for (const auto& x : h) u = plus(u, x);
        auto t = telescope_membership(u, v0, h);
        CHECK(verify_telescope(t, u, v0, h));
        for (auto c : t.clearing) CHECK(c >= 0);
        // Independent expansion of both sides.
        Poly lhs, rhs;
        add_term(lhs, plus(t.clearing, u), 1);
        add_term(lhs, plus(t.clearing, v0), -1);
        for (const auto& s : t.steps) {
            for (auto x : s.multiplier) CHECK(x >= 0);
            Vec hp(n), hm(n);
            for (std::size_t i = 0; i < n; ++i) {
                hp[i] = std::max<std::int64_t>(h[s.h_index][i], 0);
                hm[i] = std::max<std::int64_t>(-h[s.h_index][i], 0);
            }
            add_term(rhs, plus(s.multiplier, hp), 1);
            add_term(rhs, plus(s.multiplier, hm), -1);
        }
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(telescope_membership({1, 0}, {0, 0}, {{0, 1}}), InputError);
}

TEST_CASE("non-normality witness") {
    auto spec = normalize_spec({2, 1});
    for (std::size_t n = 3; n <= 5; ++n) {
        auto w = normality_witness(spec, n);
        Vec z(n, 0);
        std::fill(z.begin(), z.begin() + 3, 1);
        CHECK(w.z == z);
        CHECK(w.in_integer_span);
        CHECK(w.in_cone);
        CHECK_FALSE(w.in_semigroup);
        CHECK(span_membership(z, spec, n));
        // Every column has total 3, so z would have to be a column itself.
        auto A = build_matrix_A(spec, n);
        for (std::size_t j = 0; j < A.cols(); ++j) CHECK(to_int64_vector(A.column(j)) != z);
        Vec cone(n, 0);
        for (const auto& c : w.cone_columns) cone = plus(cone, c);
        for (std::size_t i = 0; i < n; ++i) CHECK(cone[i] == 3 * z[i]);
    }
    CHECK_THROWS_AS(normality_witness(normalize_spec({1, 1}), 3), PreconditionError);
}

#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "invchain/algebra/laurent_polynomial.hpp"
#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/count.hpp"
#include "invchain/chain/express.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/chain/mu.hpp"
#include "invchain/chain/pipeline.hpp"
#include "invchain/error.hpp"
#include "invchain/groebner/toric.hpp"

using namespace invchain;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
    std::vector<Index> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
}

std::size_t falling(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < k; ++i) out *= n - i;
    return out;
}

}  // namespace

TEST_CASE("matrices") {
    auto spec = normalize_spec({2, 1});
    auto A = build_matrix_A(spec, 3);
    CHECK(A.rows() == 3);
    CHECK(A.cols() == 6);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        auto w = A.labels()[j].tuple();
        CHECK(A(w[0] - 1, j) == 2);
        CHECK(A(w[1] - 1, j) == 1);
    }
    auto B = build_matrix_B(spec, 3);
    CHECK(B.cols() == 7);
    for (std::size_t n = 3; n <= 7; ++n) {
        CHECK(build_matrix_A(spec, n).cols() == falling(n, 2));
        CHECK(index_tuples(3, n).size() == falling(n, 3));
    }
    // Multisets of size 3 from [n] with multiplicity <= 2: C(n+2,3) - n.
    for (std::size_t n = 3; n <= 7; ++n)
        CHECK(bounded_multisets(3, 2, n).size() == (n + 2) * (n + 1) * n / 6 - n);
    CHECK(plain_ring(spec, 4).size() == 12);
    CHECK(extended_ring(spec, 4).size() == 16);
}

TEST_CASE("mu commutes with the monomial maps") {
    auto spec = normalize_spec({2, 1});
    const std::size_t n = 6;
    std::size_t checked = 0;
    for (const auto& ms : bounded_multisets(3, 2, n)) {
        auto w = Variable::extended(ms);
        auto mu = construct_mu(w, spec, n);
        for (const auto& [v, e] : mu.terms()) CHECK(v.is_plain());
        CHECK(evaluate_phi(mu, spec, n) == evaluate_phi(Monomial::variable(w), spec, n));
        if (in_eta_image(w, spec)) {
            CHECK(mu.is_polynomial());
            CHECK(mu.degree() == 1);
            CHECK(embed_eta(mu.numerator().terms()[0].first, spec) == w);
        }
        ++checked;
    }
    CHECK(checked == 50);
    CHECK(in_eta_image(Variable::parse("{1,1,2}"), spec));
    CHECK_FALSE(in_eta_image(Variable::parse("{1,2,3}"), spec));
    CHECK_THROWS_AS(construct_mu(Variable::parse("(1,2)"), spec, n), InputError);
    CHECK_THROWS_AS(construct_mu(Variable::parse("{1,2,3}"), spec, 2), PreconditionError);
}

TEST_CASE("mu images stay in the kernel") {
    auto spec = normalize_spec({2, 1});
    std::mt19937 rng(61);
    auto quads = extended_quadrics(spec, 6, TermOrder::degrevlex());
    CHECK(quads.size() == 849);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& q = quads[rng() % quads.size()];
        auto e = substitute_mu(q, spec, 6);
        CHECK(evaluate_phi(e.lead(), spec, 6) == evaluate_phi(e.trail(), spec, 6));
        if (e.lead() != e.trail()) CHECK(in_kernel(e.cleared(), spec, 6));
    }
}

TEST_CASE("eta kernel") {
    CHECK(eta_kernel(normalize_spec({2, 1}), 4).empty());
    auto lin = eta_kernel(normalize_spec({1, 1}), 3);
    CHECK(lin.size() == 3);
    for (const auto& b : lin) CHECK(b.degree() == 1);
    auto x = Binomial::parse("(1,2) - (2,1)");
    CHECK((lin.front() == x || lin.front() == x.negated()));
}

TEST_CASE("chain generators for y1^2 y2") {
    auto spec = normalize_spec({2, 1});
    auto set = chain_generators(spec);
    CHECK(set.bound == 6);
    CHECK(set.stats.extended_quadrics == 849);
    CHECK(set.stats.extended_orbits == 13);
    CHECK(set.stats.after_pruning == set.generators.size());
    CHECK(set.verified.at(6));
    CHECK(set.verified.at(7));
    CHECK(set.all_verified());
    for (const auto& g : set.generators) {
        CHECK(in_kernel(g.binomial, spec, 6));
        CHECK(canonical_orbit_rep(g.binomial).rep == g.binomial);
        CHECK(g.laurent.cleared().without_common_factor().max_index() <= 6);
    }
    // Same Laurent ideal at n = 6 as the printed generating set.
    auto G = fixtures::parse_all(fixtures::g_pm);
    CHECK(verify_generating_set(G, spec, 6));
    auto I = BinomialIdeal{plain_ring(spec, 6), symmetrize(set.binomials(), 6), TermOrder::degrevlex()};
    auto J = BinomialIdeal{plain_ring(spec, 6), symmetrize(G, 6), TermOrder::degrevlex()};
    CHECK(laurent_equal_lattice(I, J));

    ChainOptions unpruned;
    unpruned.prune = false;
    unpruned.verify_at = {6};
    auto full = chain_generators(spec, unpruned);
    CHECK(full.generators.size() == full.stats.plain_orbits);
    CHECK(full.generators.size() >= set.generators.size());
    CHECK(full.verified.at(6));

    ChainOptions threaded;
    threaded.workers = 3;
    auto par = chain_generators(spec, threaded);
    CHECK(par.binomials() == set.binomials());
}

TEST_CASE("chain generators for other monomials") {
    auto sq = chain_generators(normalize_spec({1, 1}));
    CHECK(sq.all_verified());
    std::set<std::string> texts;
    for (const auto& b : sq.binomials()) texts.insert(b.to_string());
    CHECK(texts.count("(1,2) - (2,1)") == 1);
    CHECK(sq.generators.size() == 2);

    auto scaled = chain_generators(normalize_spec({4, 2}));
    CHECK(scaled.binomials() == chain_generators(normalize_spec({2, 1})).binomials());
    CHECK_THROWS_AS(chain_generators(MonomialSpec::raw({4, 2})), PreconditionError);
}

TEST_CASE("printed generating sets") {
    auto spec = normalize_spec({2, 1});
    auto H = fixtures::parse_all(fixtures::h_pm);
    CHECK(verify_generating_set(H, spec, 5, VerifyMethod::Both));
    CHECK(verify_generating_set(H, spec, 6));
    std::vector<Binomial> partial(H.begin(), H.begin() + 1);
    CHECK_FALSE(verify_generating_set(partial, spec, 5, VerifyMethod::Both));
    auto G = fixtures::parse_all(fixtures::g_pm);
    CHECK(verify_generating_set(G, spec, 6, VerifyMethod::Both));
    CHECK_THROWS_AS(verify_generating_set(G, spec, 5), InputError);
    CHECK_FALSE(verify_generating_set({Binomial::parse("(1,2) - (2,1)")}, spec, 3));
    CHECK_FALSE(verify_generating_set({}, spec, 3));
}

TEST_CASE("equivariant expression from a single image") {
    auto spec = normalize_spec({2, 1});
    auto f = Binomial::parse(fixtures::express_target);
    std::vector<Binomial> G{Binomial::parse(fixtures::express_generator)};
    auto e = express_equivariant(f, G, spec, 9);
    CHECK(e.verified);
    CHECK(e.check(G));
    REQUIRE(e.terms.size() == 1);
    auto image = G[0].permuted(e.terms[0].sigma);
    CHECK((image == f || image.negated() == f));
    // The obvious witness works as well.
    EquivariantExpression manual{f, {{1, LaurentMonomial(), Permutation::parse(fixtures::express_sigma, 9), 0}}};
    CHECK(manual.check(G));
    CHECK_THROWS_AS(express_equivariant(Binomial::parse("(1,2) - (2,1)"), G, spec, 3), MembershipError);
    CHECK_THROWS_AS(express_equivariant(f, G, spec, 11), ResourceError);
}

TEST_CASE("equivariant expressions round trip") {
    auto spec = normalize_spec({2, 1});
    auto G = chain_generators(spec).binomials();
    std::mt19937 rng(67);
    for (int trial = 0; trial < 3; ++trial) {
        auto p = random_perm(7, rng), q = random_perm(7, rng);
        auto a = G[0].permuted(p), b = G.back().permuted(q);
        // a2 (a1 - b1) + b1 (a2 - b2) = a1 a2 - b1 b2.
        Binomial f(a.lead() * b.lead(), a.trail() * b.trail());
        auto e = express_equivariant(f, G, spec, 7);
        CHECK(e.verified);
        CHECK(e.check(G));
        LaurentPolynomial sum;
        for (const auto& t : e.terms)
            sum.add_multiple(t.sign, t.coefficient, LaurentElement(G[t.generator].permuted(t.sigma)));
        CHECK(sum == LaurentPolynomial::of(f));
    }
    {
        auto p = random_perm(7, rng), q = random_perm(7, rng), r = random_perm(7, rng);
        auto a = G[0].permuted(p), b = G[0].permuted(q), c = G[0].permuted(r);
        Binomial f(a.lead() * b.lead() * c.lead(), a.trail() * b.trail() * c.trail());
        auto e = express_equivariant(f, G, spec, 7);
        CHECK(e.check(G));
    }
    // Elements of I_6 outside the chain image of the generators are reported.
    std::vector<Binomial> lone{Binomial::parse(fixtures::express_generator)};
    auto listed = fixtures::parse_all(fixtures::i3_listed);
    CHECK_THROWS_AS(express_equivariant(listed[0], lone, spec, 3), MembershipError);
}

TEST_CASE("minimal generator counts") {
    auto spec = normalize_spec({2, 1});
    for (std::size_t n = 3; n <= 4; ++n) {
        auto c = count_minimal_generators(spec, n, GeneratorSide::Plain);
        auto gb = toric_ideal_from_matrix(build_matrix_A(spec, n));
        CHECK(c.total == count_minimal_generators_by_pruning(gb));
        std::size_t sum = 0;
        for (auto [d, k] : c.by_degree) sum += k;
        CHECK(sum == c.total);
    }
    auto sq = normalize_spec({1, 1});
    auto c5 = count_minimal_generators(sq, 5, GeneratorSide::Plain);
    CHECK(c5.total == count_minimal_generators_by_pruning(toric_ideal_from_matrix(build_matrix_A(sq, 5))));
    auto e4 = count_minimal_generators(spec, 4, GeneratorSide::Extended);
    CHECK(e4.total == count_minimal_generators_by_pruning(toric_ideal_from_matrix(build_matrix_B(spec, 4))));
    CHECK(e4.by_degree.rbegin()->first == 2);
}

#include "skewmut/markov.hpp"
#include "skewmut/mutation.hpp"
#include "skewmut/verify.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace skewmut;

TEST_CASE("markov constant evaluations") {
    CHECK(markov_constant(0, 0, 0) == 0);
    CHECK(markov_constant(3, 3, 3) == 0);
    CHECK(markov_constant(1, 0, -1) == 2);
}

TEST_CASE("rank3 params round-trip") {
    const SkewMatrix b = rank3_matrix(Rank3Params{4, -7, 2});
    const Rank3Params v = rank3_params(b);
    CHECK(v.p == 4);
    CHECK(v.q == -7);
    CHECK(v.r == 2);
    CHECK_THROWS_AS(rank3_params(SkewMatrix::zero(4)), std::invalid_argument);
}

TEST_CASE("cyclicity matches a graph-search oracle") {
    CHECK(is_cyclic_3(rank3_matrix(Rank3Params{2, -2, 2})));
    CHECK_FALSE(is_cyclic_3(chain_matrix(3))); // (1, 0, 1)
    CHECK_FALSE(is_cyclic_3(SkewMatrix::zero(3)));

    for (long long p = -2; p <= 2; ++p)
        for (long long q = -2; q <= 2; ++q)
            for (long long r = -2; r <= 2; ++r) {
                const SkewMatrix b = rank3_matrix(Rank3Params{p, q, r});
                CHECK(is_cyclic_3(b) == oracles::quiver_has_cycle(b));
            }
}

TEST_CASE("c invariant branches on cyclicity") {
    CHECK(c_invariant(chain_matrix(3)) == 2);
    CHECK(c_invariant(rank3_matrix(Rank3Params{2, -2, 2})) == 20);
    CHECK(c_invariant(SkewMatrix::zero(3)) == 0);
}

TEST_CASE("identity report hand cases") {
    const MarkovIdentityReport zero = markov_delta_identity(SkewMatrix::zero(3));
    CHECK(zero.det_companion == 8);
    CHECK(zero.delta_value.value == 0);
    CHECK(zero.det_ok);
    CHECK(zero.delta_ok);

    const MarkovIdentityReport a3 = markov_delta_identity(chain_matrix(3));
    CHECK(a3.det_companion == 4);
    CHECK(a3.delta_value.value == 0);
    CHECK(a3.c == 2);
    CHECK(a3.det_ok);
    CHECK(a3.delta_ok);

    const MarkovIdentityReport cyc =
        markov_delta_identity(rank3_matrix(Rank3Params{2, -2, 2}));
    CHECK(cyc.det_companion == -32);
    CHECK(cyc.delta_value.value == 0);
    CHECK(cyc.c == 20);
    CHECK(cyc.det_ok);
    CHECK(cyc.delta_ok);
}

TEST_CASE("identity sweep over a small cube") {
    const auto checks = verify::check_markov(-6, 6);
    REQUIRE(checks.size() == 1);
    INFO(checks[0].detail);
    CHECK(checks[0].pass);
}

TEST_CASE("c invariant is constant along mutation orbits") {
    const SkewMatrix seeds[] = {chain_matrix(3), rank3_matrix(Rank3Params{2, -2, 2}),
                                rank3_matrix(Rank3Params{1, 2, 3}),
                                rank3_matrix(Rank3Params{-1, 4, 0}),
                                rank3_matrix(Rank3Params{3, 3, 3})};
    for (const SkewMatrix& seed : seeds) {
        const Int c0 = c_invariant(seed);
        // all mutation sequences of length <= 5
        std::vector<SkewMatrix> frontier{seed};
        for (int depth = 0; depth < 5; ++depth) {
            std::vector<SkewMatrix> next;
            for (const auto& m : frontier)
                for (std::size_t k = 1; k <= 3; ++k) {
                    SkewMatrix child = mutate(m, k);
                    CHECK(c_invariant(child) == c0);
                    next.push_back(std::move(child));
                }
            frontier = std::move(next);
        }
    }
}

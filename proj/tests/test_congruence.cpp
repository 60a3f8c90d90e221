#include "skewmut/congruence.hpp"
#include "skewmut/delta.hpp"
#include "skewmut/fixtures.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace skewmut;

TEST_CASE("chain matrix layout and delta values") {
    CHECK(chain_matrix(3) == SkewMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(chain_matrix(1) == SkewMatrix::zero(1));
    for (std::size_t n = 3; n <= 21; n += 2) {
        const int expected = (n % 4 == 3) ? 0 : 2;
        CHECK(delta(chain_matrix(n)).value == expected);
    }
}

TEST_CASE("shear matrix layout and determinant") {
    CHECK(shear_matrix(3) == IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(shear_matrix(1), std::invalid_argument);
    for (std::size_t n = 2; n <= 12; ++n) CHECK(det_exact(shear_matrix(n)) == 1);
}

TEST_CASE("shear conjugation adds one hop to the chain") {
    for (std::size_t n = 5; n <= 13; n += 2) {
        const IntMatrix conj = conjugate(shear_matrix(n), chain_matrix(n).mat());
        CHECK(conj == chain_matrix(n).mat() + elementary(n - 1, 1, n) -
                          elementary(1, n - 1, n));
    }
}

TEST_CASE("counterexample pair per size") {
    CHECK_THROWS_AS(counterexample_pair(4), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_pair(1), std::invalid_argument);

    struct Case {
        std::size_t n;
        int d_b, d_conj;
    };
    for (const Case c : {Case{3, 0, 2}, Case{5, 2, 0}, Case{7, 0, 2}, Case{9, 2, 0}}) {
        const CongruenceWitness w = counterexample_pair(c.n);
        CHECK(w.report.delta_b.value == c.d_b);
        CHECK(w.report.delta_conj.value == c.d_conj);
        CHECK(w.report.congruence_ok);
        CHECK(w.report.unimodular_ok);
        CHECK(w.report.rank_b == w.report.rank_conj);
        CHECK(w.report.smith_b == w.report.smith_conj);
        CHECK(verify_witness(w).all_pass());
    }
}

TEST_CASE("counterexample family covers every odd size up to 101") {
    for (std::size_t n = 3; n <= 101; n += 2) {
        const CongruenceWitness w = counterexample_pair(n);
        const int expect_b = (n % 4 == 3) ? 0 : 2;
        CHECK(w.report.delta_b.value == expect_b);
        CHECK(w.report.delta_conj.value == 2 - expect_b);
    }
}

TEST_CASE("random unimodular matrices are unimodular and deterministic") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
        const RngConfig cfg{seed, 50000};
        const IntMatrix m1 = random_unimodular(cfg, 5);
        const IntMatrix m2 = random_unimodular(cfg, 5);
        CHECK(m1 == m2);
        const Int d = det_exact(m1);
        CHECK((d == 1 || d == -1));
        CHECK(m1.max_abs_entry() <= 50000);
    }
    CHECK_THROWS_AS(random_unimodular(RngConfig{0, 0}, 3), std::invalid_argument);
}

TEST_CASE("random unimodular matrices vary across seeds") {
    std::set<std::vector<Int>> distinct;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        distinct.insert(random_unimodular(RngConfig{seed, 50000}, 5).entries());
    CHECK(distinct.size() >= 2);
}

TEST_CASE("random skew construction round-trips through upper_part") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RngConfig cfg{seed, 1000};
        const SkewMatrix b = random_skew(cfg, 6);
        const IntMatrix n = random_unimodular(cfg, 6);
        IntMatrix v = IntMatrix::identity(6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) v(i, j) = n(i, j);
        CHECK(upper_part(b) == v);
    }
}

TEST_CASE("random skew delta stays in the odd-size classes") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = (seed % 2 == 0) ? 5 : 7;
        const int d = delta(random_skew(RngConfig{seed, 200}, n)).value;
        CHECK((d == 0 || d == 2));
    }
}

TEST_CASE("search accepts a forced first trial") {
    const auto w = search_delta_discrepancy(RngConfig{0, 50000}, 3, 1,
                                            std::pair{chain_matrix(3), shear_matrix(3)});
    REQUIRE(w.has_value());
    CHECK(w->report.trial_index == 0);
    CHECK(conjugate(w->x, w->b.mat()) == w->b_conj.mat());
    CHECK(std::abs(w->report.delta_b.value - w->report.delta_conj.value) == 2);
    CHECK(verify_witness(*w).all_pass());
}

TEST_CASE("search finds a discrepant witness at n = 5") {
    const RngConfig cfg{kDefaultSearchSeed, 50000};
    const auto w = search_delta_discrepancy(cfg, 5, 1000);
    REQUIRE(w.has_value());
    CHECK(conjugate(w->x, w->b.mat()) == w->b_conj.mat());
    CHECK(std::abs(w->report.delta_b.value - w->report.delta_conj.value) == 2);
    CHECK(verify_witness(*w).all_pass());

    // deterministic replay
    const auto w2 = search_delta_discrepancy(cfg, 5, 1000);
    REQUIRE(w2.has_value());
    CHECK(w2->report.trial_index == w->report.trial_index);
    CHECK(w2->b == w->b);
    CHECK(w2->x == w->x);
}

TEST_CASE("verify_witness flags corruption") {
    CongruenceWitness w = counterexample_pair(5);
    CHECK(verify_witness(w).all_pass());

    CongruenceWitness bad = w;
    bad.b_conj = mutate(bad.b_conj, 1);
    const WitnessVerification v = verify_witness(bad);
    CHECK_FALSE(v.all_pass());
    bool congruence_failed = false;
    for (const auto& c : v.checks)
        if (c.name == "congruence" && !c.pass) congruence_failed = true;
    CHECK(congruence_failed);
}

TEST_CASE("make_witness rejects non-unimodular conjugators") {
    CHECK_THROWS_AS(make_witness(chain_matrix(3), Int(2) * IntMatrix::identity(3)),
                    std::domain_error);
}

#include "skewmut/congruence.hpp"
#include "skewmut/determinant.hpp"
#include "skewmut/fixtures.hpp"
#include "skewmut/smith.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace skewmut;

TEST_CASE("IntMatrix construction validates shape") {
    CHECK_THROWS_AS(IntMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix(2, 2, std::vector<Int>{1, 2, 3}), std::invalid_argument);
    const IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m(0, 1) == 2);
    CHECK(m.transposed()(1, 0) == 2);
}

TEST_CASE("elementary places a single one") {
    const IntMatrix e = elementary(1, 2, 2);
    CHECK(e == IntMatrix{{0, 1}, {0, 0}});
    CHECK_THROWS_AS(elementary(3, 1, 2), std::invalid_argument);

    const IntMatrix s = elementary(1, 2, 2) + elementary(2, 1, 2);
    CHECK(s.is_symmetric());
    CHECK(s.has_zero_diagonal());
}

TEST_CASE("sum of elementary matrices reproduces the chain matrix") {
    for (std::size_t n : {2u, 3u, 5u, 8u}) {
        IntMatrix acc(n, n);
        for (std::size_t i = 1; i <= n - 1; ++i)
            acc = acc + elementary(i, i + 1, n) - elementary(i + 1, i, n);
        CHECK(acc == chain_matrix(n).mat());
    }
}

TEST_CASE("conjugate basics") {
    Xoshiro256ss rng(7);
    const SkewMatrix b = oracles::random_skew(rng, 4, 9);
    CHECK(conjugate(IntMatrix::identity(4), b.mat()) == b.mat());
    CHECK_THROWS_AS(conjugate(IntMatrix::identity(3), b.mat()), std::invalid_argument);

    const PermutationMatrix p = PermutationMatrix::from_one_line({2, 3, 1, 4});
    CHECK(conjugate(p.to_matrix(), b.mat()) == permute(b, p).mat());
}

TEST_CASE("det_exact matches the hand cases") {
    CHECK(det_exact(IntMatrix::identity(3)) == 1);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
    const IntMatrix x = fixtures::load_matrix(SKEWMUT_FIXTURE_DIR, "pair5_x.txt");
    CHECK(det_exact(x) == 1);
}

TEST_CASE("det_exact agrees with the cofactor oracle") {
    Xoshiro256ss rng(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        const IntMatrix m = oracles::random_matrix(rng, n, n, 9);
        CHECK(det_exact(m) == oracles::det_cofactor(m));
    }
}

TEST_CASE("det_exact under congruence and skew parity") {
    Xoshiro256ss rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(4));
        const IntMatrix x = oracles::random_matrix(rng, n, n, 5);
        const IntMatrix b = oracles::random_matrix(rng, n, n, 5);
        const Int dx = det_exact(x);
        CHECK(det_exact(conjugate(x, b)) == dx * dx * det_exact(b));
    }
    for (std::size_t n : {1u, 3u, 5u, 7u}) {
        const SkewMatrix b = oracles::random_skew(rng, n, 20);
        CHECK(det_exact(b.mat()) == 0);
    }
}

TEST_CASE("smith_report on the bundled 5x5 pair") {
    const IntMatrix b = fixtures::load_matrix(SKEWMUT_FIXTURE_DIR, "pair5_b.txt");
    const SmithReport r = smith_report(b);
    CHECK(r.invariant_factors == std::vector<Int>{1, 1, 1, 1, 0});
    CHECK(r.rank == 4);
    for (const auto& g : r.column_gcds) CHECK(g == 1);
}

TEST_CASE("smith_report trivial cases") {
    const SmithReport id = smith_report(IntMatrix::identity(4));
    CHECK(id.invariant_factors == std::vector<Int>{1, 1, 1, 1});
    CHECK(id.rank == 4);

    const SmithReport z = smith_report(IntMatrix(3, 3));
    CHECK(z.invariant_factors == std::vector<Int>{0, 0, 0});
    CHECK(z.rank == 0);
    CHECK(z.column_gcds == std::vector<Int>{0, 0, 0});
}

TEST_CASE("smith_report properties on random input") {
    Xoshiro256ss rng(17);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        const IntMatrix m = oracles::random_matrix(rng, n, n, 8);
        const SmithReport r = smith_report(m);

        // divisibility chain, zeros trailing
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
            const Int &a = r.invariant_factors[i], &b = r.invariant_factors[i + 1];
            if (a == 0) CHECK(b == 0);
            if (a != 0 && b != 0) CHECK(b % a == 0);
            CHECK(a >= 0);
        }
        // |det| equals the product of the factors for square input
        Int prod = 1;
        for (const auto& f : r.invariant_factors) prod *= f;
        CHECK(prod == abs_int(det_exact(m)));

        // invariance under unimodular congruence
        const IntMatrix x = random_unimodular(RngConfig{static_cast<std::uint64_t>(t), 30}, n);
        const SmithReport rc = smith_report(conjugate(x, m));
        CHECK(rc.invariant_factors == r.invariant_factors);
        CHECK(rc.rank == r.rank);
    }
}

TEST_CASE("floor_mod canonicalizes negatives") {
    CHECK(floor_mod(Int(-9), 4) == 3);
    CHECK(floor_mod(Int(-8), 4) == 0);
    CHECK(floor_mod(Int(7), 4) == 3);
}

#include "skewmut/arf.hpp"
#include "skewmut/delta.hpp"
#include "skewmut/fixtures.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace skewmut;

TEST_CASE("mod-2 rank") {
    CHECK(rank_mod2(fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt")) == 4);
    CHECK(rank_mod2(fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_bp.txt")) == 4);
    CHECK(rank_mod2(SkewMatrix::zero(4)) == 0);
    CHECK(rank_mod2(SkewMatrix{{0, 1}, {-1, 0}}) == 2);
    CHECK(rank_mod2(SkewMatrix{{0, 2}, {-2, 0}}) == 0); // even entries vanish mod 2

    Xoshiro256ss rng(109);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(8));
        CHECK(rank_mod2(oracles::random_skew(rng, n, 9)) % 2 == 0);
    }
}

TEST_CASE("symplectic basis of the nondegenerate 2x2 form") {
    const SymplecticBasis sb = symplectic_basis(SkewMatrix{{0, 1}, {-1, 0}});
    REQUIRE(sb.pairs.size() == 1);
    CHECK(sb.radical.empty());
    CHECK(sb.pairs[0].first == BitVec::unit(2, 0));
    CHECK(sb.pairs[0].second == BitVec::unit(2, 1));
}

TEST_CASE("symplectic extraction satisfies the pairing identities") {
    const SkewMatrix b = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt");
    const SymplecticBasis sb = symplectic_basis(b);
    CHECK(sb.pairs.size() == 2);
    CHECK(sb.radical.size() == 1);
    CHECK(check_symplectic(b, sb));

    Xoshiro256ss rng(113);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(7));
        const SkewMatrix m = oracles::random_skew(rng, n, 3);
        const SymplecticBasis s = symplectic_basis(m);
        CHECK(check_symplectic(m, s));
        CHECK(2 * s.pairs.size() == rank_mod2(m));
        CHECK(2 * s.pairs.size() + s.radical.size() == n);
    }
}

TEST_CASE("the bundled explicit bases are valid") {
    const SkewMatrix b = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt");
    const auto eb = fixtures::load_basis(SKEWMUT_FIXTURE_DIR, "arf_b_basis.json", 5);
    CHECK(check_symplectic(b, eb.symplectic));

    const SkewMatrix bp = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_bp.txt");
    const auto ebp = fixtures::load_basis(SKEWMUT_FIXTURE_DIR, "arf_bp_basis.json", 5);
    CHECK(check_symplectic(bp, ebp.symplectic));
}

TEST_CASE("q values follow the refinement rule") {
    const SkewMatrix b = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt");
    const QuadraticRefinement q = deterministic_refinement(b);
    REQUIRE(q.basis.size() == 4);

    for (const auto& v : q.basis) CHECK(q_value(q, b, v) == 1);
    CHECK(q_value(q, b, BitVec(5)) == 0);

    const BitMatrix form = BitMatrix::from_skew(b);
    const BitVec sum = q.basis[0] ^ q.basis[1];
    CHECK(q_value(q, b, sum) == (1 ^ 1 ^ form.pairing(q.basis[0], q.basis[1])));

    // the fifth unit vector is outside N = span(u1..u4) for this matrix
    CHECK_THROWS_AS(q_value(q, b, BitVec::unit(5, 4)), std::domain_error);
}

TEST_CASE("q values are independent of basis order") {
    Xoshiro256ss rng(127);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(5));
        const SkewMatrix b = oracles::random_skew(rng, n, 5);
        QuadraticRefinement q = deterministic_refinement(b);
        if (q.basis.empty()) continue;
        QuadraticRefinement shuffled = q;
        std::reverse(shuffled.basis.begin(), shuffled.basis.end());

        // every vector of N, enumerated through coefficient masks
        const std::size_t r = q.basis.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
            BitVec v(n);
            for (std::size_t i = 0; i < r; ++i)
                if (mask & (std::size_t{1} << i)) v ^= q.basis[i];
            CHECK(q_value(q, b, v) == q_value(shuffled, b, v));
        }
    }
}

TEST_CASE("arf invariant of the bundled pair differs from delta") {
    const SkewMatrix b = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt");
    const SkewMatrix bp = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_bp.txt");

    CHECK(delta(b).value == 2);
    CHECK(delta(bp).value == 0);
    CHECK(arf_invariant(b) == 1);
    CHECK(arf_invariant(bp) == 1);
}

TEST_CASE("arf invariant small cases") {
    CHECK(arf_invariant(SkewMatrix::zero(3)) == 0);
    CHECK(arf_invariant(SkewMatrix{{0, 1}, {-1, 0}}) == 1);
}

TEST_CASE("arf against the explicit bases reproduces the bundled values") {
    const SkewMatrix b = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_b.txt");
    const auto eb = fixtures::load_basis(SKEWMUT_FIXTURE_DIR, "arf_b_basis.json", 5);
    CHECK(arf_with_basis(b, eb.symplectic, eb.refinement) == 1);

    const SkewMatrix bp = fixtures::load_skew(SKEWMUT_FIXTURE_DIR, "arf_bp.txt");
    const auto ebp = fixtures::load_basis(SKEWMUT_FIXTURE_DIR, "arf_bp_basis.json", 5);
    CHECK(arf_with_basis(bp, ebp.symplectic, ebp.refinement) == 1);

    // swapping the bases across matrices must be rejected
    CHECK_THROWS_AS(arf_with_basis(b, ebp.symplectic, ebp.refinement), std::domain_error);
}

#pragma once

#include "skewmut/congruence.hpp"
#include "skewmut/fixtures.hpp"
#include "skewmut/lemmas.hpp"
#include "skewmut/markov.hpp"
#include "skewmut/orbit.hpp"

#include <functional>

namespace skewmut::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Checks = std::vector<Check>;

inline bool all_pass(const Checks& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {

inline void run_leg(Checks& out, const std::string& name,
                    const std::function<void(Check&)>& body) {
    Check c{name, true, ""};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    out.push_back(std::move(c));
}

inline SkewMatrix random_skew_small(Xoshiro256ss& rng, std::size_t n, long long bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long long v = rng.range(-bound, bound);
            m(i, j) = v;
            m(j, i) = -v;
        }
    return SkewMatrix(std::move(m));
}

inline IntMatrix random_symmetric(Xoshiro256ss& rng, std::size_t n, long long bound,
                                  bool zero_diagonal) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!zero_diagonal) m(i, i) = rng.range(-bound, bound);
        for (std::size_t j = i + 1; j < n; ++j) {
            const long long v = rng.range(-bound, bound);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

/// Odometer over k slots with values in [-bound, bound]; fn receives the
/// current slot values. Returns the number of combinations visited.
template <typename Fn>
std::size_t for_each_tuple(std::size_t slots, long long bound, Fn&& fn) {
    std::vector<long long> v(slots, -bound);
    std::size_t count = 0;
    for (;;) {
        fn(v);
        ++count;
        std::size_t i = 0;
        while (i < slots && v[i] == bound) v[i++] = -bound;
        if (i == slots) break;
        ++v[i];
    }
    return count;
}

inline void fill_skew3(IntMatrix& m, const std::vector<long long>& v) {
    m(0, 1) = v[0];
    m(1, 0) = -v[0];
    m(0, 2) = v[1];
    m(2, 0) = -v[1];
    m(1, 2) = v[2];
    m(2, 1) = -v[2];
}

inline void fill_sym3(IntMatrix& m, const std::vector<long long>& v) {
    m(0, 0) = v[0];
    m(1, 1) = v[1];
    m(2, 2) = v[2];
    m(0, 1) = m(1, 0) = v[3];
    m(0, 2) = m(2, 0) = v[4];
    m(1, 2) = m(2, 1) = v[5];
}

inline void fill_zero_diag_sym3(IntMatrix& m, const std::vector<long long>& v) {
    m(0, 1) = m(1, 0) = v[0];
    m(0, 2) = m(2, 0) = v[1];
    m(1, 2) = m(2, 1) = v[2];
}

} // namespace detail

/// The 5x5 congruent pair: fixture digests, delta values 0 and 2, exact
/// congruence, unimodular conjugator, identical classical baselines.
inline Checks check_pair5(const std::string& dir) {
    Checks out;
    for (const char* f : {"pair5_b.txt", "pair5_bp.txt", "pair5_x.txt"})
        detail::run_leg(out, std::string("pair5/digest/") + f,
                        [&](Check& c) { c.pass = fixtures::digest_ok(dir, f); });

    try {
        const SkewMatrix b = fixtures::load_skew(dir, "pair5_b.txt");
        const SkewMatrix bp = fixtures::load_skew(dir, "pair5_bp.txt");
        const IntMatrix x = fixtures::load_matrix(dir, "pair5_x.txt");

        detail::run_leg(out, "pair5/delta-pair", [&](Check& c) {
            const int d1 = delta(b).value, d2 = delta(bp).value;
            c.pass = (d1 == 0 && d2 == 2);
            c.detail = "delta = " + std::to_string(d1) + ", " + std::to_string(d2);
        });
        detail::run_leg(out, "pair5/congruence", [&](Check& c) {
            c.pass = (conjugate(x, b.mat()) == bp.mat());
        });
        detail::run_leg(out, "pair5/det-x",
                        [&](Check& c) { c.pass = (det_exact(x) == 1); });
        detail::run_leg(out, "pair5/baselines", [&](Check& c) {
            const SmithReport sb = smith_report(b.mat());
            const SmithReport sp = smith_report(bp.mat());
            const std::vector<Int> expect{1, 1, 1, 1, 0};
            c.pass = sb.invariant_factors == expect && sp.invariant_factors == expect &&
                     sb.rank == 4 && sp.rank == 4;
            for (const auto& g : sb.column_gcds) c.pass = c.pass && g == 1;
            for (const auto& g : sp.column_gcds) c.pass = c.pass && g == 1;
            c.pass = c.pass && det_exact(b.mat()) == 0 && det_exact(bp.mat()) == 0;
        });
    } catch (const std::exception& e) {
        out.push_back({"pair5/load", false, e.what()});
    }
    return out;
}

/// The (A_n, X_n A_n X_n^t) family for odd n: delta case table and the
/// closed form of the conjugate for n >= 5.
inline Checks check_family(std::size_t max_n) {
    Checks out;
    for (std::size_t n = 3; n <= max_n; n += 2) {
        detail::run_leg(out, "family/n=" + std::to_string(n), [&](Check& c) {
            const SkewMatrix a = chain_matrix(n);
            const IntMatrix x = shear_matrix(n);
            const SkewMatrix conj(conjugate(x, a.mat()));
            const int expect_a = (n % 4 == 3) ? 0 : 2;
            const int expect_c = (n % 4 == 3) ? 2 : 0;
            c.pass = delta(a).value == expect_a && delta(conj).value == expect_c;
            c.detail = "delta = " + std::to_string(delta(a).value) + ", " +
                       std::to_string(delta(conj).value);
            if (n >= 5) {
                const IntMatrix expected =
                    a.mat() + elementary(n - 1, 1, n) - elementary(1, n - 1, n);
                c.pass = c.pass && conj.mat() == expected;
            }
        });
    }
    return out;
}

/// Rank-3 identity sweep: det(S(B)) closed form and delta = 2 C(B) mod 4
/// over the full cube [lo, hi]^3.
inline Checks check_markov(long long lo, long long hi) {
    Checks out;
    detail::run_leg(out, "markov/identity-sweep", [&](Check& c) {
        std::size_t cases = 0, failures = 0;
        IntMatrix m(3, 3);
        for (long long p = lo; p <= hi; ++p)
            for (long long q = lo; q <= hi; ++q)
                for (long long r = lo; r <= hi; ++r) {
                    m(0, 1) = p;
                    m(1, 0) = -p;
                    m(0, 2) = q;
                    m(2, 0) = -q;
                    m(1, 2) = r;
                    m(2, 1) = -r;
                    const MarkovIdentityReport rep = markov_delta_identity(SkewMatrix(m));
                    ++cases;
                    if (!rep.det_ok || !rep.delta_ok) ++failures;
                }
        c.pass = failures == 0;
        c.detail = std::to_string(cases) + " cases, " + std::to_string(failures) +
                   " failures";
    });
    return out;
}

/// The Arf pair: mod-2 ranks, delta values, the deterministic Arf
/// computation and the bundled explicit bases.
inline Checks check_arf(const std::string& dir) {
    Checks out;
    for (const char* f : {"arf_b.txt", "arf_bp.txt", "arf_b_basis.json", "arf_bp_basis.json"})
        detail::run_leg(out, std::string("arf/digest/") + f,
                        [&](Check& c) { c.pass = fixtures::digest_ok(dir, f); });

    try {
        const SkewMatrix b = fixtures::load_skew(dir, "arf_b.txt");
        const SkewMatrix bp = fixtures::load_skew(dir, "arf_bp.txt");

        detail::run_leg(out, "arf/rank-mod2", [&](Check& c) {
            c.pass = rank_mod2(b) == 4 && rank_mod2(bp) == 4;
        });
        detail::run_leg(out, "arf/delta-pair", [&](Check& c) {
            c.pass = delta(b).value == 2 && delta(bp).value == 0;
            c.detail = "delta = " + std::to_string(delta(b).value) + ", " +
                       std::to_string(delta(bp).value);
        });
        detail::run_leg(out, "arf/deterministic", [&](Check& c) {
            c.pass = arf_invariant(b) == 1 && arf_invariant(bp) == 1;
        });
        detail::run_leg(out, "arf/explicit-basis", [&](Check& c) {
            const auto eb = fixtures::load_basis(dir, "arf_b_basis.json", b.size());
            const auto ebp = fixtures::load_basis(dir, "arf_bp_basis.json", bp.size());
            c.pass = check_symplectic(b, eb.symplectic) &&
                     check_symplectic(bp, ebp.symplectic) &&
                     arf_with_basis(b, eb.symplectic, eb.refinement) == 1 &&
                     arf_with_basis(bp, ebp.symplectic, ebp.refinement) == 1;
        });
    } catch (const std::exception& e) {
        out.push_back({"arf/load", false, e.what()});
    }
    return out;
}

/// The 9x9 and 13x13 congruent pairs: full witness verification plus the
/// frozen delta values.
inline Checks check_appendix(const std::string& dir) {
    Checks out;
    for (const char* f : {"app9_b.txt", "app9_x.txt", "app13_b.txt", "app13_x.txt"})
        detail::run_leg(out, std::string("appendix/digest/") + f,
                        [&](Check& c) { c.pass = fixtures::digest_ok(dir, f); });

    struct Pair {
        const char* label;
        const char* bfile;
        const char* xfile;
        int expect_b, expect_conj;
    };
    const Pair pairs[] = {{"n9", "app9_b.txt", "app9_x.txt", 0, 2},
                          {"n13", "app13_b.txt", "app13_x.txt", 2, 0}};
    for (const auto& p : pairs) {
        detail::run_leg(out, std::string("appendix/") + p.label, [&](Check& c) {
            const SkewMatrix b = fixtures::load_skew(dir, p.bfile);
            const IntMatrix x = fixtures::load_matrix(dir, p.xfile);
            const CongruenceWitness w = make_witness(b, x);
            c.pass = verify_witness(w).all_pass() &&
                     w.report.delta_b.value == p.expect_b &&
                     w.report.delta_conj.value == p.expect_conj;
            c.detail = "delta = " + std::to_string(w.report.delta_b.value) + ", " +
                       std::to_string(w.report.delta_conj.value);
        });
    }
    return out;
}

/// Full oracle battery: every identity exhaustively on 3x3 inputs with
/// entries in [-exhaustive_bound, exhaustive_bound] and on seeded random
/// instances up to size 8.
inline Checks check_lemmas(std::uint64_t seed, std::size_t random_trials,
                           long long exhaustive_bound) {
    Checks out;
    const long long eb = exhaustive_bound;

    detail::run_leg(out, "lemmas/lemma1-exhaustive", [&](Check& c) {
        IntMatrix z(3, 3), s(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(3, eb, [&](const std::vector<long long>& zv) {
            detail::fill_skew3(z, zv);
            const SkewMatrix sk(z);
            const IntMatrix v0 = upper_part(sk);
            detail::for_each_tuple(6, eb, [&](const std::vector<long long>& sv) {
                detail::fill_sym3(s, sv);
                ++cases;
                if (!lemma1_check(sk, v0 + s, v0))
                    throw std::logic_error("lemma1 false for a valid decomposition");
            });
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/lemma1-mutation-route", [&](Check& c) {
        IntMatrix z(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(3, eb, [&](const std::vector<long long>& zv) {
            detail::fill_skew3(z, zv);
            const SkewMatrix sk(z);
            for (std::size_t k = 1; k <= 3; ++k) {
                const IntMatrix mk = replicating_matrix(sk, k).mat;
                const SkewMatrix mu = mutate(sk, k);
                ++cases;
                if (!lemma1_check(mu, mk * upper_part(sk) * mk.transposed(), upper_part(mu)))
                    throw std::logic_error("lemma1 false on the mutation route");
            }
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/lemma1-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 11));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const SkewMatrix z = detail::random_skew_small(rng, n, 10);
            const IntMatrix v = upper_part(z) + detail::random_symmetric(rng, n, 10, false);
            const IntMatrix w = upper_part(z) + detail::random_symmetric(rng, n, 10, false);
            if (!lemma1_check(z, v, w))
                throw std::logic_error("lemma1 false on random decomposition");
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    detail::run_leg(out, "lemmas/lemma3-exhaustive", [&](Check& c) {
        IntMatrix z(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(3, eb, [&](const std::vector<long long>& zv) {
            detail::fill_skew3(z, zv);
            const SkewMatrix sk(z);
            for (std::size_t k = 1; k <= 3; ++k) {
                lemma3_profile(sk, k); // raises if the closed form disagrees
                ++cases;
            }
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/lemma3-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 13));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const SkewMatrix b = detail::random_skew_small(rng, n, 10);
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(n));
            const DiagonalProfile p = lemma3_profile(b, k);
            if (p.t[k - 1] != 0) throw std::logic_error("lemma3: t_kk != 0");
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    detail::run_leg(out, "lemmas/trace-exhaustive", [&](Check& c) {
        IntMatrix x(3, 3), y(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(6, eb, [&](const std::vector<long long>& xv) {
            detail::fill_sym3(x, xv);
            detail::for_each_tuple(3, eb, [&](const std::vector<long long>& yv) {
                detail::fill_zero_diag_sym3(y, yv);
                ++cases;
                if (lemma2_trace_parity(x, y) != 0)
                    throw std::logic_error("lemma2.(1): odd trace");
            });
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/trace-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 17));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const IntMatrix x = detail::random_symmetric(rng, n, 20, false);
            const IntMatrix y = detail::random_symmetric(rng, n, 20, true);
            if (lemma2_trace_parity(x, y) != 0)
                throw std::logic_error("lemma2.(1): odd trace");
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    detail::run_leg(out, "lemmas/detshift-exhaustive", [&](Check& c) {
        IntMatrix r(3, 3), y(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(6, eb, [&](const std::vector<long long>& rv) {
            detail::fill_sym3(r, rv);
            detail::for_each_tuple(3, eb, [&](const std::vector<long long>& yv) {
                detail::fill_zero_diag_sym3(y, yv);
                ++cases;
                const auto [d1, d2] = lemma2_det_shift(r, y);
                if (d1 != d2) throw std::logic_error("lemma2.(2): residues differ");
            });
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/detshift-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 19));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const IntMatrix r = detail::random_symmetric(rng, n, 20, false);
            const IntMatrix y = detail::random_symmetric(rng, n, 20, true);
            const auto [d1, d2] = lemma2_det_shift(r, y);
            if (d1 != d2) throw std::logic_error("lemma2.(2): residues differ");
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    detail::run_leg(out, "lemmas/detshift-elementary", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 23));
        std::size_t cases = 0;
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const IntMatrix r = detail::random_symmetric(rng, n, 20, false);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) {
                    const IntMatrix y = elementary(i, j, n) + elementary(j, i, n);
                    const auto [d1, d2] = lemma2_det_shift(r, y);
                    ++cases;
                    if (d1 != d2)
                        throw std::logic_error("lemma2 remark: residues differ");
                }
        }
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/permdiff-exhaustive", [&](Check& c) {
        IntMatrix z(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(3, eb, [&](const std::vector<long long>& zv) {
            detail::fill_skew3(z, zv);
            const SkewMatrix sk(z);
            for (std::size_t k = 1; k <= 2; ++k) {
                perm_companion_diff(sk, k); // raises on closed-form mismatch
                ++cases;
            }
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/permdiff-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 29));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const SkewMatrix b = detail::random_skew_small(rng, n, 10);
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(n - 1));
            perm_companion_diff(b, k);
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    detail::run_leg(out, "lemmas/mutdiff-exhaustive", [&](Check& c) {
        IntMatrix z(3, 3);
        std::size_t cases = 0;
        detail::for_each_tuple(3, eb, [&](const std::vector<long long>& zv) {
            detail::fill_skew3(z, zv);
            const SkewMatrix sk(z);
            for (std::size_t k = 1; k <= 3; ++k) {
                mutation_companion_diff(sk, k); // raises if any claim fails
                ++cases;
            }
        });
        c.detail = std::to_string(cases) + " cases";
    });

    detail::run_leg(out, "lemmas/mutdiff-random", [&](Check& c) {
        Xoshiro256ss rng(derive_stream(seed, 31));
        for (std::size_t t = 0; t < random_trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.below(7));
            const SkewMatrix b = detail::random_skew_small(rng, n, 10);
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(n));
            mutation_companion_diff(b, k);
        }
        c.detail = std::to_string(random_trials) + " trials";
    });

    return out;
}

inline const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names{"pair5",    "family", "markov",
                                                "arf",      "appendix", "lemmas"};
    return names;
}

inline Checks run_group(const std::string& group, const std::string& fixture_dir,
                        std::uint64_t seed, std::size_t lemma_trials = 500) {
    if (group == "pair5") return check_pair5(fixture_dir);
    if (group == "family") return check_family(13);
    if (group == "markov") return check_markov(-20, 20);
    if (group == "arf") return check_arf(fixture_dir);
    if (group == "appendix") return check_appendix(fixture_dir);
    if (group == "lemmas") return check_lemmas(seed, lemma_trials, 2);
    throw std::invalid_argument("unknown check group: " + group);
}

} // namespace skewmut::verify

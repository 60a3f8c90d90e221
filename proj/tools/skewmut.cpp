// Command-line surface for the skewmut library. Every subcommand is a
// thin wrapper: parsing, dispatch and rendering only.
//
// Exit codes: 0 success, 1 check failure, 2 input/parse error, 3 domain
// violation (e.g. a non-skew matrix where one is required).

#include "skewmut/skewmut.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace skewmut;

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    return out.str();
}

std::string report_block(const InvariantReport& r, bool machine) {
    std::ostringstream out;
    const char sep = machine ? ' ' : '\n';
    out << "delta=" << r.delta_value.value << " n=" << r.n
        << " parity=" << to_string(r.parity) << sep;
    out << "det=" << r.det << sep;
    out << "rank=" << r.rank << sep;
    out << "smith=" << join_ints(r.smith_factors) << sep;
    out << "gcds=" << join_ints(r.column_gcds) << '\n';
    return out.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

std::string one_line(const PermutationMatrix& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ',';
        out << p.image(i) + 1;
    }
    return out.str();
}

std::string bit_string(const BitVec& v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) s[i] = '1';
    return s;
}

int render_checks(const verify::Checks& checks) {
    std::size_t passed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << '\n';
        if (c.pass) ++passed;
    }
    std::cout << "passed " << passed << "/" << checks.size() << '\n';
    return verify::all_pass(checks) ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact mutation invariants for skew-symmetric integer matrices"};
    app.require_subcommand(1);

    std::string file, file2, out_path, sequence, format = "text", basis_path;
    std::string fixtures_dir = "fixtures", only, kind = "unimodular";
    std::uint64_t seed = kDefaultSearchSeed;
    long long bound = 50000;
    std::size_t n = 5, trials = 1000, depth = 4, max_nodes = 5000;
    long long max_entry = 1000000000;
    unsigned workers = 1;
    long long pqr[3] = {0, 0, 0};
    std::size_t lemma_trials = 500;
    long long lemma_bound = 2;

    auto* cmd_delta = app.add_subcommand("delta", "invariant report for a matrix file");
    cmd_delta->add_option("file", file)->required();
    cmd_delta->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

    auto* cmd_mutate = app.add_subcommand("mutate", "apply a mutation sequence");
    cmd_mutate->add_option("file", file)->required();
    cmd_mutate->add_option("sequence", sequence,
                           "comma-separated 1-based directions, e.g. 3,1,4");
    cmd_mutate->add_option("--out", out_path);

    auto* cmd_orbit = app.add_subcommand("orbit", "bounded mutation-class exploration");
    cmd_orbit->add_option("file", file)->required();
    cmd_orbit->add_option("--depth", depth);
    cmd_orbit->add_option("--max-nodes", max_nodes);
    cmd_orbit->add_option("--max-entry", max_entry);
    cmd_orbit->add_option("--workers", workers);
    cmd_orbit->add_option("--out", out_path);

    auto* cmd_equiv = app.add_subcommand("equiv", "bounded mutation-equivalence search");
    cmd_equiv->add_option("file", file)->required();
    cmd_equiv->add_option("file2", file2)->required();
    cmd_equiv->add_option("--depth", depth);
    cmd_equiv->add_option("--max-nodes", max_nodes);

    auto* cmd_gen = app.add_subcommand("gen", "deterministic random matrices");
    cmd_gen->add_option("--kind", kind)->check(CLI::IsMember({"unimodular", "skew"}));
    cmd_gen->add_option("--n", n);
    cmd_gen->add_option("--seed", seed);
    cmd_gen->add_option("--bound", bound);

    auto* cmd_search = app.add_subcommand(
        "search", "search for congruent pairs with different delta");
    cmd_search->add_option("--n", n);
    cmd_search->add_option("--seed", seed);
    cmd_search->add_option("--bound", bound);
    cmd_search->add_option("--trials", trials);

    auto* cmd_markov = app.add_subcommand("markov", "rank-3 Markov-constant report");
    cmd_markov->add_option("p", pqr[0]);
    cmd_markov->add_option("q", pqr[1]);
    cmd_markov->add_option("r", pqr[2]);
    cmd_markov->add_option("--file", file);

    auto* cmd_arf = app.add_subcommand("arf", "mod-2 rank, symplectic pairs, Arf bit");
    cmd_arf->add_option("file", file)->required();
    cmd_arf->add_option("--basis", basis_path, "explicit basis JSON");

    auto* cmd_lemmas = app.add_subcommand("check-lemmas", "run the identity battery");
    cmd_lemmas->add_option("--seed", seed);
    cmd_lemmas->add_option("--trials", lemma_trials);
    cmd_lemmas->add_option("--exhaustive-bound", lemma_bound);

    auto* cmd_verify = app.add_subcommand("verify-paper",
                                          "verify the bundled fixture battery");
    cmd_verify->add_option("--fixtures", fixtures_dir);
    cmd_verify->add_option("--only", only);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--trials", lemma_trials);

    CLI11_PARSE(app, argc, argv);

    if (cmd_delta->parsed()) {
        const SkewMatrix b = load_skew_file(file);
        std::cout << report_block(invariant_report(b), format == "machine");
        return 0;
    }

    if (cmd_mutate->parsed()) {
        const SkewMatrix b = load_skew_file(file);
        const MutationSequence seq = parse_mutation_sequence(sequence);
        write_output(to_text(mutate_sequence(b, seq).mat()), out_path);
        return 0;
    }

    if (cmd_orbit->parsed()) {
        const SkewMatrix b = load_skew_file(file);
        const OrbitReport r = orbit_bfs(b, depth, max_nodes, Int(max_entry), workers);
        std::ostringstream out;
        out << "seed-delta=" << delta(b).value << '\n'
            << "visited=" << r.visited << '\n'
            << "depth-reached=" << r.depth_reached << '\n'
            << "delta-constant=" << (r.delta_constant ? "true" : "false") << '\n'
            << "max-abs-entry=" << r.max_abs_entry << '\n'
            << "truncated=" << (r.truncated ? "true" : "false") << '\n'
            << "canonical-exact-only=" << (r.canonical_exact_only ? "true" : "false")
            << '\n';
        for (const auto& node : r.nodes)
            out << "node " << digest_hex(fnv1a64(to_text(node.mat()))) << '\n';
        write_output(out.str(), out_path);
        return r.delta_constant ? 0 : 1;
    }

    if (cmd_equiv->parsed()) {
        const SkewMatrix b = load_skew_file(file);
        const SkewMatrix b2 = load_skew_file(file2);
        const EquivalenceVerdict v = bounded_equivalence(b, b2, depth, max_nodes);
        if (v.equivalent()) {
            std::cout << "verdict=equivalent\n"
                      << "sequence=" << to_string(v.witness->seq) << '\n'
                      << "permutation=" << one_line(v.witness->perm) << '\n';
        } else {
            std::cout << "verdict=unknown\n";
        }
        return 0;
    }

    if (cmd_gen->parsed()) {
        const RngConfig cfg{seed, Int(bound)};
        if (kind == "skew")
            std::cout << to_text(random_skew(cfg, n).mat());
        else
            std::cout << to_text(random_unimodular(cfg, n));
        return 0;
    }

    if (cmd_search->parsed()) {
        const RngConfig cfg{seed, Int(bound)};
        const auto w = search_delta_discrepancy(cfg, n, trials);
        if (!w) {
            std::cout << "witness=none trials=" << trials << '\n';
            return 0;
        }
        std::cout << "witness=" << w->report.trial_index << '\n'
                  << "delta-b=" << w->report.delta_b.value << '\n'
                  << "delta-conj=" << w->report.delta_conj.value << '\n'
                  << "verify=" << (verify_witness(*w).all_pass() ? "pass" : "fail")
                  << '\n';
        std::cout << "matrix B:\n" << to_text(w->b.mat());
        std::cout << "matrix X:\n" << to_text(w->x);
        return 0;
    }

    if (cmd_markov->parsed()) {
        SkewMatrix b = file.empty()
                           ? rank3_matrix(Rank3Params{pqr[0], pqr[1], pqr[2]})
                           : load_skew_file(file);
        const MarkovIdentityReport r = markov_delta_identity(b);
        std::cout << "p=" << r.params.p << " q=" << r.params.q << " r=" << r.params.r
                  << '\n'
                  << "cyclic=" << (is_cyclic_3(b) ? "true" : "false") << '\n'
                  << "c=" << r.c << '\n'
                  << "det-companion=" << r.det_companion << '\n'
                  << "delta=" << r.delta_value.value << '\n'
                  << "det-identity=" << (r.det_ok ? "ok" : "fail") << '\n'
                  << "delta-identity=" << (r.delta_ok ? "ok" : "fail") << '\n';
        return (r.det_ok && r.delta_ok) ? 0 : 1;
    }

    if (cmd_arf->parsed()) {
        const SkewMatrix b = load_skew_file(file);
        const SymplecticBasis sb = symplectic_basis(b);
        std::cout << "n=" << b.size() << '\n'
                  << "rank-mod2=" << rank_mod2(b) << '\n';
        for (std::size_t i = 0; i < sb.pairs.size(); ++i)
            std::cout << "pair e=" << bit_string(sb.pairs[i].first)
                      << " f=" << bit_string(sb.pairs[i].second) << '\n';
        for (const auto& r : sb.radical)
            std::cout << "radical " << bit_string(r) << '\n';
        std::cout << "arf=" << arf_invariant(b) << '\n';
        if (!basis_path.empty()) {
            const auto eb = fixtures::parse_basis_json(read_file(basis_path), b.size());
            std::cout << "arf-explicit="
                      << arf_with_basis(b, eb.symplectic, eb.refinement) << '\n';
        }
        return 0;
    }

    if (cmd_lemmas->parsed())
        return render_checks(verify::check_lemmas(seed, lemma_trials, lemma_bound));

    if (cmd_verify->parsed()) {
        verify::Checks checks;
        const auto groups = only.empty() ? verify::group_names()
                                         : std::vector<std::string>{only};
        for (const auto& g : groups) {
            verify::Checks part = verify::run_group(g, fixtures_dir, seed, lemma_trials);
            checks.insert(checks.end(), part.begin(), part.end());
        }
        return render_checks(checks);
    }

    return 2; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const skewmut::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}

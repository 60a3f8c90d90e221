#pragma once

#include "skewmut/congruence.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <numeric>
#include <set>

namespace skewmut {

/// Canonical form together with a permutation achieving it and a flag for
/// the n > 8 fallback, where canonicalization degrades to the identity
/// and deduplication is exact-match only.
struct CanonicalResult {
    SkewMatrix matrix;
    PermutationMatrix perm; // permute(b, perm) == matrix
    bool exact_only = false;
};

/// Lexicographically least matrix (row-major entry order) among P b P^t
/// over all n! simultaneous permutations, for n <= 8.
inline CanonicalResult canonical_form_ex(const SkewMatrix& b) {
    const std::size_t n = b.size();
    if (n > 8)
        return CanonicalResult{b, PermutationMatrix::identity(n), true};

    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), std::size_t{0});
    std::vector<std::size_t> best_q = q;
    std::vector<Int> best;
    best.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) best.push_back(b(i, j));

    std::vector<Int> cand(n * n);
    while (std::next_permutation(q.begin(), q.end())) {
        // candidate(idx) = b(q(i), q(j)); compare lazily against best
        bool smaller = false;
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            cand[idx] = b(q[idx / n], q[idx % n]);
            if (cand[idx] != best[idx]) {
                smaller = cand[idx] < best[idx];
                if (smaller) // materialize the rest
                    for (std::size_t rest = idx + 1; rest < n * n; ++rest)
                        cand[rest] = b(q[rest / n], q[rest % n]);
                break;
            }
        }
        if (smaller) {
            best = cand;
            best_q = q;
        }
    }

    // candidate(i, j) = b(q(i), q(j)) equals permute(b, P) for
    // P.image(q[i]) = i, i.e. P = q^{-1}.
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[best_q[i]] = i;
    IntMatrix out(n, n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++idx) out(i, j) = best[idx];
    return CanonicalResult{SkewMatrix(std::move(out)),
                           PermutationMatrix(std::move(images)), false};
}

inline SkewMatrix canonical_form(const SkewMatrix& b) {
    return canonical_form_ex(b).matrix;
}

struct OrbitReport {
    SkewMatrix seed_matrix;
    std::size_t visited = 0;       // canonical classes retained
    std::size_t depth_reached = 0; // depth of the deepest retained class
    bool delta_constant = true;
    Int max_abs_entry = 0;
    bool truncated = false;            // some budget cut the exploration
    bool canonical_exact_only = false; // n > 8 fallback in effect
    std::vector<SkewMatrix> nodes;     // canonical forms, lex order
};

namespace detail {

inline std::vector<Int> key_of(const SkewMatrix& m) { return m.mat().entries(); }

struct ExpandResult {
    std::vector<SkewMatrix> children; // canonicalized
    bool pruned = false;
};

inline ExpandResult expand_frontier_chunk(const std::vector<SkewMatrix>& frontier,
                                          std::size_t lo, std::size_t hi,
                                          const Int& max_entry) {
    ExpandResult out;
    for (std::size_t idx = lo; idx < hi; ++idx) {
        const SkewMatrix& node = frontier[idx];
        for (std::size_t k = 1; k <= node.size(); ++k) {
            SkewMatrix child = mutate(node, k);
            if (child.mat().max_abs_entry() > max_entry) {
                out.pruned = true;
                continue;
            }
            out.children.push_back(canonical_form(child));
        }
    }
    return out;
}

} // namespace detail

/// Breadth-first exploration over all n mutation directions with
/// canonical-form deduplication. Delta is recomputed at every retained
/// class and compared with the seed. The visited set is a deterministic
/// function of the inputs: frontier expansion may run on several workers,
/// but each level is merged in canonical (lex) order before dedup.
inline OrbitReport orbit_bfs(const SkewMatrix& b, std::size_t max_depth,
                             std::size_t max_nodes, const Int& max_entry,
                             unsigned workers = 1) {
    if (max_depth < 1 || max_nodes < 1 || max_entry < 1)
        throw std::invalid_argument("orbit_bfs: budgets must be positive");
    if (workers < 1) workers = 1;

    const DeltaResidue d0 = delta(b);
    CanonicalResult c0 = canonical_form_ex(b);

    OrbitReport rep{b};
    rep.canonical_exact_only = c0.exact_only;

    std::set<std::vector<Int>> seen;
    auto accept = [&](const SkewMatrix& node) {
        seen.insert(detail::key_of(node));
        rep.nodes.push_back(node);
        if (delta(node) != d0) rep.delta_constant = false;
        Int m = node.mat().max_abs_entry();
        if (m > rep.max_abs_entry) rep.max_abs_entry = m;
    };
    accept(c0.matrix);

    std::vector<SkewMatrix> frontier{c0.matrix};
    std::size_t depth = 0;
    while (!frontier.empty() && depth < max_depth) {
        // Expand this level, in parallel chunks when asked to.
        std::vector<detail::ExpandResult> parts;
        if (workers == 1 || frontier.size() == 1) {
            parts.push_back(
                detail::expand_frontier_chunk(frontier, 0, frontier.size(), max_entry));
        } else {
            const std::size_t nchunks = std::min<std::size_t>(workers, frontier.size());
            std::vector<std::future<detail::ExpandResult>> futs;
            for (std::size_t c = 0; c < nchunks; ++c) {
                const std::size_t lo = frontier.size() * c / nchunks;
                const std::size_t hi = frontier.size() * (c + 1) / nchunks;
                futs.push_back(std::async(std::launch::async,
                                          detail::expand_frontier_chunk,
                                          std::cref(frontier), lo, hi,
                                          std::cref(max_entry)));
            }
            for (auto& f : futs) parts.push_back(f.get());
        }

        std::vector<SkewMatrix> children;
        for (auto& part : parts) {
            if (part.pruned) rep.truncated = true;
            for (auto& c : part.children) children.push_back(std::move(c));
        }
        std::sort(children.begin(), children.end(),
                  [](const SkewMatrix& a, const SkewMatrix& c) { return lex_less(a, c); });
        children.erase(std::unique(children.begin(), children.end()), children.end());

        ++depth;
        std::vector<SkewMatrix> next_frontier;
        for (auto& child : children) {
            if (seen.count(detail::key_of(child))) continue;
            if (rep.nodes.size() == max_nodes) {
                rep.truncated = true;
                break;
            }
            accept(child);
            next_frontier.push_back(child);
        }
        if (!next_frontier.empty()) rep.depth_reached = depth;
        frontier = std::move(next_frontier);
    }
    if (!frontier.empty() && depth == max_depth) rep.truncated = true;

    rep.visited = rep.nodes.size();
    std::sort(rep.nodes.begin(), rep.nodes.end(),
              [](const SkewMatrix& a, const SkewMatrix& c) { return lex_less(a, c); });
    return rep;
}

/// Replayable mutation-equivalence witness:
/// permute(mutate_sequence(b, seq), perm) == b2.
struct EquivalenceWitness {
    MutationSequence seq;
    PermutationMatrix perm;
};

/// Either Equivalent-with-witness or Unknown. Inequivalence is never
/// claimed; distinguishing matrices is invariant_report's job.
struct EquivalenceVerdict {
    std::optional<EquivalenceWitness> witness;

    bool equivalent() const { return witness.has_value(); }
};

inline EquivalenceVerdict bounded_equivalence(const SkewMatrix& b, const SkewMatrix& b2,
                                              std::size_t max_depth,
                                              std::size_t max_nodes) {
    if (b.size() != b2.size())
        throw std::invalid_argument("bounded_equivalence: size mismatch");
    if (max_depth < 1 || max_nodes < 1)
        throw std::invalid_argument("bounded_equivalence: budgets must be positive");

    const CanonicalResult target = canonical_form_ex(b2);
    const PermutationMatrix target_inv = target.perm.inverse();

    auto make_verdict = [&](const MutationSequence& seq,
                            const PermutationMatrix& reached_perm) {
        PermutationMatrix p = target_inv * reached_perm;
        EquivalenceWitness w{seq, p};
        if (permute(mutate_sequence(b, w.seq), w.perm) != b2)
            throw std::logic_error("bounded_equivalence: witness replay failed");
        return EquivalenceVerdict{std::move(w)};
    };

    struct Node {
        SkewMatrix matrix;
        MutationSequence seq;
    };

    CanonicalResult c0 = canonical_form_ex(b);
    if (c0.matrix == target.matrix) return make_verdict(MutationSequence{}, c0.perm);

    std::set<std::vector<Int>> seen{detail::key_of(c0.matrix)};
    std::deque<Node> queue{Node{b, {}}};
    std::size_t nodes_budget = max_nodes - 1; // seed consumed one

    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (cur.seq.steps.size() >= max_depth) continue;
        for (std::size_t k = 1; k <= b.size(); ++k) {
            SkewMatrix child = mutate(cur.matrix, k);
            MutationSequence seq = cur.seq;
            seq.steps.push_back(k);
            CanonicalResult cc = canonical_form_ex(child);
            if (cc.matrix == target.matrix) return make_verdict(seq, cc.perm);
            auto key = detail::key_of(cc.matrix);
            if (seen.count(key)) continue;
            if (nodes_budget == 0) continue;
            --nodes_budget;
            seen.insert(std::move(key));
            queue.push_back(Node{std::move(child), std::move(seq)});
        }
    }
    return EquivalenceVerdict{};
}

/// Invariant bundle used to compare matrices: delta plus the classical
/// congruence baselines.
struct InvariantReport {
    std::size_t n = 0;
    DeltaResidue delta_value;
    ParityClass parity = ParityClass::expected;
    std::size_t rank = 0;
    std::vector<Int> smith_factors;
    std::vector<Int> column_gcds;
    Int det;
};

inline InvariantReport invariant_report(const SkewMatrix& b) {
    InvariantReport r;
    r.n = b.size();
    r.delta_value = delta(b);
    r.parity = delta_parity_class(r.n, r.delta_value);
    SmithReport s = smith_report(b.mat());
    r.rank = s.rank;
    r.smith_factors = std::move(s.invariant_factors);
    r.column_gcds = std::move(s.column_gcds);
    r.det = det_exact(b.mat());
    return r;
}

} // namespace skewmut

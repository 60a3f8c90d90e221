#pragma once

#include "skewmut/arf.hpp"
#include "skewmut/digest.hpp"
#include "skewmut/matrix_io.hpp"

#include <nlohmann/json.hpp>

namespace skewmut::fixtures {

// Bundled reference matrices, shipped as text files and pinned by
// content digest:
//   pair5_*   5x5 congruent pair with delta 0 vs 2, plus the conjugator
//   arf_*     5x5 pair separating delta from the Arf invariant, with
//             explicit symplectic/refinement bases as JSON
//   app9_*,   larger congruent pairs (9x9 and 13x13) distinguished by
//   app13_*   delta
struct FixtureFile {
    const char* name;
    std::uint64_t digest;
};

inline constexpr FixtureFile kFiles[] = {
    {"pair5_b.txt", 0xb72952a46fa1bfe3ULL},
    {"pair5_bp.txt", 0xd335707d791659efULL},
    {"pair5_x.txt", 0x15afe1601b1d7dffULL},
    {"arf_b.txt", 0xbcfaa78d896f3982ULL},
    {"arf_bp.txt", 0x9d11b0407c978c1bULL},
    {"arf_b_basis.json", 0x5ac4b65b27a203b7ULL},
    {"arf_bp_basis.json", 0xd2faa05a08363f1aULL},
    {"app9_b.txt", 0xf2b7679716e839a4ULL},
    {"app9_x.txt", 0xfff1315c1fb6c23bULL},
    {"app13_b.txt", 0x615c4a98e7541c2fULL},
    {"app13_x.txt", 0x41214584a46d08e2ULL},
};

inline std::uint64_t expected_digest(const std::string& name) {
    for (const auto& f : kFiles)
        if (name == f.name) return f.digest;
    throw std::invalid_argument("unknown fixture: " + name);
}

inline std::string path_in(const std::string& dir, const std::string& name) {
    if (dir.empty()) return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

inline bool digest_ok(const std::string& dir, const std::string& name) {
    return fnv1a64(read_file(path_in(dir, name))) == expected_digest(name);
}

inline IntMatrix load_matrix(const std::string& dir, const std::string& name) {
    return parse_matrix(read_file(path_in(dir, name)));
}

inline SkewMatrix load_skew(const std::string& dir, const std::string& name) {
    return SkewMatrix(load_matrix(dir, name));
}

/// Explicit Arf basis: {"e": [...], "f": [...], "refinement": [...]},
/// each a list of 0/1 vectors of length n.
struct ExplicitBasis {
    SymplecticBasis symplectic;
    QuadraticRefinement refinement;
};

inline ExplicitBasis parse_basis_json(const std::string& text, std::size_t n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("basis json: ") + e.what());
    }
    auto read_vecs = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array())
            throw ParseError(std::string("basis json: missing array '") + key + "'");
        std::vector<BitVec> out;
        for (const auto& row : j[key]) {
            if (!row.is_array() || row.size() != n)
                throw ParseError("basis json: vectors must have length n");
            BitVec v(n);
            for (std::size_t i = 0; i < n; ++i) {
                const int bit = row[i].get<int>();
                if (bit != 0 && bit != 1)
                    throw ParseError("basis json: entries must be 0 or 1");
                v.set(i, bit == 1);
            }
            out.push_back(std::move(v));
        }
        return out;
    };
    auto es = read_vecs("e");
    auto fs = read_vecs("f");
    if (es.size() != fs.size()) throw ParseError("basis json: e/f length mismatch");
    ExplicitBasis out;
    for (std::size_t i = 0; i < es.size(); ++i)
        out.symplectic.pairs.emplace_back(std::move(es[i]), std::move(fs[i]));
    out.refinement.basis = read_vecs("refinement");
    return out;
}

inline ExplicitBasis load_basis(const std::string& dir, const std::string& name,
                                std::size_t n) {
    return parse_basis_json(read_file(path_in(dir, name)), n);
}

} // namespace skewmut::fixtures

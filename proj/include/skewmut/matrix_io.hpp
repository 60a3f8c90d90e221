#pragma once

#include "skewmut/skew.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace skewmut {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format: first line "n m", then n lines of m decimal integers
/// separated by single spaces. Arbitrary-precision digits allowed.
inline IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
        throw ParseError("matrix text: bad header line (want \"n m\")");
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    std::string token;
    for (long long i = 0; i < rows * cols; ++i) {
        if (!(in >> token))
            throw ParseError("matrix text: too few entries");
        try {
            entries.emplace_back(token);
        } catch (const std::exception&) {
            throw ParseError("matrix text: bad integer '" + token + "'");
        }
    }
    if (in >> token) throw ParseError("matrix text: trailing data");
    return IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                     std::move(entries));
}

/// JSON alternative: array of arrays of integers or decimal strings.
inline IntMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw ParseError("matrix json: want an array of rows");
    std::vector<Int> entries;
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw ParseError("matrix json: each row must be a non-empty array");
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError("matrix json: ragged rows");
        for (const auto& cell : row) {
            if (cell.is_number_integer())
                entries.emplace_back(cell.get<long long>());
            else if (cell.is_number_unsigned())
                entries.emplace_back(cell.get<unsigned long long>());
            else if (cell.is_string()) {
                try {
                    entries.emplace_back(cell.get<std::string>());
                } catch (const std::exception&) {
                    throw ParseError("matrix json: bad integer string '" +
                                     cell.get<std::string>() + "'");
                }
            } else
                throw ParseError("matrix json: entries must be integers or decimal strings");
        }
    }
    return IntMatrix(j.size(), cols, std::move(entries));
}

/// Accepts either format; JSON is detected by a leading '['.
inline IntMatrix parse_matrix(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '[' ? parse_matrix_json(text) : parse_matrix_text(text);
    }
    throw ParseError("matrix: empty input");
}

inline std::string to_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline IntMatrix load_matrix_file(const std::string& path) {
    return parse_matrix(read_file(path));
}

inline SkewMatrix load_skew_file(const std::string& path) {
    return SkewMatrix(load_matrix_file(path)); // domain_error if not skew
}

} // namespace skewmut

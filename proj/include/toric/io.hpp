#pragma once

// 4ti2-style matrix text format: a "<rows> <cols>" header followed by
// rows×cols whitespace-separated integers. Bases are written with one
// element per row.

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "toric/core.hpp"
#include "toric/lattice.hpp"
#include "toric/matrix.hpp"

namespace toric {

namespace detail {

struct Token {
    std::string text;
    std::size_t line;
};

inline std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back({tok, lineno});
    }
    return tokens;
}

inline Int parse_int(const Token& t) {
    Int v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range: '" + t.text + "'", t.line);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("not an integer: '" + t.text + "'", t.line);
    return v;
}

}  // namespace detail

inline IntMatrix parse_matrix(std::istream& in) {
    auto tokens = detail::tokenize(in);
    if (tokens.size() < 2) throw ParseError("missing \"<rows> <cols>\" header", tokens.empty() ? 1 : tokens[0].line);
    Int r = detail::parse_int(tokens[0]);
    Int c = detail::parse_int(tokens[1]);
    if (r < 0 || c < 0) throw ParseError("negative matrix dimension", tokens[0].line);
    const std::size_t expected = static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
    const std::size_t found = tokens.size() - 2;
    if (found != expected) {
        std::size_t line = found > expected ? tokens[2 + expected].line : tokens.back().line;
        throw ParseError("expected " + std::to_string(expected) + " entries, found " + std::to_string(found), line);
    }
    IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t k = 0; k < expected; ++k)
        m(k / static_cast<std::size_t>(c), k % static_cast<std::size_t>(c)) = detail::parse_int(tokens[2 + k]);
    return m;
}

inline IntMatrix parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline Configuration parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return Configuration(parse_matrix(in));
}

/// Canonical emitter: single spaces between entries, one row per line.
inline void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
}

inline std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

/// Writes a list of vectors of common length `width` as rows.
inline void write_vectors(std::ostream& out, const std::vector<IntVec>& vs, std::size_t width) {
    write_matrix(out, IntMatrix::from_rows(vs, width));
}

}  // namespace toric

#pragma once

// Text formats.
//
// Graph file:
//   # comment
//   sg <n>
//   e <u> <v> <+|->      (1-indexed, one line per edge)
// Blank lines and lines starting with '#' are ignored anywhere. The writer
// emits edges sorted by (u, v) with u < v, so a canonical file round-trips
// byte for byte.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgcorona/core.hpp"
#include "sgcorona/products.hpp"
#include "sgcorona/spectra.hpp"

namespace sgcorona {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_count(const std::string& tok, std::size_t& out) {
    if (tok.empty() || tok.size() > 9) return false;
    for (char ch : tok)
        if (ch < '0' || ch > '9') return false;
    out = std::stoul(tok);
    return true;
}

}  // namespace detail

inline SignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<SignedEdge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;

        std::vector<std::string> rest;
        for (std::string tok; ls >> tok;) rest.push_back(tok);

        if (!n) {
            std::size_t count = 0;
            if (tag != "sg" || rest.size() != 1 || !detail::parse_count(rest[0], count))
                throw ParseError(lineno, "expected header 'sg <n>'");
            n = count;
            continue;
        }
        if (tag == "sg") throw ParseError(lineno, "duplicate header");
        if (tag != "e") throw ParseError(lineno, "unknown record '" + tag + "'");
        if (rest.size() != 3) throw ParseError(lineno, "expected 'e <u> <v> <+|->'");
        std::size_t u = 0, v = 0;
        if (!detail::parse_count(rest[0], u) || !detail::parse_count(rest[1], v))
            throw ParseError(lineno, "vertex must be a positive integer");
        if (u < 1 || u > *n || v < 1 || v > *n)
            throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*n));
        if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        int sign = 0;
        if (rest[2] == "+") sign = 1;
        else if (rest[2] == "-") sign = -1;
        else throw ParseError(lineno, "bad sign '" + rest[2] + "'");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        edges.push_back({u - 1, v - 1, sign});
    }
    if (!n) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'sg <n>'");
    return SignedGraph(*n, std::move(edges));
}

inline std::string write_graph(const SignedGraph& g) {
    std::string out = "sg " + std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + (e.sign > 0 ? " +\n" : " -\n");
    return out;
}

/// Comment lines mapping product positions back to u_i, a_i and v_j^i
/// (all 1-indexed): "# layout u <i> -> <index>", "# layout a <i> -> <index>",
/// "# layout v <copy i> <j> -> <index>".
inline std::string write_layout(const ProductLayout& L) {
    std::string out;
    auto line = [&](const std::string& what, std::size_t index) {
        out += "# layout " + what + " -> " + std::to_string(index + 1) + "\n";
    };
    for (std::size_t i = 0; i < L.n1; ++i) line("u " + std::to_string(i + 1), L.u(i));
    for (std::size_t i = 0; i < L.n1; ++i) line("a " + std::to_string(i + 1), L.a(i));
    for (std::size_t j = 0; j < L.n2; ++j)
        for (std::size_t i = 0; i < L.n1; ++i)
            line("v " + std::to_string(i + 1) + " " + std::to_string(j + 1), L.v(i, j));
    return out;
}

/// 12 significant digits; values within 5e-13 of zero print as 0.
inline std::string format_real(double x) {
    if (std::fabs(x) < 5e-13) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// One eigenvalue per line, descending.
inline std::string write_spectrum(const Spectrum& s) {
    std::vector<double> v = s.eigenvalues;
    std::sort(v.begin(), v.end(), std::greater<>());
    std::string out;
    for (double x : v) out += format_real(x) + "\n";
    return out;
}

}  // namespace sgcorona

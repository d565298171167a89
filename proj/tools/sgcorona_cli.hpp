#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code: 0 success / PASS, 1 FAIL, 2 usage,
// input or hypothesis errors.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgcorona/sgcorona.hpp"

namespace sgcorona::cli {

namespace detail {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline MatrixKind parse_kind(const std::string& s) {
    if (s == "A") return MatrixKind::adjacency;
    if (s == "L") return MatrixKind::laplacian;
    return MatrixKind::signless_laplacian;
}

inline std::string mark_string(const Marking& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " " : "") + std::string(m[i] > 0 ? "+1" : "-1");
    return out;
}

inline int cmd_balance(const SignedGraph& g, std::ostream& out) {
    const auto r = is_balanced(g);
    if (r.balanced) {
        out << "balanced\nwitness: " << mark_string(*r.witness) << "\n";
        return 0;
    }
    const auto& e = *r.violating_edge;
    out << "unbalanced\nviolating edge: " << e.u + 1 << " " << e.v + 1 << " " << (e.sign > 0 ? '+' : '-') << "\n";
    out << "negative cycle:";
    for (std::size_t v : r.negative_cycle) out << " " << v + 1;
    out << "\n";
    return 0;
}

inline int cmd_stats(const SignedGraph& g1, const SignedGraph& g2, std::ostream& out) {
    bool ok = true;
    auto row = [&](const char* name, std::int64_t formula, std::int64_t counted) {
        const bool same = formula == counted;
        ok = ok && same;
        out << "  " << std::left << std::setw(18) << name << std::right << std::setw(8) << formula << std::setw(8)
            << counted << "  " << (same ? "formula = enumeration" : "MISMATCH") << "\n";
    };
    const EdgeStats ef = edge_stats_formula(g1, g2), ee = edge_stats_enumerated(g1, g2);
    out << "edges of G1 (*) G2    formula  counted\n";
    row("total", ef.total, ee.total);
    row("positive", ef.positive, ee.positive);
    row("negative", ef.negative, ee.negative);
    row("copy positive", ef.copy_positive, ee.copy_positive);
    row("copy negative", ef.copy_negative, ee.copy_negative);
    row("join positive", ef.join_positive, ee.join_positive);
    row("join negative", ef.join_negative, ee.join_negative);
    out << "inputs: |DE|=" << ef.dup_edges << " |DE+|=" << ef.dup_positive << " |DE-|=" << ef.dup_negative
        << " |E2|=" << ef.factor_edges << " |E2+|=" << ef.factor_positive << " |E2-|=" << ef.factor_negative
        << " N1+=" << ef.n1_plus << " N1-=" << ef.n1_minus << " N2+=" << ef.n2_plus << " N2-=" << ef.n2_minus << "\n";

    const TriadStats tf = triad_stats_formula(g1, g2);
    const TriadCounts te = enumerate_triads(add_vertex_corona(g1, g2).graph);
    out << "triads of G1 (*) G2   formula  counted\n";
    const char* names[] = {"T0", "T1", "T2", "T3"};
    for (std::size_t i = 0; i < 4; ++i) row(names[i], tf.product[i], te[i]);
    row("total", total_triads_formula(g1, g2), te.total());
    return ok ? 0 : 1;
}

inline int cmd_verify(MatrixKind kind, const SignedGraph& g1, const SignedGraph& g2, std::ostream& out) {
    const IntPolynomial theorem = product_char_poly(g1, g2, kind);
    const IntPolynomial direct = char_poly(add_vertex_corona(g1, g2).graph, kind);
    out << matrix_letter(kind) << "-characteristic polynomial of G1 (*) G2, degree " << direct.degree() << "\n";
    out << "theorem: " << to_coefficient_string(theorem) << "\n";
    out << "direct:  " << to_coefficient_string(direct) << "\n";
    const bool pass = theorem == direct;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

inline int cmd_equienergetic(const SignedGraph& g, const SignedGraph& h1, const SignedGraph& h2, std::ostream& out) {
    const auto r = equienergetic_product_pair(g, h1, h2);
    out << "energy(H1) = " << format_real(r.input_energy_1) << "\n";
    out << "energy(H2) = " << format_real(r.input_energy_2) << "\n";
    for (const auto& v : r.violations) out << "precondition failed: " << v << "\n";
    if (r.regular_with_distinct_coronals)
        out << "note: both factors are regular of the same degree but their coronals differ\n";
    if (!r.admissible()) {
        out << "FAIL\n";
        return 1;
    }
    out << "energy(G (*) H1) = " << format_real(r.product_energy_1) << "\n";
    out << "energy(G (*) H2) = " << format_real(r.product_energy_2) << "\n";
    out << "products cospectral: " << (r.products_cospectral ? "yes" : "no") << "\n";
    out << (r.holds() ? "PASS" : "FAIL") << "\n";
    return r.holds() ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Duplication corona products of signed graphs", "sgcorona"};
    app.require_subcommand(1);

    std::string matrix = "A", theorem = "A", kind = "add-vertex";
    std::vector<std::string> files;
    const std::vector<std::string> kinds{"A", "L", "Q"};

    auto add_files = [&](CLI::App* sub, int count) {
        sub->add_option("files", files, count == 1 ? "graph file" : "graph files")->required()->expected(count);
    };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of A, L or Q, one per line, descending");
    spectrum_cmd->add_option("--matrix", matrix, "A, L or Q")->check(CLI::IsMember(kinds));
    add_files(spectrum_cmd, 1);
    auto* balance_cmd = app.add_subcommand("balance", "balance test with witness marking or negative cycle");
    add_files(balance_cmd, 1);
    auto* marking_cmd = app.add_subcommand("marking", "canonical marking");
    add_files(marking_cmd, 1);
    auto* duplicate_cmd = app.add_subcommand("duplicate", "duplication signed graph");
    add_files(duplicate_cmd, 1);
    auto* corona_cmd = app.add_subcommand("corona", "duplication corona product with layout map");
    corona_cmd->add_option("--kind", kind, "add-vertex or vertex")
        ->check(CLI::IsMember(std::vector<std::string>{"add-vertex", "vertex"}));
    add_files(corona_cmd, 2);
    auto* stats_cmd = app.add_subcommand("stats", "edge and triad counts of G1 (*) G2, formula vs enumeration");
    add_files(stats_cmd, 2);
    auto* coronal_cmd = app.add_subcommand("coronal", "reduced coronal P / F under the canonical marking");
    coronal_cmd->add_option("--matrix", matrix, "A, L or Q")->check(CLI::IsMember(kinds));
    add_files(coronal_cmd, 1);
    auto* verify_cmd = app.add_subcommand("verify", "exact check of a characteristic polynomial theorem");
    verify_cmd->add_option("--theorem", theorem, "A, L or Q")->check(CLI::IsMember(kinds));
    add_files(verify_cmd, 2);
    auto* energy_cmd = app.add_subcommand("energy", "sum of absolute adjacency eigenvalues");
    add_files(energy_cmd, 1);
    auto* integral_cmd = app.add_subcommand("integral", "exact integrality test");
    add_files(integral_cmd, 1);
    auto* equi_cmd = app.add_subcommand("equienergetic", "non-cospectral equienergetic products G (*) H1, G (*) H2");
    add_files(equi_cmd, 3);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<SignedGraph> g;
        for (const auto& f : files) g.push_back(detail::load_graph(f));

        if (spectrum_cmd->parsed()) {
            out << write_spectrum(spectrum(g[0], detail::parse_kind(matrix)));
        } else if (balance_cmd->parsed()) {
            return detail::cmd_balance(g[0], out);
        } else if (marking_cmd->parsed()) {
            out << detail::mark_string(canonical_marking(g[0])) << "\n";
        } else if (duplicate_cmd->parsed()) {
            out << write_graph(duplication(g[0])) << write_layout(ProductLayout{g[0].order(), 0});
        } else if (corona_cmd->parsed()) {
            const Product p = kind == "vertex" ? vertex_corona(g[0], g[1]) : add_vertex_corona(g[0], g[1]);
            out << write_graph(p.graph) << write_layout(p.layout);
        } else if (stats_cmd->parsed()) {
            return detail::cmd_stats(g[0], g[1], out);
        } else if (coronal_cmd->parsed()) {
            const Coronal c = coronal(g[0], detail::parse_kind(matrix));
            out << "P: " << to_coefficient_string(c.numerator) << "\n";
            out << "F: " << to_coefficient_string(c.denominator) << "\n";
            out << "R: " << to_coefficient_string(c.removed_factor) << "\n";
        } else if (verify_cmd->parsed()) {
            return detail::cmd_verify(detail::parse_kind(theorem), g[0], g[1], out);
        } else if (energy_cmd->parsed()) {
            out << format_real(energy(g[0]).energy) << "\n";
        } else if (integral_cmd->parsed()) {
            const auto r = is_integral(g[0]);
            if (!r.integral) {
                out << "not integral\n";
            } else {
                out << "integral\n";
                for (long long x : r.eigenvalues) out << x << "\n";
            }
        } else if (equi_cmd->parsed()) {
            return detail::cmd_equienergetic(g[0], g[1], g[2], out);
        }
        return 0;
    } catch (const detail::InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sgcorona::cli

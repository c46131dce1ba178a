// achrolab - construct, verify, bound and search proper complete colourings
// of K_p [] K_q given as p x q colour matrices.
//
// Exit codes: 0 success/found, 1 semantic negative (non-member, exhausted),
// 2 usage or parse error, 3 node budget exhausted.
//
// All JSON written to stdout is canonically ordered and free of wall-clock
// data: two runs with the same inputs and seed are byte-identical.

#include "achrolab/bounds.hpp"
#include "achrolab/constructions.hpp"
#include "achrolab/diagnostics.hpp"
#include "achrolab/matrix.hpp"
#include "achrolab/matrix_io.hpp"
#include "achrolab/search.hpp"
#include "achrolab/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using achrolab::ColourMatrix;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kBadPairCap = 50;

std::string fnv1a_digest(const std::string & bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

ordered_json matrix_json(const ColourMatrix & m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.row_count(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.col_count(); ++j)
            row.push_back(m.token_at(i, j));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"p", m.row_count()},
                        {"q", m.col_count()},
                        {"colours", m.colour_count()},
                        {"rows", std::move(rows)}};
}

ordered_json aux_graph_json(const achrolab::AuxGraph & g) {
    ordered_json edges = ordered_json::array();
    for (const auto & e : g.edges)
        edges.push_back(ordered_json{{"rows", {e.u + 1, e.v + 1}}, {"weight", e.weight}});
    ordered_json comps = ordered_json::array();
    for (const auto & c : g.components) {
        ordered_json rows = ordered_json::array();
        for (int v : c.vertices)
            rows.push_back(v + 1);
        comps.push_back(ordered_json{{"rows", std::move(rows)}, {"kind", to_string(c.kind)}});
    }
    return ordered_json{{"order", g.order},
                        {"max_degree", g.max_degree},
                        {"edges", std::move(edges)},
                        {"components", std::move(comps)}};
}

ordered_json claims_json(const achrolab::DiagnosticsReport & report) {
    ordered_json claims = ordered_json::array();
    for (const auto & c : report.claims) {
        ordered_json details;
        for (const auto & [key, value] : c.details)
            details[key] = value;
        claims.push_back(ordered_json{{"id", c.id},
                                      {"applicable", c.applicable},
                                      {"holds", c.applicable ? ordered_json(c.holds)
                                                             : ordered_json(nullptr)},
                                      {"details", std::move(details)}});
    }
    return ordered_json{{"applicable", true},
                        {"q", report.q},
                        {"surplus", report.surplus},
                        {"aux_graph", aux_graph_json(report.aux)},
                        {"claims", std::move(claims)},
                        {"all_hold", report.all_applicable_hold()}};
}

void emit(const ordered_json & doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_construct(int q, const std::string & output, bool latex) {
    const ColourMatrix m = achrolab::build_odd_q_matrix(q);
    if (!output.empty())
        achrolab::write_matrix_file(output, m);
    if (latex) {
        std::cout << achrolab::render_latex(m);
    } else if (output.empty()) {
        std::cout << achrolab::render_matrix(m);
    } else {
        emit(ordered_json{{"command", "construct"},
                          {"q", q},
                          {"p", 6},
                          {"colours", m.colour_count()},
                          {"output", output}});
    }
    return kExitOk;
}

int cmd_verify(const std::string & path, bool diagnose) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream stream(bytes);
    const ColourMatrix m = achrolab::read_matrix(stream);

    const auto violation = achrolab::properness_violation(m);
    const auto report = achrolab::completeness(m);
    const bool member = !violation && report.complete;

    ordered_json doc{{"command", "verify"},
                     {"input", ordered_json{{"path", path},
                                            {"digest", fnv1a_digest(bytes)},
                                            {"p", m.row_count()},
                                            {"q", m.col_count()},
                                            {"colours", m.colour_count()}}}};
    doc["proper"] = !violation.has_value();
    if (violation) {
        doc["violation"] = ordered_json{{"line_kind", violation->in_row ? "row" : "column"},
                                        {"line", violation->line},
                                        {"colour", m.token_of(violation->colour)}};
    } else {
        doc["violation"] = nullptr;
    }
    doc["complete"] = report.complete;
    doc["bad_pair_count"] = report.bad_pairs.size();
    ordered_json bad = ordered_json::array();
    for (std::size_t t = 0; t < report.bad_pairs.size() && t < kBadPairCap; ++t)
        bad.push_back({m.token_of(report.bad_pairs[t].first),
                       m.token_of(report.bad_pairs[t].second)});
    doc["bad_pairs"] = std::move(bad);
    doc["member"] = member;

    if (diagnose) {
        const int q = m.col_count();
        const int s = m.colour_count() - 2 * q;
        if (m.row_count() != 6)
            doc["diagnostics"] = ordered_json{{"applicable", false},
                                              {"reason", "matrix does not have 6 rows"}};
        else if (!member)
            doc["diagnostics"] =
                ordered_json{{"applicable", false},
                             {"reason", "matrix is not a proper complete colouring"}};
        else if (q < 7)
            doc["diagnostics"] = ordered_json{{"applicable", false}, {"reason", "q < 7"}};
        else if (s < 1 || s > 7)
            doc["diagnostics"] =
                ordered_json{{"applicable", false},
                             {"reason", "surplus " + std::to_string(s) + " outside [1,7]"}};
        else
            doc["diagnostics"] = claims_json(achrolab::claim_suite(m));
    }

    emit(doc);
    return member ? kExitOk : kExitNegative;
}

int cmd_bounds(int p, int q) {
    ordered_json doc{{"command", "bounds"}, {"p", p}, {"q", q}};
    doc["general_upper_bound"] = achrolab::general_upper_bound(p, q);
    ordered_json table = ordered_json::array();
    for (long long l = 1; l <= p; ++l) {
        const long long by_lines = l * (p + q - l - 1) + 1;
        const long long by_count = static_cast<long long>(p) * q / l;
        table.push_back(ordered_json{{"l", l},
                                     {"line_bound", by_lines},
                                     {"count_bound", by_count},
                                     {"bound", std::min(by_lines, by_count)}});
    }
    doc["per_frequency"] = std::move(table);
    if (p == 6 && q >= 7) {
        const auto k6 = achrolab::k6_bounds(q);
        doc["k6"] = ordered_json{
            {"lower", k6.lower ? ordered_json(*k6.lower) : ordered_json(nullptr)},
            {"upper", k6.upper},
            {"exact", k6.exact ? ordered_json(*k6.exact) : ordered_json(nullptr)}};
    }
    emit(doc);
    return kExitOk;
}

int cmd_search(int p, int q, std::optional<int> k, bool heuristic, std::uint64_t budget,
               std::uint64_t seed, bool no_symmetry, const std::string & witness_path) {
    ordered_json doc{{"command", "search"}, {"p", p}, {"q", q}};
    doc["mode"] = heuristic ? "heuristic" : "exact";

    auto attach_witness = [&](const ColourMatrix & m) {
        doc["witness"] = matrix_json(m);
        if (!witness_path.empty()) {
            achrolab::write_matrix_file(witness_path, m);
            doc["witness_path"] = witness_path;
        } else {
            doc["witness_path"] = nullptr;
        }
    };

    if (!k.has_value()) {
        // optimisation form: exact only
        const auto result = achrolab::achromatic_number(p, q);
        doc["achromatic_number"] = result.value;
        doc["total_nodes"] = result.total_nodes;
        using Kind = achrolab::AchromaticCertificate::Kind;
        if (result.certificate.kind == Kind::Exhausted)
            doc["certificate"] = ordered_json{
                {"k", result.value + 1},
                {"kind", "exhausted"},
                {"nodes_expanded", result.certificate.nodes_expanded}};
        else
            doc["certificate"] = ordered_json{{"k", result.value + 1},
                                              {"kind", "upper-bound-formula"},
                                              {"nodes_expanded", nullptr}};
        attach_witness(result.witness);
        emit(doc);
        return kExitOk;
    }

    achrolab::SearchConfig cfg;
    cfg.p = p;
    cfg.q = q;
    cfg.k = *k;
    cfg.node_budget = budget;
    cfg.seed = seed;
    cfg.symmetry_breaking = !no_symmetry;

    doc["k"] = *k;
    if (heuristic) {
        doc["seed"] = seed;
        doc["budget"] = budget;
    }
    const auto result = heuristic ? achrolab::heuristic_search(cfg)
                                  : achrolab::exists_colouring(cfg);
    doc["outcome"] = to_string(result.outcome);
    doc["nodes_expanded"] = result.nodes_expanded;
    if (heuristic)
        doc["restarts"] = result.restarts;
    if (result.witness)
        attach_witness(*result.witness);
    else
        doc["witness"] = nullptr;
    emit(doc);

    switch (result.outcome) {
    case achrolab::SearchOutcome::Found: return kExitOk;
    case achrolab::SearchOutcome::Exhausted: return kExitNegative;
    case achrolab::SearchOutcome::BudgetExhausted: return kExitBudget;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"colour-matrix laboratory for proper complete colourings of K_p [] K_q"};
    app.require_subcommand(1);

    int construct_q = 0;
    std::string construct_out;
    bool construct_latex = false;
    auto * construct = app.add_subcommand(
        "construct", "emit the 6 x q lower-bound matrix with 2q+3 colours (odd q >= 7)");
    construct->add_option("--q", construct_q, "number of columns (odd, >= 7)")->required();
    construct->add_option("-o,--output", construct_out, "write the matrix file here");
    construct->add_flag("--latex", construct_latex, "print the matrix as a LaTeX pmatrix");

    std::string verify_path;
    bool verify_diagnose = false;
    auto * verify = app.add_subcommand("verify", "check a matrix file for membership");
    verify->add_option("file", verify_path, "matrix file")->required();
    verify->add_flag("--diagnose", verify_diagnose,
                     "also run the 6-row structural claim suite");

    int bounds_p = 0, bounds_q = 0;
    auto * bounds = app.add_subcommand("bounds", "achromatic bounds for K_p [] K_q");
    bounds->add_option("-p", bounds_p, "rows (1 <= p <= q)")->required();
    bounds->add_option("-q", bounds_q, "columns")->required();

    int search_p = 0, search_q = 0;
    int search_k = -1;
    bool search_exact = false, search_heuristic = false, search_no_symmetry = false;
    std::uint64_t search_budget = 0, search_seed = 0;
    std::string search_out;
    auto * search = app.add_subcommand(
        "search", "exact or heuristic search for proper complete colourings");
    search->add_option("-p", search_p, "rows (1 <= p <= q)")->required();
    search->add_option("-q", search_q, "columns")->required();
    search->add_option("--k", search_k, "target colour count (omit: maximise exactly)");
    search->add_flag("--exact", search_exact, "exhaustive search (default)");
    search->add_flag("--heuristic", search_heuristic, "randomised local search");
    search->add_option("--budget", search_budget, "node budget (0 = unlimited, exact only)");
    search->add_option("--seed", search_seed, "heuristic random seed");
    search->add_flag("--no-symmetry", search_no_symmetry, "disable root symmetry breaking");
    search->add_option("-o,--output", search_out, "write the witness matrix here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(construct_q, construct_out, construct_latex);
        if (verify->parsed())
            return cmd_verify(verify_path, verify_diagnose);
        if (bounds->parsed())
            return cmd_bounds(bounds_p, bounds_q);
        if (search->parsed()) {
            if (search_exact && search_heuristic) {
                std::cerr << "error: --exact and --heuristic are mutually exclusive\n";
                return kExitUsage;
            }
            if (search_heuristic && search_k < 0) {
                std::cerr << "error: --heuristic needs an explicit --k target\n";
                return kExitUsage;
            }
            if (search_heuristic && search_budget == 0) {
                std::cerr << "error: --heuristic needs a positive --budget\n";
                return kExitUsage;
            }
            std::optional<int> k;
            if (search_k >= 0)
                k = search_k;
            return cmd_search(search_p, search_q, k, search_heuristic, search_budget,
                              search_seed, search_no_symmetry, search_out);
        }
    } catch (const achrolab::MatrixParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

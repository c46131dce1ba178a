#include "achrolab/diagnostics.hpp"

#include "achrolab/bounds.hpp"
#include "achrolab/stats.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace achrolab {

const char * to_string(AuxGraph::ComponentKind kind) {
    switch (kind) {
    case AuxGraph::ComponentKind::Isolated: return "isolated";
    case AuxGraph::ComponentKind::Path: return "path";
    case AuxGraph::ComponentKind::Cycle: return "cycle";
    case AuxGraph::ComponentKind::Other: return "other";
    }
    return "?";
}

AuxGraph build_aux_graph(const ColourMatrix & m) {
    if (!is_proper(m))
        throw std::invalid_argument("aux graph is defined for proper matrices only");

    const MatrixStats st(m);
    const int p = m.row_count();

    AuxGraph g;
    g.order = p;
    g.degree.assign(p, 0);
    for (int i = 0; i < p; ++i)
        for (int k = i + 1; k < p; ++k) {
            const int w = st.lines.shared_count({i, k});
            if (w >= 1) {
                g.edges.push_back({i, k, w});
                ++g.degree[i];
                ++g.degree[k];
            }
        }
    g.max_degree = p ? *std::max_element(g.degree.begin(), g.degree.end()) : 0;

    std::vector<std::vector<int>> adj(p);
    for (const auto & e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(p, 0);
    for (int start = 0; start < p; ++start) {
        if (seen[start])
            continue;
        AuxGraph::Component comp;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());

        const int order = static_cast<int>(comp.vertices.size());
        int edge_count = 0;
        int max_deg = 0;
        for (int v : comp.vertices) {
            edge_count += static_cast<int>(adj[v].size());
            max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));
        }
        edge_count /= 2;

        if (order == 1)
            comp.kind = AuxGraph::ComponentKind::Isolated;
        else if (edge_count == order - 1 && max_deg <= 2)
            comp.kind = AuxGraph::ComponentKind::Path;
        else if (edge_count == order && max_deg == 2)
            comp.kind = AuxGraph::ComponentKind::Cycle;
        else
            comp.kind = AuxGraph::ComponentKind::Other;
        g.components.push_back(std::move(comp));
    }
    return g;
}

bool DiagnosticsReport::all_applicable_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimResult & c) { return !c.applicable || c.holds; });
}

namespace {

std::string rows_1based(std::initializer_list<int> rows) {
    std::string out;
    for (int r : rows) {
        if (!out.empty())
            out += ",";
        out += std::to_string(r + 1);
    }
    return out;
}

using Detail = std::pair<std::string, std::string>;

Detail num(const std::string & key, long long value) { return {key, std::to_string(value)}; }

} // namespace

DiagnosticsReport claim_suite(const ColourMatrix & m) {
    if (m.row_count() != 6)
        throw std::invalid_argument("claim suite applies to matrices with 6 rows");
    const int q = m.col_count();
    if (q < 7)
        throw std::invalid_argument("claim suite needs q >= 7");
    if (!is_member(m))
        throw std::invalid_argument("claim suite applies to proper complete matrices only");
    const int s = m.colour_count() - 2 * q;
    if (s < 1 || s > 7)
        throw std::invalid_argument("claim suite needs surplus |C|-2q in [1,7], got " +
                                    std::to_string(s));

    const MatrixStats st(m);
    const auto & freq = st.freq;
    const auto & lines = st.lines;

    DiagnosticsReport report;
    report.q = q;
    report.surplus = s;
    report.aux = build_aux_graph(m);
    const AuxGraph & g = report.aux;

    auto add = [&report](ClaimResult c) { report.claims.push_back(std::move(c)); };

    // all row pairs with r(i,k), precomputed for several claims below
    struct PairR {
        int i, k, r;
    };
    std::vector<PairR> pair_r;
    for (int i = 0; i < 6; ++i)
        for (int k = i + 1; k < 6; ++k)
            pair_r.push_back({i, k, lines.shared_count({i, k})});

    const int c1 = freq.count_with_frequency(1);
    const int c2 = freq.count_with_frequency(2);
    const int c3p = freq.count_with_frequency_at_least(3);
    const int c4p = freq.count_with_frequency_at_least(4);

    {
        ClaimResult c{"no-frequency-one-colours", true, c1 == 0, {num("c1", c1)}};
        add(std::move(c));
    }
    {
        const int mf = freq.max_frequency();
        ClaimResult c{"no-frequency-above-six", true, mf <= 6, {num("max_frequency", mf)}};
        add(std::move(c));
    }
    {
        ClaimResult c{"pair-colour-floor", true, c2 >= 3 * s,
                      {num("c2", c2), num("floor", 3 * s)}};
        add(std::move(c));
    }
    {
        ClaimResult c{"high-frequency-ceiling", true, c3p <= 2 * q - 2 * s,
                      {num("c3_plus", c3p), num("ceiling", 2 * q - 2 * s)}};
        add(std::move(c));
    }
    {
        long long weighted = 0;
        for (int l = 3; l <= freq.max_frequency(); ++l)
            weighted += static_cast<long long>(l) * freq.count_with_frequency(l);
        ClaimResult c{"weighted-frequency-ceiling", true, weighted <= 6 * q - 6 * s,
                      {num("weighted_sum", weighted), num("ceiling", 6 * q - 6 * s)}};
        add(std::move(c));
    }
    {
        const int mf = freq.min_frequency();
        ClaimResult c{"matrix-frequency-two", true, mf == 2, {num("min_frequency", mf)}};
        add(std::move(c));
    }
    {
        const long long exc = matrix_excess(m).matrix_excess;
        ClaimResult c{"matrix-excess-value", true, exc == 7 - s,
                      {num("matrix_excess", exc), num("expected", 7 - s)}};
        add(std::move(c));
    }
    {
        ClaimResult c{"heavy-colour-ceiling", true, c4p <= c2 - 3 * s,
                      {num("c4_plus", c4p), num("ceiling", c2 - 3 * s)}};
        add(std::move(c));
    }
    {
        // max r(i,k) over all row pairs, lexicographically first maximiser
        int best_i = 0, best_k = 1, best_r = -1;
        bool ok = true;
        for (const auto & pr : pair_r) {
            if (pr.r > best_r) {
                best_r = pr.r;
                best_i = pr.i;
                best_k = pr.k;
            }
            ok = ok && pr.r <= 8 - s;
        }
        ClaimResult c{"shared-pair-ceiling", true, ok,
                      {num("max_r", best_r), {"rows", rows_1based({best_i, best_k})},
                       num("ceiling", 8 - s)}};
        add(std::move(c));
    }
    {
        // r(i,k) + r_{3+}(i,k) <= 8-s whenever r(i,k) >= 1
        bool any = false, ok = true;
        int best_sum = -1, best_i = 0, best_k = 1;
        for (const auto & pr : pair_r) {
            if (pr.r < 1)
                continue;
            any = true;
            const int sum = pr.r + lines.shared_high_freq_count(pr.i, pr.k);
            if (sum > best_sum) {
                best_sum = sum;
                best_i = pr.i;
                best_k = pr.k;
            }
            ok = ok && sum <= 8 - s;
        }
        ClaimResult c{"shared-pair-plus-high-ceiling", any, any && ok, {}};
        if (any)
            c.details = {num("max_sum", best_sum), {"rows", rows_1based({best_i, best_k})},
                         num("ceiling", 8 - s)};
        add(std::move(c));
    }
    {
        // r(B) <= r*(B) <= 2|B| for every B of size 3 or 4 disjoint from a
        // row pair with r(i,k) >= 1
        bool any = false, ok = true;
        long long checked = 0;
        int max_rstar = -1;
        std::string max_rstar_rows;
        for (const auto & pr : pair_r) {
            if (pr.r < 1)
                continue;
            std::vector<int> rest;
            for (int v = 0; v < 6; ++v)
                if (v != pr.i && v != pr.k)
                    rest.push_back(v);
            for (unsigned mask = 1; mask < 16; ++mask) {
                const int size = std::popcount(mask);
                if (size < 3)
                    continue;
                std::vector<int> b;
                for (int t = 0; t < 4; ++t)
                    if (mask & (1u << t))
                        b.push_back(rest[t]);
                any = true;
                ++checked;
                const int r_b = lines.shared_count(b);
                const int rstar = lines.shared_union_count(b);
                ok = ok && r_b <= rstar && rstar <= 2 * size;
                if (rstar > max_rstar) {
                    max_rstar = rstar;
                    max_rstar_rows.clear();
                    for (int v : b)
                        max_rstar_rows += (max_rstar_rows.empty() ? "" : ",") +
                                          std::to_string(v + 1);
                }
            }
        }
        ClaimResult c{"disjoint-union-ceiling", any, any && ok, {}};
        if (any)
            c.details = {num("checked", checked), num("max_r_star", max_rstar),
                         {"rows", max_rstar_rows}};
        add(std::move(c));
    }
    {
        // complementary triples: r(i,j,k) >= 1 forces r of the other three
        // rows to stay <= 9
        bool any = false, ok = true;
        int worst = -1;
        std::string worst_rows;
        for (unsigned mask = 0; mask < 64; ++mask) {
            if (std::popcount(mask) != 3)
                continue;
            std::vector<int> tri, other;
            for (int v = 0; v < 6; ++v)
                ((mask >> v) & 1u ? tri : other).push_back(v);
            if (lines.shared_count(tri) < 1)
                continue;
            any = true;
            const int r_other = lines.shared_count(other);
            ok = ok && r_other <= 9;
            if (r_other > worst) {
                worst = r_other;
                worst_rows.clear();
                for (int v : other)
                    worst_rows += (worst_rows.empty() ? "" : ",") + std::to_string(v + 1);
            }
        }
        ClaimResult c{"complementary-triple-ceiling", any, any && ok, {}};
        if (any)
            c.details = {num("max_complement_r", worst), {"rows", worst_rows},
                         num("ceiling", 9)};
        add(std::move(c));
    }
    {
        const bool applicable = g.max_degree >= 4;
        ClaimResult c{"high-degree-column-ceiling", applicable,
                      applicable && q <= 40 - 5 * s,
                      {num("max_degree", g.max_degree), num("q", q),
                       num("ceiling", 40 - 5 * s)}};
        add(std::move(c));
    }
    {
        // every degree-3 vertex forces a floor on the shared colours of the
        // vertex and its two non-neighbours
        const bool applicable = g.max_degree == 3;
        bool ok = true;
        int worst = -1;
        std::string worst_rows;
        if (applicable) {
            worst = m.cell_count(); // above any possible r value
            for (int v = 0; v < 6; ++v) {
                if (g.degree[v] != 3)
                    continue;
                std::vector<int> non_neighbours;
                for (int w = 0; w < 6; ++w) {
                    if (w == v)
                        continue;
                    const bool adjacent =
                        std::any_of(g.edges.begin(), g.edges.end(), [&](const AuxGraph::Edge & e) {
                            return (e.u == std::min(v, w) && e.v == std::max(v, w));
                        });
                    if (!adjacent)
                        non_neighbours.push_back(w);
                }
                const std::vector<int> tri{v, non_neighbours[0], non_neighbours[1]};
                std::vector<int> sorted_tri = tri;
                std::sort(sorted_tri.begin(), sorted_tri.end());
                const int r = lines.shared_count(sorted_tri);
                ok = ok && r >= q + 3 * s - 24;
                if (r < worst) {
                    worst = r;
                    worst_rows.clear();
                    for (int x : sorted_tri)
                        worst_rows += (worst_rows.empty() ? "" : ",") + std::to_string(x + 1);
                }
            }
        }
        ClaimResult c{"degree-three-triple-floor", applicable, applicable && ok, {}};
        if (applicable)
            c.details = {num("min_r", worst), {"rows", worst_rows},
                         num("floor", q + 3 * s - 24)};
        add(std::move(c));
    }

    return report;
}

} // namespace achrolab

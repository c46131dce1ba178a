#pragma once

#include "achrolab/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace achrolab {

/// Row-sharing graph of a proper matrix: one vertex per row (0-based), an
/// edge {i,k} of weight r(i,k) whenever some frequency-2 colour occupies a
/// cell in row i and a cell in row k.
struct AuxGraph {
    struct Edge {
        int u = 0, v = 0; ///< u < v
        int weight = 0;   ///< r(u,v) >= 1
    };
    enum class ComponentKind { Isolated, Path, Cycle, Other };
    struct Component {
        std::vector<int> vertices; ///< sorted
        ComponentKind kind = ComponentKind::Isolated;
    };

    int order = 0;
    std::vector<Edge> edges; ///< lexicographic by (u,v)
    std::vector<int> degree;
    int max_degree = 0;
    std::vector<Component> components; ///< by smallest vertex
};

const char * to_string(AuxGraph::ComponentKind kind);

/// Builds the row-sharing graph. Throws std::invalid_argument unless the
/// matrix is proper.
AuxGraph build_aux_graph(const ColourMatrix & m);

/// One structural predicate evaluated on a 6 x q member matrix.
struct ClaimResult {
    std::string id;
    bool applicable = false; ///< false: the claim's own precondition failed
    bool holds = false;      ///< meaningful only when applicable
    /// Witness values in a fixed per-claim order; lexicographic where a claim
    /// quantifies over several placements.
    std::vector<std::pair<std::string, std::string>> details;
};

struct DiagnosticsReport {
    int q = 0;
    int surplus = 0; ///< |C| - 2q
    AuxGraph aux;
    std::vector<ClaimResult> claims;

    bool all_applicable_hold() const;
};

/// Evaluates the structural predicate suite that every proper complete
/// 6 x q matrix with 2q+s colours, s in [1,7], q >= 7, must satisfy. A
/// "holds = false" entry on such a matrix indicates an implementation bug,
/// not a property of the input. Throws std::invalid_argument when the
/// preconditions (6 rows, membership, q >= 7, s in [1,7]) fail.
DiagnosticsReport claim_suite(const ColourMatrix & m);

} // namespace achrolab

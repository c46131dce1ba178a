#pragma once

#include "achrolab/matrix.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace achrolab {

struct SearchConfig {
    int p = 1;
    int q = 1;
    int k = 1; ///< target colour count
    /// Maximum nodes before giving up; 0 = unlimited (exact search only, the
    /// heuristic requires a positive budget).
    std::uint64_t node_budget = 0;
    std::uint64_t seed = 0; ///< drives the heuristic's randomness
    bool symmetry_breaking = true;
};

enum class SearchOutcome { Found, Exhausted, BudgetExhausted };

const char * to_string(SearchOutcome outcome);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    /// Present exactly when outcome == Found; a proper complete matrix with
    /// exactly k colours.
    std::optional<ColourMatrix> witness;
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> elapsed{0};
    std::uint64_t restarts = 0; ///< heuristic only
};

/// Decides whether a proper complete colouring of K_p [] K_q with exactly k
/// colours exists, by depth-first search over colour matrices in row-major
/// cell order. Colour-permutation symmetry is removed by introducing colours
/// in id order; with symmetry_breaking on, row/column symmetry is removed at
/// the root (first row = identity palette prefix, first-column ids strictly
/// increasing). Exhaustive within practical time for p*q <= 16.
/// Deterministic: a fixed config always yields the same node count and
/// witness, independent of the worker count (ACHROLAB_THREADS).
/// Requires 1 <= p <= q and k >= 1.
SearchResult exists_colouring(const SearchConfig & config);

/// Why value+1 colours are impossible.
struct AchromaticCertificate {
    enum class Kind {
        Exhausted,         ///< search ruled value+1 out; nodes_expanded recorded
        UpperBoundFormula, ///< value+1 already exceeds general_upper_bound(p,q)
    };
    Kind kind = Kind::UpperBoundFormula;
    std::uint64_t nodes_expanded = 0;
};

struct AchromaticResult {
    int value = 0;
    ColourMatrix witness;
    AchromaticCertificate certificate;
    std::uint64_t total_nodes = 0; ///< across all decision runs
};

/// Exact achromatic number of K_p [] K_q, limited to p*q <= 16 (throws
/// std::invalid_argument beyond that). Feasible colour counts form the
/// interval [chromatic number, achromatic number], so the maximum is located
/// by binary search over [max(p,q), general_upper_bound(p,q)]; the lower end
/// is verified, never assumed.
AchromaticResult achromatic_number(int p, int q);

/// Randomised-restart local search for a proper complete colouring with
/// exactly k colours: walks over proper matrices, recolouring one cell at a
/// time towards fewer uncovered colour pairs. Returns Found only with a
/// verified witness and never claims exhaustion. Deterministic for a fixed
/// seed, independent of the worker count. Requires node_budget > 0.
SearchResult heuristic_search(const SearchConfig & config);

/// Worker cap from ACHROLAB_THREADS (>= 1; unset or invalid = 1).
int worker_count();

} // namespace achrolab

#include "achrolab/search.hpp"

#include "achrolab/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace achrolab {

const char * to_string(SearchOutcome outcome) {
    switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

int worker_count() {
    const char * env = std::getenv("ACHROLAB_THREADS");
    if (!env)
        return 1;
    const int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

namespace {

ColourMatrix grid_to_matrix(int p, int q, const std::vector<ColourId> & grid, int k) {
    std::vector<std::string> palette;
    palette.reserve(k);
    for (int c = 1; c <= k; ++c)
        palette.push_back(std::to_string(c));
    return ColourMatrix(p, q, grid, std::move(palette));
}

// Depth-first generator of proper matrices in row-major cell order. Colours
// are introduced in id order (used colours first, then a single fresh id),
// which kills colour-permutation symmetry outright; the optional root
// constraint additionally pins the first row to 0..q-1 (automatic) and keeps
// first-column ids strictly increasing, which burns the row and column
// symmetries. Pair coverage is tracked incrementally so the remaining-cell
// bound can prune: a cell placed at (i,j) can make at most i+j <= p+q-2 new
// pairs good.
struct ExactSearcher {
    int p, q, k;
    bool symmetry;
    std::uint64_t budget; // 0 = unlimited
    int need_pairs;

    std::vector<ColourId> grid;
    std::vector<std::uint64_t> row_mask, col_mask;
    std::vector<std::uint16_t> pair_count; // triangular over colour ids
    int covered = 0;
    int used = 0;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::optional<std::vector<ColourId>> found;

    ExactSearcher(int p_, int q_, int k_, bool sym, std::uint64_t budget_)
        : p(p_), q(q_), k(k_), symmetry(sym), budget(budget_),
          need_pairs(k_ * (k_ - 1) / 2), grid(static_cast<std::size_t>(p_) * q_, 0),
          row_mask(p_, 0), col_mask(q_, 0),
          pair_count(static_cast<std::size_t>(k_) * (k_ - 1) / 2, 0) {}

    std::size_t pair_index(ColourId a, ColourId b) const {
        if (a > b)
            std::swap(a, b);
        return static_cast<std::size_t>(a) * (2 * k - a - 1) / 2 + (b - a - 1);
    }

    // +1/-1 on every pair the cell (i,j) realises with earlier cells
    int bump(int i, int j, ColourId c, int delta) {
        int newly = 0;
        const std::size_t base = static_cast<std::size_t>(i) * q;
        for (int j2 = 0; j2 < j; ++j2) {
            const ColourId o = grid[base + j2];
            auto & n = pair_count[pair_index(c, o)];
            if (delta > 0) {
                if (n++ == 0)
                    ++newly;
            } else if (--n == 0)
                --newly;
        }
        for (int i2 = 0; i2 < i; ++i2) {
            const ColourId o = grid[static_cast<std::size_t>(i2) * q + j];
            auto & n = pair_count[pair_index(c, o)];
            if (delta > 0) {
                if (n++ == 0)
                    ++newly;
            } else if (--n == 0)
                --newly;
        }
        return newly;
    }

    bool dfs(int cell) {
        if (cell == p * q) {
            if (used == k && covered == need_pairs) {
                found = grid;
                return true;
            }
            return false;
        }
        const int i = cell / q, j = cell % q;
        const int remaining_after = p * q - cell - 1;

        const int limit = used < k ? used + 1 : used; // fresh colour = id `used`
        for (ColourId c = 0; c < static_cast<ColourId>(limit); ++c) {
            const std::uint64_t bit = 1ull << c;
            if ((row_mask[i] | col_mask[j]) & bit)
                continue;
            if (symmetry && j == 0 && i > 0 && c <= grid[static_cast<std::size_t>(i - 1) * q])
                continue;

            if (budget && nodes >= budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;

            const bool fresh = c == static_cast<ColourId>(used);
            grid[static_cast<std::size_t>(i) * q + j] = c;
            row_mask[i] |= bit;
            col_mask[j] |= bit;
            used += fresh;
            covered += bump(i, j, c, +1);

            const bool viable =
                k - used <= remaining_after &&
                covered + static_cast<long long>(remaining_after) * (p + q - 2) >= need_pairs;
            if (viable && dfs(cell + 1))
                return true;

            covered += bump(i, j, c, -1);
            used -= fresh;
            row_mask[i] &= ~bit;
            col_mask[j] &= ~bit;
            if (budget_hit)
                return false;
        }
        return false;
    }
};

SearchResult run_sequential(const SearchConfig & cfg) {
    ExactSearcher searcher(cfg.p, cfg.q, cfg.k, cfg.symmetry_breaking, cfg.node_budget);
    searcher.dfs(0);

    SearchResult result;
    result.nodes_expanded = searcher.nodes;
    if (searcher.found) {
        result.outcome = SearchOutcome::Found;
        result.witness = grid_to_matrix(cfg.p, cfg.q, *searcher.found, cfg.k);
    } else {
        result.outcome = searcher.budget_hit ? SearchOutcome::BudgetExhausted
                                             : SearchOutcome::Exhausted;
    }
    return result;
}

// Root split for multi-worker runs: row 0 is forced to 0..q-1, so the first
// real branching happens at cell (1,0). Each candidate there becomes an
// independent subtree; merging in candidate order reproduces the sequential
// node count and witness exactly, whatever the worker count.
SearchResult run_parallel(const SearchConfig & cfg, int workers) {
    const int p = cfg.p, q = cfg.q, k = cfg.k;

    // nodes spent before the split point: the forced row 0, replaying the
    // sequential viability checks so node counts match exactly
    ExactSearcher prefix(p, q, k, cfg.symmetry_breaking, 0);
    for (int j = 0; j < q; ++j) {
        const auto c = static_cast<ColourId>(j);
        prefix.grid[j] = c;
        prefix.row_mask[0] |= 1ull << c;
        prefix.col_mask[j] |= 1ull << c;
        ++prefix.used;
        prefix.covered += prefix.bump(0, j, c, +1);
        ++prefix.nodes;
        const int remaining_after = p * q - j - 1;
        const bool viable =
            k - prefix.used <= remaining_after &&
            prefix.covered + static_cast<long long>(remaining_after) * (p + q - 2) >=
                prefix.need_pairs;
        if (!viable) {
            SearchResult pruned;
            pruned.outcome = SearchOutcome::Exhausted;
            pruned.nodes_expanded = prefix.nodes;
            return pruned;
        }
    }

    std::vector<ColourId> candidates; // choices for cell (1,0), canonical order
    const int limit = prefix.used < k ? prefix.used + 1 : prefix.used;
    for (ColourId c = 0; c < static_cast<ColourId>(limit); ++c) {
        if ((prefix.row_mask[1] | prefix.col_mask[0]) & (1ull << c))
            continue;
        if (cfg.symmetry_breaking && c <= prefix.grid[0])
            continue;
        candidates.push_back(c);
    }

    struct BranchOutcome {
        std::uint64_t nodes = 0; ///< up to the branch's own first witness, if any
        std::optional<std::vector<ColourId>> found;
    };
    std::vector<BranchOutcome> outcomes(candidates.size());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= candidates.size())
                return;
            ExactSearcher sub(p, q, k, cfg.symmetry_breaking, 0);
            sub.grid = prefix.grid;
            sub.row_mask = prefix.row_mask;
            sub.col_mask = prefix.col_mask;
            sub.used = prefix.used;
            sub.covered = prefix.covered;
            sub.pair_count = prefix.pair_count;

            const ColourId c = candidates[idx];
            const std::uint64_t bit = 1ull << c;
            const bool fresh = c == static_cast<ColourId>(sub.used);
            sub.grid[static_cast<std::size_t>(1) * q] = c;
            sub.row_mask[1] |= bit;
            sub.col_mask[0] |= bit;
            sub.used += fresh;
            sub.covered += sub.bump(1, 0, c, +1);
            ++sub.nodes;

            const int remaining_after = p * q - q - 1 - 1;
            const bool viable =
                k - sub.used <= remaining_after + 1 &&
                sub.covered + static_cast<long long>(remaining_after + 1) * (p + q - 2) >=
                    sub.need_pairs;
            // remaining_after+1: cells after (1,0) itself
            if (viable)
                sub.dfs(q + 1);
            outcomes[idx].nodes = sub.nodes;
            outcomes[idx].found = sub.found;
        }
    };

    std::vector<std::future<void>> pool;
    for (int w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, work));
    for (auto & f : pool)
        f.get();

    SearchResult result;
    result.nodes_expanded = prefix.nodes;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        result.nodes_expanded += outcomes[idx].nodes;
        if (outcomes[idx].found) {
            result.outcome = SearchOutcome::Found;
            result.witness = grid_to_matrix(p, q, *outcomes[idx].found, k);
            return result;
        }
    }
    result.outcome = SearchOutcome::Exhausted;
    return result;
}

} // namespace

SearchResult exists_colouring(const SearchConfig & cfg) {
    if (cfg.p < 1 || cfg.p > cfg.q)
        throw std::invalid_argument("exists_colouring needs 1 <= p <= q");
    if (cfg.k < 1)
        throw std::invalid_argument("target colour count must be positive");

    const auto start = std::chrono::steady_clock::now();
    SearchResult result;

    // Root feasibility: properness needs at least max(p,q) colours;
    // surjectivity and the excess/count bounds cap the palette from above at
    // the general upper bound.
    if (cfg.k < cfg.q || cfg.k > general_upper_bound(cfg.p, cfg.q)) {
        result.outcome = SearchOutcome::Exhausted;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }
    if (cfg.k > 64)
        throw std::invalid_argument("exact search supports at most 64 colours");

    const int workers = worker_count();
    if (workers > 1 && cfg.node_budget == 0 && cfg.p >= 2)
        result = run_parallel(cfg, workers);
    else
        result = run_sequential(cfg);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

AchromaticResult achromatic_number(int p, int q) {
    if (p < 1 || p > q)
        throw std::invalid_argument("achromatic_number needs 1 <= p <= q");
    if (p * q > 16)
        throw std::invalid_argument("exact achromatic_number is limited to p*q <= 16");

    const auto ub = static_cast<int>(general_upper_bound(p, q));
    std::uint64_t total = 0;

    auto decide = [&](int k) {
        SearchConfig cfg;
        cfg.p = p;
        cfg.q = q;
        cfg.k = k;
        SearchResult r = exists_colouring(cfg);
        total += r.nodes_expanded;
        return r;
    };

    // lower end of the feasibility interval, verified rather than assumed
    SearchResult base = decide(q);
    if (base.outcome != SearchOutcome::Found)
        throw std::logic_error("no proper complete colouring with max(p,q) colours");

    int lo = q;
    int hi = ub;
    std::optional<ColourMatrix> best = base.witness;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        SearchResult r = decide(mid);
        if (r.outcome == SearchOutcome::Found) {
            best = r.witness;
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }

    AchromaticResult out{lo, std::move(*best), {}, 0};
    if (lo == ub) {
        out.certificate.kind = AchromaticCertificate::Kind::UpperBoundFormula;
    } else {
        // pin the certificate to exactly value+1 (binary search may have
        // last rejected some larger k)
        SearchResult next = decide(lo + 1);
        out.certificate.kind = AchromaticCertificate::Kind::Exhausted;
        out.certificate.nodes_expanded = next.nodes_expanded;
    }
    out.total_nodes = total;
    return out;
}

} // namespace achrolab

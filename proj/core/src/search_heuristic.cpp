#include "achrolab/search.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace achrolab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// State of one restart: a proper p x q matrix over exactly k colours, with
// incremental pair-coverage counts. The walk repairs one uncovered colour
// pair per step by recolouring a cell on a line through one of the pair's
// occurrences, WalkSAT style: mostly the best repair, sometimes a random one.
struct Walk {
    int p, q, k;
    std::mt19937_64 rng;

    std::vector<ColourId> grid;          // p*q
    std::vector<int> freq;               // per colour
    std::vector<char> row_has, col_has;  // p*k, q*k presence
    std::vector<std::uint32_t> pair_count; // triangular
    std::vector<int> pair_pos;           // index into uncovered, -1 if covered
    std::vector<int> uncovered;          // pair indices with count 0

    Walk(int p_, int q_, int k_, std::uint64_t seed)
        : p(p_), q(q_), k(k_), rng(seed), grid(static_cast<std::size_t>(p_) * q_, 0),
          freq(k_, 0), row_has(static_cast<std::size_t>(p_) * k_, 0),
          col_has(static_cast<std::size_t>(q_) * k_, 0),
          pair_count(static_cast<std::size_t>(k_) * (k_ - 1) / 2, 0),
          pair_pos(pair_count.size(), -1) {}

    std::size_t pair_index(ColourId a, ColourId b) const {
        if (a > b)
            std::swap(a, b);
        return static_cast<std::size_t>(a) * (2 * k - a - 1) / 2 + (b - a - 1);
    }

    ColourId cell(int i, int j) const { return grid[static_cast<std::size_t>(i) * q + j]; }
    char & row_presence(int i, ColourId c) { return row_has[static_cast<std::size_t>(i) * k + c]; }
    char & col_presence(int j, ColourId c) { return col_has[static_cast<std::size_t>(j) * k + c]; }

    void cover(std::size_t idx) {
        if (pair_pos[idx] < 0)
            return;
        const int at = pair_pos[idx];
        const int last = uncovered.back();
        uncovered[at] = last;
        pair_pos[last] = at;
        uncovered.pop_back();
        pair_pos[idx] = -1;
    }
    void uncover(std::size_t idx) {
        if (pair_pos[idx] >= 0)
            return;
        pair_pos[idx] = static_cast<int>(uncovered.size());
        uncovered.push_back(static_cast<int>(idx));
    }

    // Proper start: a cyclic Latin rectangle over colours 0..q-1 scrambled by
    // random row/column/colour permutations, then k-q singleton colours
    // dropped onto cells outside row 0 (so every base colour keeps its row-0
    // occurrence).
    bool init() {
        std::vector<int> rho(p), sigma(q);
        std::vector<ColourId> pi(q);
        std::iota(rho.begin(), rho.end(), 0);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(rho.begin(), rho.end(), rng);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(pi.begin(), pi.end(), rng);

        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j)
                grid[static_cast<std::size_t>(i) * q + j] = pi[(rho[i] + sigma[j]) % q];
        std::fill(freq.begin(), freq.end(), 0);
        for (ColourId c : grid)
            ++freq[c];

        for (ColourId fresh = static_cast<ColourId>(q); fresh < static_cast<ColourId>(k);
             ++fresh) {
            bool placed = false;
            for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                const int i = 1 + static_cast<int>(rng() % (p - 1));
                const int j = static_cast<int>(rng() % q);
                ColourId & slot = grid[static_cast<std::size_t>(i) * q + j];
                if (freq[slot] >= 2) {
                    --freq[slot];
                    slot = fresh;
                    ++freq[fresh];
                    placed = true;
                }
            }
            for (int i = 1; i < p && !placed; ++i)
                for (int j = 0; j < q && !placed; ++j) {
                    ColourId & slot = grid[static_cast<std::size_t>(i) * q + j];
                    if (freq[slot] >= 2) {
                        --freq[slot];
                        slot = fresh;
                        ++freq[fresh];
                        placed = true;
                    }
                }
            if (!placed)
                return false;
        }

        std::fill(row_has.begin(), row_has.end(), 0);
        std::fill(col_has.begin(), col_has.end(), 0);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                row_presence(i, cell(i, j)) = 1;
                col_presence(j, cell(i, j)) = 1;
            }

        std::fill(pair_count.begin(), pair_count.end(), 0);
        std::fill(pair_pos.begin(), pair_pos.end(), -1);
        uncovered.clear();
        for (int i = 0; i < p; ++i)
            for (int j1 = 0; j1 < q; ++j1)
                for (int j2 = j1 + 1; j2 < q; ++j2)
                    ++pair_count[pair_index(cell(i, j1), cell(i, j2))];
        for (int j = 0; j < q; ++j)
            for (int i1 = 0; i1 < p; ++i1)
                for (int i2 = i1 + 1; i2 < p; ++i2)
                    if (cell(i1, j) != cell(i2, j))
                        ++pair_count[pair_index(cell(i1, j), cell(i2, j))];
        for (std::size_t idx = 0; idx < pair_count.size(); ++idx)
            if (pair_count[idx] == 0)
                uncover(idx);
        return true;
    }

    bool move_valid(int i, int j, ColourId to) const {
        const ColourId from = grid[static_cast<std::size_t>(i) * q + j];
        return to != from && freq[from] >= 2 &&
               !row_has[static_cast<std::size_t>(i) * k + to] &&
               !col_has[static_cast<std::size_t>(j) * k + to];
    }

    // Change in the uncovered-pair count if cell (i,j) is recoloured.
    int delta(int i, int j, ColourId to) const {
        const ColourId from = cell(i, j);
        int d = 0;
        auto scan = [&](ColourId other, int mult) {
            const auto down = pair_count[pair_index(from, other)];
            if (down == static_cast<std::uint32_t>(mult))
                ++d;
            if (pair_count[pair_index(to, other)] == 0)
                --d;
        };
        // multiplicities: a colour can see the cell from its row and its
        // column at once, and both co-occurrences vanish together
        for (int j2 = 0; j2 < q; ++j2) {
            if (j2 == j)
                continue;
            const ColourId o = cell(i, j2);
            int mult = 1;
            for (int i2 = 0; i2 < p; ++i2)
                if (i2 != i && cell(i2, j) == o)
                    mult = 2;
            scan(o, mult);
        }
        for (int i2 = 0; i2 < p; ++i2) {
            if (i2 == i)
                continue;
            const ColourId o = cell(i2, j);
            bool counted = false;
            for (int j2 = 0; j2 < q; ++j2)
                if (j2 != j && cell(i, j2) == o)
                    counted = true; // already handled with mult 2 above
            if (!counted)
                scan(o, 1);
        }
        return d;
    }

    void apply(int i, int j, ColourId to) {
        const ColourId from = cell(i, j);
        // every co-line cell pair through (i,j) flips from (from,o) to (to,o);
        // a colour seen from both the row and the column flips twice, once
        // per vanished cell pair
        auto shift = [&](ColourId other) {
            const std::size_t down = pair_index(from, other);
            if (--pair_count[down] == 0)
                uncover(down);
            const std::size_t up = pair_index(to, other);
            if (pair_count[up]++ == 0)
                cover(up);
        };
        for (int j2 = 0; j2 < q; ++j2)
            if (j2 != j)
                shift(cell(i, j2));
        for (int i2 = 0; i2 < p; ++i2)
            if (i2 != i)
                shift(cell(i2, j));
        row_presence(i, from) = 0;
        col_presence(j, from) = 0;
        grid[static_cast<std::size_t>(i) * q + j] = to;
        row_presence(i, to) = 1;
        col_presence(j, to) = 1;
        --freq[from];
        ++freq[to];
    }

    ColourMatrix to_matrix() const {
        std::vector<std::string> palette;
        for (int c = 1; c <= k; ++c)
            palette.push_back(std::to_string(c));
        return ColourMatrix(p, q, grid, std::move(palette));
    }
};

struct Candidate {
    int i, j;
    ColourId to;
};

struct RestartOutcome {
    std::uint64_t steps = 0; ///< nodes consumed, including the init node
    bool found = false;
    std::uint64_t found_step = 0; ///< node count at the moment of success
    std::optional<ColourMatrix> witness;
};

// One complete restart, a pure function of (config, restart index): the
// trajectory never depends on the global budget, so restarts can be replayed
// or run in parallel and merged without changing the reported result.
RestartOutcome run_restart(const SearchConfig & cfg, std::uint64_t restart,
                           std::uint64_t max_steps) {
    constexpr int kNoisePercent = 15;

    RestartOutcome out;
    Walk walk(cfg.p, cfg.q, cfg.k, splitmix64(cfg.seed ^ splitmix64(restart)));

    out.steps = 1; // the init itself
    if (!walk.init())
        return out;
    if (walk.uncovered.empty()) {
        out.found = true;
        out.found_step = out.steps;
        out.witness = walk.to_matrix();
        return out;
    }

    std::vector<Candidate> candidates;
    std::vector<int> best_ties;
    while (out.steps < max_steps) {
        ++out.steps;

        const int pick = static_cast<int>(walk.rng() % walk.uncovered.size());
        const std::size_t pair_idx = static_cast<std::size_t>(walk.uncovered[pick]);
        // invert the triangular index
        ColourId a = 0;
        {
            std::size_t rest = pair_idx;
            while (rest >= static_cast<std::size_t>(walk.k - 1 - a)) {
                rest -= walk.k - 1 - a;
                ++a;
            }
            const auto b = static_cast<ColourId>(a + 1 + rest);
            candidates.clear();
            auto collect = [&](ColourId occupant, ColourId paint) {
                for (int i = 0; i < walk.p; ++i)
                    for (int j = 0; j < walk.q; ++j) {
                        if (walk.cell(i, j) != occupant)
                            continue;
                        for (int j2 = 0; j2 < walk.q; ++j2)
                            if (j2 != j && walk.move_valid(i, j2, paint))
                                candidates.push_back({i, j2, paint});
                        for (int i2 = 0; i2 < walk.p; ++i2)
                            if (i2 != i && walk.move_valid(i2, j, paint))
                                candidates.push_back({i2, j, paint});
                    }
            };
            collect(a, b);
            collect(b, a);
        }

        if (candidates.empty()) {
            // fully blocked pair: nudge any recolourable cell to keep moving
            bool nudged = false;
            for (int attempt = 0; attempt < 32 && !nudged; ++attempt) {
                const int i = static_cast<int>(walk.rng() % walk.p);
                const int j = static_cast<int>(walk.rng() % walk.q);
                const auto to = static_cast<ColourId>(walk.rng() % walk.k);
                if (walk.move_valid(i, j, to)) {
                    walk.apply(i, j, to);
                    nudged = true;
                }
            }
            if (!nudged)
                break; // frozen state, give the restart up
        } else if (walk.rng() % 100 < kNoisePercent) {
            const auto & c = candidates[walk.rng() % candidates.size()];
            walk.apply(c.i, c.j, c.to);
        } else {
            int best_delta = std::numeric_limits<int>::max();
            int best_freq = std::numeric_limits<int>::max();
            best_ties.clear();
            for (std::size_t t = 0; t < candidates.size(); ++t) {
                const auto & c = candidates[t];
                const int d = walk.delta(c.i, c.j, c.to);
                const int f = walk.freq[c.to];
                if (d < best_delta || (d == best_delta && f < best_freq)) {
                    best_delta = d;
                    best_freq = f;
                    best_ties.clear();
                }
                if (d == best_delta && f == best_freq)
                    best_ties.push_back(static_cast<int>(t));
            }
            const auto & c = candidates[best_ties[walk.rng() % best_ties.size()]];
            walk.apply(c.i, c.j, c.to);
        }

        if (walk.uncovered.empty()) {
            out.found = true;
            out.found_step = out.steps;
            out.witness = walk.to_matrix();
            return out;
        }
    }
    return out;
}

std::uint64_t restart_step_cap(const SearchConfig & cfg) {
    return 200ull * cfg.p * cfg.q + 100ull * cfg.k;
}

} // namespace

SearchResult heuristic_search(const SearchConfig & cfg) {
    if (cfg.p < 1 || cfg.p > cfg.q)
        throw std::invalid_argument("heuristic_search needs 1 <= p <= q");
    if (cfg.k < 1)
        throw std::invalid_argument("target colour count must be positive");
    if (cfg.node_budget == 0)
        throw std::invalid_argument("heuristic_search needs a positive node budget");

    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.outcome = SearchOutcome::BudgetExhausted;

    // targets no start state can even represent: burn no budget
    if (cfg.k < cfg.q || cfg.k > cfg.p * cfg.q) {
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    const std::uint64_t cap = restart_step_cap(cfg);
    const int workers = worker_count();
    std::uint64_t consumed = 0;
    std::uint64_t restart = 0;

    while (consumed < cfg.node_budget) {
        const int wave = workers > 1 ? workers : 1;
        std::vector<RestartOutcome> outcomes(wave);
        if (wave == 1) {
            outcomes[0] = run_restart(cfg, restart, cap);
        } else {
            std::vector<std::future<RestartOutcome>> batch;
            batch.reserve(wave);
            for (int w = 0; w < wave; ++w)
                batch.push_back(std::async(std::launch::async, run_restart, cfg,
                                           restart + w, cap));
            for (int w = 0; w < wave; ++w)
                outcomes[w] = batch[w].get();
        }
        for (int w = 0; w < wave; ++w) {
            const RestartOutcome & o = outcomes[w];
            const std::uint64_t allowed = cfg.node_budget - consumed;
            if (o.found && o.found_step <= allowed) {
                result.outcome = SearchOutcome::Found;
                result.witness = o.witness;
                result.nodes_expanded = consumed + o.found_step;
                result.restarts = restart + w + 1;
                result.elapsed = std::chrono::steady_clock::now() - start;
                return result;
            }
            if (o.steps >= allowed) {
                result.nodes_expanded = cfg.node_budget;
                result.restarts = restart + w + 1;
                result.elapsed = std::chrono::steady_clock::now() - start;
                return result;
            }
            consumed += o.steps;
        }
        restart += wave;
    }

    result.nodes_expanded = consumed;
    result.restarts = restart;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace achrolab

#include "achrolab/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace achrolab {

namespace {

[[noreturn]] void fail(const std::string & msg) { throw std::invalid_argument(msg); }

} // namespace

ColourMatrix ColourMatrix::from_tokens(const std::vector<std::vector<std::string>> & rows) {
    if (rows.empty() || rows.front().empty())
        fail("matrix must have at least one row and one column");
    const int p = static_cast<int>(rows.size());
    const int q = static_cast<int>(rows.front().size());

    std::vector<ColourId> entries;
    entries.reserve(static_cast<std::size_t>(p) * q);
    std::vector<std::string> palette;
    std::unordered_map<std::string, ColourId> ids;

    for (int i = 0; i < p; ++i) {
        if (static_cast<int>(rows[i].size()) != q)
            fail("ragged grid: row " + std::to_string(i + 1) + " has " +
                 std::to_string(rows[i].size()) + " tokens, expected " + std::to_string(q));
        for (const std::string & tok : rows[i]) {
            if (tok.empty())
                fail("empty colour token in row " + std::to_string(i + 1));
            auto [it, inserted] = ids.try_emplace(tok, static_cast<ColourId>(palette.size()));
            if (inserted)
                palette.push_back(tok);
            entries.push_back(it->second);
        }
    }
    return ColourMatrix(p, q, std::move(entries), std::move(palette));
}

ColourMatrix::ColourMatrix(int rows, int cols, std::vector<ColourId> entries,
                           std::vector<std::string> palette)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), palette_(std::move(palette)) {
    if (rows_ < 1 || cols_ < 1)
        fail("matrix must have at least one row and one column");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        fail("entry count does not match matrix shape");
    if (palette_.empty())
        fail("palette must not be empty");

    std::vector<char> seen(palette_.size(), 0);
    for (ColourId c : entries_) {
        if (c >= palette_.size())
            fail("entry id " + std::to_string(c) + " outside palette");
        seen[c] = 1;
    }
    for (std::size_t c = 0; c < palette_.size(); ++c) {
        if (palette_[c].empty())
            fail("empty colour token in palette");
        if (!seen[c])
            fail("palette colour '" + palette_[c] + "' does not occur in the matrix");
    }
    std::unordered_map<std::string_view, int> dup;
    for (const std::string & tok : palette_)
        if (++dup[tok] > 1)
            fail("duplicate palette token '" + tok + "'");
}

std::optional<ColourId> ColourMatrix::id_of(std::string_view token) const {
    for (std::size_t c = 0; c < palette_.size(); ++c)
        if (palette_[c] == token)
            return static_cast<ColourId>(c);
    return std::nullopt;
}

namespace {

template <typename T>
void check_bijection(std::span<const T> map, std::size_t n, const char * what) {
    if (map.size() != n)
        fail(std::string(what) + " map has wrong size");
    std::vector<char> hit(n, 0);
    for (T v : map) {
        const auto u = static_cast<std::size_t>(v); // negatives wrap far past n
        if (u >= n || hit[u])
            fail(std::string(what) + " map is not a bijection");
        hit[u] = 1;
    }
}

} // namespace

ColourMatrix ColourMatrix::permuted(std::span<const int> row_map, std::span<const int> col_map,
                                    std::span<const ColourId> colour_map) const {
    check_bijection(row_map, static_cast<std::size_t>(rows_), "row");
    check_bijection(col_map, static_cast<std::size_t>(cols_), "column");
    check_bijection(colour_map, palette_.size(), "colour");

    std::vector<ColourId> out(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i) * cols_ + j] = colour_map[at(row_map[i], col_map[j])];
    return ColourMatrix(rows_, cols_, std::move(out), palette_);
}

bool ColourMatrix::operator==(const ColourMatrix & other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (token_at(i, j) != other.token_at(i, j))
                return false;
    return true;
}

std::optional<LineViolation> properness_violation(const ColourMatrix & m) {
    const int p = m.row_count(), q = m.col_count();
    std::vector<char> seen(m.colour_count());
    for (int i = 0; i < p; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < q; ++j) {
            const ColourId c = m.at(i, j);
            if (seen[c])
                return LineViolation{true, i + 1, c};
            seen[c] = 1;
        }
    }
    for (int j = 0; j < q; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < p; ++i) {
            const ColourId c = m.at(i, j);
            if (seen[c])
                return LineViolation{false, j + 1, c};
            seen[c] = 1;
        }
    }
    return std::nullopt;
}

bool is_proper(const ColourMatrix & m) { return !properness_violation(m).has_value(); }

PairVerdict pair_verdict(const ColourMatrix & m, ColourId a, ColourId b) {
    const auto n = static_cast<ColourId>(m.colour_count());
    if (a >= n || b >= n)
        fail("unknown colour id");
    if (a == b)
        fail("pair_verdict needs two distinct colours");

    PairVerdict v{a, b, false, false};
    const int p = m.row_count(), q = m.col_count();
    for (int i = 0; i < p && !v.row_based; ++i) {
        bool ha = false, hb = false;
        for (int j = 0; j < q; ++j) {
            const ColourId c = m.at(i, j);
            ha |= c == a;
            hb |= c == b;
        }
        v.row_based = ha && hb;
    }
    for (int j = 0; j < q && !v.column_based; ++j) {
        bool ha = false, hb = false;
        for (int i = 0; i < p; ++i) {
            const ColourId c = m.at(i, j);
            ha |= c == a;
            hb |= c == b;
        }
        v.column_based = ha && hb;
    }
    return v;
}

CompletenessReport completeness(const ColourMatrix & m) {
    const int n = m.colour_count();
    const int p = m.row_count(), q = m.col_count();

    // Triangular good-pair table, index (a,b) with a < b. One pass per line
    // marks every pair realised in that line: O(p q^2 + q p^2) insertions
    // instead of scanning the matrix once per colour pair.
    const std::size_t tri = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<char> good(tri, 0);
    auto pair_index = [n](ColourId a, ColourId b) {
        if (a > b)
            std::swap(a, b);
        // cells before row a of the strict upper triangle, then offset
        return static_cast<std::size_t>(a) * (2 * n - a - 1) / 2 + (b - a - 1);
    };

    std::vector<ColourId> line;
    line.reserve(std::max(p, q));
    auto mark_line = [&](const std::vector<ColourId> & cells) {
        for (std::size_t x = 0; x < cells.size(); ++x)
            for (std::size_t y = x + 1; y < cells.size(); ++y)
                if (cells[x] != cells[y])
                    good[pair_index(cells[x], cells[y])] = 1;
    };

    for (int i = 0; i < p; ++i) {
        line.clear();
        for (int j = 0; j < q; ++j)
            line.push_back(m.at(i, j));
        mark_line(line);
    }
    for (int j = 0; j < q; ++j) {
        line.clear();
        for (int i = 0; i < p; ++i)
            line.push_back(m.at(i, j));
        mark_line(line);
    }

    CompletenessReport report;
    for (ColourId a = 0; a + 1 < static_cast<ColourId>(n); ++a)
        for (ColourId b = a + 1; b < static_cast<ColourId>(n); ++b)
            if (!good[pair_index(a, b)])
                report.bad_pairs.emplace_back(a, b);
    report.complete = report.bad_pairs.empty();
    return report;
}

bool is_complete(const ColourMatrix & m) { return completeness(m).complete; }

bool is_member(const ColourMatrix & m) { return is_proper(m) && is_complete(m); }

} // namespace achrolab

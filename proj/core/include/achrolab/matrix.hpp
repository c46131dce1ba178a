#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace achrolab {

/// Dense index into a matrix palette.
using ColourId = std::uint32_t;

/// A p x q grid of colours over an ordered palette of display tokens.
///
/// This is the matrix form of a vertex colouring of the rook's graph
/// K_p [] K_q: cell (i,j) is the colour of vertex (i,j), and two cells are
/// adjacent exactly when they share a row or a column.
///
/// Instances are immutable values: all derived statistics can be shared
/// across threads without synchronisation. Internally colours are dense
/// 0-based ids; display tokens only matter at the IO boundary. Reported
/// coordinates are 1-based throughout.
class ColourMatrix {
  public:
    /// Builds a matrix from rows of display tokens. The palette is the
    /// distinct tokens in first-appearance (row-major) order.
    /// Throws std::invalid_argument on a ragged grid or an empty token.
    static ColourMatrix from_tokens(const std::vector<std::vector<std::string>> & rows);

    /// Direct construction from dense ids. Every id must be < palette size,
    /// every palette entry must occur in the grid, and tokens must be
    /// distinct and non-empty.
    ColourMatrix(int rows, int cols, std::vector<ColourId> entries,
                 std::vector<std::string> palette);

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }
    int cell_count() const { return rows_ * cols_; }
    int colour_count() const { return static_cast<int>(palette_.size()); }

    ColourId at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::string & token_of(ColourId c) const { return palette_[c]; }
    const std::string & token_at(int i, int j) const { return palette_[at(i, j)]; }
    const std::vector<std::string> & palette() const { return palette_; }
    std::span<const ColourId> entries() const { return entries_; }

    /// Looks a display token up in the palette.
    std::optional<ColourId> id_of(std::string_view token) const;

    /// Returns the matrix with rows mapped through `row_map`, columns through
    /// `col_map` and colours recoloured through `colour_map`: the new cell
    /// (i,j) holds colour_map(old cell (row_map[i], col_map[j])) over the same
    /// palette. Each map must be a bijection of the respective index set;
    /// throws std::invalid_argument otherwise.
    ColourMatrix permuted(std::span<const int> row_map, std::span<const int> col_map,
                          std::span<const ColourId> colour_map) const;

    /// Display equality: same shape and the same token in every cell.
    /// (Internal id assignment and palette order are not part of the value.)
    bool operator==(const ColourMatrix & other) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ColourId> entries_;
    std::vector<std::string> palette_;
};

/// A repeated colour inside one line of the matrix.
struct LineViolation {
    bool in_row = true; ///< false: in a column
    int line = 0;       ///< 1-based row or column index
    ColourId colour = 0;
};

/// First repeated colour in any line, scanning rows top-down then columns
/// left-to-right; nullopt when the colouring is proper (all lines contain
/// pairwise distinct entries).
std::optional<LineViolation> properness_violation(const ColourMatrix & m);

bool is_proper(const ColourMatrix & m);

/// How an unordered pair of distinct colours is realised on a shared line.
struct PairVerdict {
    ColourId a = 0;
    ColourId b = 0;
    bool row_based = false;
    bool column_based = false;
    bool good() const { return row_based || column_based; }
};

/// Checks whether some row (column) of the matrix contains both colours.
/// Throws std::invalid_argument when a == b or either id is out of range.
PairVerdict pair_verdict(const ColourMatrix & m, ColourId a, ColourId b);

struct CompletenessReport {
    bool complete = true;
    /// Colour pairs realised on no shared line, each as (a,b) with a < b,
    /// sorted lexicographically. Exhaustive.
    std::vector<std::pair<ColourId, ColourId>> bad_pairs;
};

/// Checks that every pair of distinct palette colours is good, i.e. appears
/// on two cells of a common row or column.
CompletenessReport completeness(const ColourMatrix & m);

bool is_complete(const ColourMatrix & m);

/// Membership in the set of proper complete colour matrices of K_p [] K_q.
bool is_member(const ColourMatrix & m);

} // namespace achrolab

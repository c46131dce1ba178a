#pragma once

#include "achrolab/matrix.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace achrolab {

/// Appearance counts per colour and the induced frequency classes.
///
/// frequency(c) counts the cells coloured c; a colour of frequency l is an
/// l-colour. with_frequency(l) is the class of l-colours, and the *_at_least
/// variants accumulate classes from l upwards.
class FrequencyTable {
  public:
    explicit FrequencyTable(const ColourMatrix & m);

    int frequency(ColourId c) const { return freq_[c]; }
    const std::vector<int> & frequencies() const { return freq_; }

    /// Minimum colour frequency, the frequency of the matrix itself.
    int min_frequency() const { return min_freq_; }
    int max_frequency() const { return max_freq_; }

    const std::vector<ColourId> & with_frequency(int l) const;         // C_l
    int count_with_frequency(int l) const;                             // c_l
    std::vector<ColourId> with_frequency_at_least(int l) const;        // C_{l+}
    int count_with_frequency_at_least(int l) const;                    // c_{l+}

  private:
    std::vector<int> freq_;
    std::vector<std::vector<ColourId>> classes_; // by frequency, classes_[l] = C_l
    int min_freq_ = 0;
    int max_freq_ = 0;
};

/// Row/column colour sets of a matrix together with the derived shared-colour
/// statistics. All sets are sorted id vectors; all row/column arguments are
/// 0-based. Built eagerly from an immutable matrix, so a const instance is
/// freely shareable across threads; the on-demand queries allocate their
/// result and keep no state.
class RowColumnStats {
  public:
    RowColumnStats(const ColourMatrix & m, const FrequencyTable & freq);

    int row_count() const { return static_cast<int>(row_sets_.size()); }
    int col_count() const { return static_cast<int>(col_sets_.size()); }

    const std::vector<ColourId> & row_colours(int i) const { return row_sets_[i]; }
    const std::vector<ColourId> & column_colours(int j) const { return col_sets_[j]; }

    std::vector<ColourId> row_colours_with_freq(int i, int l) const;         // ro_l(i)
    std::vector<ColourId> row_colours_with_min_freq(int i, int l) const;     // ro_{l+}(i)
    std::vector<ColourId> column_colours_with_freq(int j, int l) const;      // co_l(j)
    std::vector<ColourId> column_colours_with_min_freq(int j, int l) const;  // co_{l+}(j)

    /// Rows whose colour set contains c.
    const std::vector<int> & rows_of(ColourId c) const { return rows_of_[c]; }

    /// Colours of frequency exactly |rows| appearing in every listed row.
    /// Throws std::invalid_argument when fewer than two rows are given.
    std::vector<ColourId> shared_colours(std::span<const int> rows) const;
    std::vector<ColourId> shared_colours(std::initializer_list<int> rows) const;
    int shared_count(std::span<const int> rows) const;                       // r(A)
    int shared_count(std::initializer_list<int> rows) const;

    /// Colours of frequency >= 3 appearing in both rows.
    std::vector<ColourId> shared_high_freq(int i, int k) const;              // ro_{3+}(i,k)
    int shared_high_freq_count(int i, int k) const;

    /// Colours of frequency 2 appearing in both columns.
    std::vector<ColourId> column_shared_pairs(int m, int n) const;           // co_2 of both
    int column_shared_pair_count(int m, int n) const;

    /// Union of shared_colours(A) over all A within `rows` of size >= 2.
    /// Requires 3 <= |rows| <= p - 2; throws std::invalid_argument otherwise.
    std::vector<ColourId> shared_union(std::span<const int> rows) const;     // ro*(B)
    std::vector<ColourId> shared_union(std::initializer_list<int> rows) const;
    int shared_union_count(std::span<const int> rows) const;                 // r*(B)
    int shared_union_count(std::initializer_list<int> rows) const;

    /// Columns containing at least one of the given colours. Throws on an
    /// empty colour set.
    std::vector<int> covered_columns(std::span<const ColourId> colours) const; // Cov(A)
    std::vector<int> covered_columns(std::initializer_list<ColourId> colours) const;
    int covered_count(std::span<const ColourId> colours) const;               // cov(A)
    int covered_count(std::initializer_list<ColourId> colours) const;

  private:
    std::vector<std::vector<ColourId>> row_sets_;
    std::vector<std::vector<ColourId>> col_sets_;
    std::vector<std::vector<int>> rows_of_;
    std::vector<int> freq_; // copy of the frequency vector, self-contained
};

/// Everything derivable from one matrix in a single bundle.
struct MatrixStats {
    FrequencyTable freq;
    RowColumnStats lines;

    explicit MatrixStats(const ColourMatrix & m) : freq(m), lines(m, freq) {}
};

} // namespace achrolab

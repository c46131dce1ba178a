#include "achrolab/stats.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace achrolab {

FrequencyTable::FrequencyTable(const ColourMatrix & m) : freq_(m.colour_count(), 0) {
    for (ColourId c : m.entries())
        ++freq_[c];
    max_freq_ = *std::max_element(freq_.begin(), freq_.end());
    min_freq_ = *std::min_element(freq_.begin(), freq_.end());
    classes_.resize(max_freq_ + 1);
    for (ColourId c = 0; c < freq_.size(); ++c)
        classes_[freq_[c]].push_back(c); // ids ascend, classes stay sorted
}

const std::vector<ColourId> & FrequencyTable::with_frequency(int l) const {
    static const std::vector<ColourId> empty;
    if (l < 0 || l > max_freq_)
        return empty;
    return classes_[l];
}

int FrequencyTable::count_with_frequency(int l) const {
    return static_cast<int>(with_frequency(l).size());
}

std::vector<ColourId> FrequencyTable::with_frequency_at_least(int l) const {
    std::vector<ColourId> out;
    for (ColourId c = 0; c < freq_.size(); ++c)
        if (freq_[c] >= l)
            out.push_back(c);
    return out;
}

int FrequencyTable::count_with_frequency_at_least(int l) const {
    int n = 0;
    for (int f : freq_)
        n += f >= l;
    return n;
}

RowColumnStats::RowColumnStats(const ColourMatrix & m, const FrequencyTable & freq)
    : row_sets_(m.row_count()), col_sets_(m.col_count()), rows_of_(m.colour_count()),
      freq_(freq.frequencies()) {
    const int p = m.row_count(), q = m.col_count();
    for (int i = 0; i < p; ++i) {
        auto & set = row_sets_[i];
        for (int j = 0; j < q; ++j)
            set.push_back(m.at(i, j));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    for (int j = 0; j < q; ++j) {
        auto & set = col_sets_[j];
        for (int i = 0; i < p; ++i)
            set.push_back(m.at(i, j));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    for (int i = 0; i < p; ++i)
        for (ColourId c : row_sets_[i])
            rows_of_[c].push_back(i);
}

namespace {

std::vector<ColourId> filter_by_freq(const std::vector<ColourId> & set,
                                     const std::vector<int> & freq, int l, bool at_least) {
    std::vector<ColourId> out;
    for (ColourId c : set)
        if (at_least ? freq[c] >= l : freq[c] == l)
            out.push_back(c);
    return out;
}

} // namespace

std::vector<ColourId> RowColumnStats::row_colours_with_freq(int i, int l) const {
    return filter_by_freq(row_sets_[i], freq_, l, false);
}

std::vector<ColourId> RowColumnStats::row_colours_with_min_freq(int i, int l) const {
    return filter_by_freq(row_sets_[i], freq_, l, true);
}

std::vector<ColourId> RowColumnStats::column_colours_with_freq(int j, int l) const {
    return filter_by_freq(col_sets_[j], freq_, l, false);
}

std::vector<ColourId> RowColumnStats::column_colours_with_min_freq(int j, int l) const {
    return filter_by_freq(col_sets_[j], freq_, l, true);
}

std::vector<ColourId> RowColumnStats::shared_colours(std::span<const int> rows) const {
    if (rows.size() < 2)
        throw std::invalid_argument("shared_colours needs at least two rows");
    const int l = static_cast<int>(rows.size());
    std::vector<ColourId> acc = filter_by_freq(row_sets_[rows[0]], freq_, l, false);
    std::vector<ColourId> tmp;
    for (std::size_t t = 1; t < rows.size() && !acc.empty(); ++t) {
        tmp.clear();
        std::set_intersection(acc.begin(), acc.end(), row_sets_[rows[t]].begin(),
                              row_sets_[rows[t]].end(), std::back_inserter(tmp));
        acc.swap(tmp);
    }
    return acc;
}

std::vector<ColourId> RowColumnStats::shared_colours(std::initializer_list<int> rows) const {
    return shared_colours(std::span<const int>(rows.begin(), rows.size()));
}

int RowColumnStats::shared_count(std::span<const int> rows) const {
    return static_cast<int>(shared_colours(rows).size());
}

int RowColumnStats::shared_count(std::initializer_list<int> rows) const {
    return static_cast<int>(shared_colours(rows).size());
}

std::vector<ColourId> RowColumnStats::shared_high_freq(int i, int k) const {
    std::vector<ColourId> out;
    std::set_intersection(row_sets_[i].begin(), row_sets_[i].end(), row_sets_[k].begin(),
                          row_sets_[k].end(), std::back_inserter(out));
    std::erase_if(out, [&](ColourId c) { return freq_[c] < 3; });
    return out;
}

int RowColumnStats::shared_high_freq_count(int i, int k) const {
    return static_cast<int>(shared_high_freq(i, k).size());
}

std::vector<ColourId> RowColumnStats::column_shared_pairs(int m, int n) const {
    std::vector<ColourId> out;
    std::set_intersection(col_sets_[m].begin(), col_sets_[m].end(), col_sets_[n].begin(),
                          col_sets_[n].end(), std::back_inserter(out));
    std::erase_if(out, [&](ColourId c) { return freq_[c] != 2; });
    return out;
}

int RowColumnStats::column_shared_pair_count(int m, int n) const {
    return static_cast<int>(column_shared_pairs(m, n).size());
}

std::vector<ColourId> RowColumnStats::shared_union(std::span<const int> rows) const {
    const int b = static_cast<int>(rows.size());
    const int p = row_count();
    if (b < 3 || b > p - 2)
        throw std::invalid_argument("shared_union needs between 3 and p-2 rows");

    std::vector<char> in(freq_.size(), 0);
    std::vector<int> subset;
    for (unsigned mask = 1; mask < (1u << b); ++mask) {
        if (std::popcount(mask) < 2)
            continue;
        subset.clear();
        for (int t = 0; t < b; ++t)
            if (mask & (1u << t))
                subset.push_back(rows[t]);
        for (ColourId c : shared_colours(subset))
            in[c] = 1;
    }
    std::vector<ColourId> out;
    for (ColourId c = 0; c < in.size(); ++c)
        if (in[c])
            out.push_back(c);
    return out;
}

std::vector<ColourId> RowColumnStats::shared_union(std::initializer_list<int> rows) const {
    return shared_union(std::span<const int>(rows.begin(), rows.size()));
}

int RowColumnStats::shared_union_count(std::span<const int> rows) const {
    return static_cast<int>(shared_union(rows).size());
}

int RowColumnStats::shared_union_count(std::initializer_list<int> rows) const {
    return static_cast<int>(shared_union(rows).size());
}

std::vector<int> RowColumnStats::covered_columns(std::span<const ColourId> colours) const {
    if (colours.empty())
        throw std::invalid_argument("covered_columns needs a non-empty colour set");
    std::vector<int> out;
    for (int j = 0; j < col_count(); ++j) {
        bool hit = false;
        for (ColourId c : colours)
            hit = hit || std::binary_search(col_sets_[j].begin(), col_sets_[j].end(), c);
        if (hit)
            out.push_back(j);
    }
    return out;
}

std::vector<int> RowColumnStats::covered_columns(std::initializer_list<ColourId> colours) const {
    return covered_columns(std::span<const ColourId>(colours.begin(), colours.size()));
}

int RowColumnStats::covered_count(std::span<const ColourId> colours) const {
    return static_cast<int>(covered_columns(colours).size());
}

int RowColumnStats::covered_count(std::initializer_list<ColourId> colours) const {
    return static_cast<int>(covered_columns(colours).size());
}

} // namespace achrolab

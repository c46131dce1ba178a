#include "achrolab/constructions.hpp"
#include "achrolab/stats.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

using namespace achrolab;

TEST_CASE("frequencies on the q=7 construction") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const MatrixStats st(m);

    CHECK(st.freq.frequency(*m.id_of("1")) == 2);
    CHECK(st.freq.frequency(*m.id_of("x1")) == 3);
    CHECK(st.freq.min_frequency() == 2);
    CHECK(st.freq.max_frequency() == 3);
    CHECK(st.freq.count_with_frequency(2) == 9);
    CHECK(st.freq.count_with_frequency(3) == 8);
    CHECK(st.freq.count_with_frequency_at_least(2) == 17);
    CHECK(st.freq.count_with_frequency_at_least(3) == 8);
    CHECK(st.freq.with_frequency_at_least(3).size() == 8);

    long long sum = 0;
    for (int c = 0; c < m.colour_count(); ++c)
        sum += st.freq.frequency(static_cast<ColourId>(c));
    CHECK(sum == m.cell_count());
}

TEST_CASE("row and column sets of a proper matrix have full size") {
    for (int q : {7, 9, 13}) {
        const ColourMatrix m = build_odd_q_matrix(q);
        const MatrixStats st(m);
        for (int i = 0; i < m.row_count(); ++i)
            CHECK(static_cast<int>(st.lines.row_colours(i).size()) == q);
        for (int j = 0; j < m.col_count(); ++j)
            CHECK(static_cast<int>(st.lines.column_colours(j).size()) == 6);
    }
}

TEST_CASE("shared colours between rows on the q=7 construction") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const MatrixStats st(m);

    // rows 1 and 4 of the display share exactly the three head colours 1,2,3
    CHECK(st.lines.shared_count({0, 3}) == 3);
    const auto shared = st.lines.shared_colours({0, 3});
    const std::set<std::string> tokens{m.token_of(shared[0]), m.token_of(shared[1]),
                                       m.token_of(shared[2])};
    CHECK(tokens == std::set<std::string>{"1", "2", "3"});

    CHECK(st.lines.shared_count({1, 4}) == 3);
    CHECK(st.lines.shared_count({2, 5}) == 3);
    CHECK(st.lines.shared_count({0, 1}) == 0);

    // colour 1 occupies two columns
    CHECK(st.lines.covered_count({*m.id_of("1")}) == 2);
    CHECK(st.lines.covered_count({*m.id_of("x1")}) == 3);
}

TEST_CASE("query preconditions") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const MatrixStats st(m);
    CHECK_THROWS_AS(st.lines.shared_colours({0}), std::invalid_argument);
    CHECK_THROWS_AS(st.lines.shared_union({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(st.lines.shared_union({0, 1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(st.lines.covered_columns(std::initializer_list<ColourId>{}),
                    std::invalid_argument);
}

TEST_CASE("shared_colours stays below per-row filtered counts") {
    const ColourMatrix m = build_odd_q_matrix(9);
    const MatrixStats st(m);
    for (int i = 0; i < 6; ++i)
        for (int k = i + 1; k < 6; ++k) {
            const int r = st.lines.shared_count({i, k});
            const int ri = static_cast<int>(st.lines.row_colours_with_freq(i, 2).size());
            const int rk = static_cast<int>(st.lines.row_colours_with_freq(k, 2).size());
            CHECK(r <= std::min(ri, rk));
        }
}

TEST_CASE("shared_union contains every subset's shared set") {
    const ColourMatrix m = build_odd_q_matrix(11);
    const MatrixStats st(m);
    const std::vector<int> b{0, 1, 2, 4};
    const auto star = st.lines.shared_union(b);
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) {
            for (ColourId c : st.lines.shared_colours({b[i], b[k]}))
                CHECK(std::binary_search(star.begin(), star.end(), c));
        }
    for (ColourId c : st.lines.shared_colours(b))
        CHECK(std::binary_search(star.begin(), star.end(), c));
}

TEST_CASE("covered columns count equals frequency for once-per-column colours") {
    const ColourMatrix m = build_odd_q_matrix(9);
    const MatrixStats st(m);
    for (int c = 0; c < m.colour_count(); ++c) {
        // in the construction every colour appears at most once per column
        const auto id = static_cast<ColourId>(c);
        CHECK(st.lines.covered_count({id}) == st.freq.frequency(id));
    }
}

TEST_CASE("rows_of lists the rows whose colour set holds the colour") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const MatrixStats st(m);
    CHECK(st.lines.rows_of(*m.id_of("1")) == std::vector<int>{0, 3});
    CHECK(st.lines.rows_of(*m.id_of("x2")) == std::vector<int>{0, 1, 2});
    CHECK(st.lines.rows_of(*m.id_of("t1")) == std::vector<int>{2, 3, 4});
}

TEST_CASE("column pair statistics see only frequency-2 colours") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const MatrixStats st(m);
    // each head colour occupies two of the first three columns, so any two of
    // those columns share exactly three head colours
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(st.lines.column_shared_pair_count(a, b) == 3);

    for (ColourId c : st.lines.column_shared_pairs(0, 1))
        CHECK(st.freq.frequency(c) == 2);

    // block columns hold no frequency-2 colours at all
    CHECK(st.lines.column_shared_pair_count(3, 4) == 0);
}

TEST_CASE("high-frequency shared colours between construction rows") {
    const ColourMatrix m = build_odd_q_matrix(9);
    const MatrixStats st(m);
    // matching rows share only head colours, never block colours
    CHECK(st.lines.shared_high_freq_count(0, 3) == 0);
    CHECK(st.lines.shared_high_freq_count(1, 4) == 0);
    CHECK(st.lines.shared_high_freq_count(2, 5) == 0);
    // rows 1 and 2 share the whole x block
    CHECK(st.lines.shared_high_freq_count(0, 1) == (9 - 3) / 2);
}

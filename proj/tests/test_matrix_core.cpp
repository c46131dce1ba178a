#include "achrolab/constructions.hpp"
#include "achrolab/matrix.hpp"
#include "achrolab/matrix_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oracle.hpp"

using namespace achrolab;

namespace {

ColourMatrix tokens(std::vector<std::vector<std::string>> rows) {
    return ColourMatrix::from_tokens(rows);
}

} // namespace

TEST_CASE("from_tokens assigns dense ids in first-appearance order") {
    const ColourMatrix one = tokens({{"a"}});
    CHECK(one.row_count() == 1);
    CHECK(one.col_count() == 1);
    CHECK(one.colour_count() == 1);
    CHECK(one.at(0, 0) == 0);

    const ColourMatrix m = tokens({{"a", "b"}, {"b", "a"}});
    CHECK(m.colour_count() == 2);
    CHECK(m.palette() == std::vector<std::string>{"a", "b"});
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.id_of("b") == ColourId{1});
    CHECK_FALSE(m.id_of("zz").has_value());
}

TEST_CASE("from_tokens rejects ragged grids and empty tokens") {
    CHECK_THROWS_AS(tokens({{"a", "b"}, {"c"}}), std::invalid_argument);
    CHECK_THROWS_AS(tokens({{"a", ""}}), std::invalid_argument);
    CHECK_THROWS_AS(tokens({}), std::invalid_argument);
}

TEST_CASE("direct construction validates ids and phantom colours") {
    CHECK_THROWS_AS(ColourMatrix(1, 2, {0, 2}, {"a", "b", "c"}), std::invalid_argument);
    // phantom: "c" never occurs
    CHECK_THROWS_AS(ColourMatrix(1, 2, {0, 1}, {"a", "b", "c"}), std::invalid_argument);
    CHECK_THROWS_AS(ColourMatrix(1, 2, {0, 1}, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("properness: rows first, then columns, 1-based lines") {
    CHECK(is_proper(tokens({{"a"}})));

    const auto row_bad = properness_violation(tokens({{"a", "a"}}));
    REQUIRE(row_bad.has_value());
    CHECK(row_bad->in_row);
    CHECK(row_bad->line == 1);
    CHECK(row_bad->colour == 0);

    const auto col_bad = properness_violation(tokens({{"a", "b"}, {"a", "c"}}));
    REQUIRE(col_bad.has_value());
    CHECK_FALSE(col_bad->in_row);
    CHECK(col_bad->line == 1);

    CHECK(is_proper(build_odd_q_matrix(7)));
}

TEST_CASE("pair_verdict on the q=7 construction") {
    const ColourMatrix m = build_odd_q_matrix(7);
    const ColourId c1 = *m.id_of("1"), c2 = *m.id_of("2"), x1 = *m.id_of("x1");

    const PairVerdict head = pair_verdict(m, c1, c2);
    CHECK(head.column_based); // both appear twice inside columns 1..3
    CHECK(head.good());

    const PairVerdict mixed = pair_verdict(m, c1, x1);
    CHECK(mixed.row_based); // row 1 holds both
    CHECK_FALSE(mixed.column_based);

    const ColourMatrix tiny = tokens({{"a", "b"}, {"b", "a"}});
    const PairVerdict both = pair_verdict(tiny, 0, 1);
    CHECK(both.row_based);
    CHECK(both.column_based);
}

TEST_CASE("pair_verdict rejects equal or unknown colours") {
    const ColourMatrix m = tokens({{"a", "b"}});
    CHECK_THROWS_AS(pair_verdict(m, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(pair_verdict(m, 0, 9), std::invalid_argument);
}

TEST_CASE("pair_verdict is symmetric") {
    const ColourMatrix m = build_odd_q_matrix(7);
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto a = static_cast<ColourId>(rng() % m.colour_count());
        auto b = static_cast<ColourId>(rng() % m.colour_count());
        if (a == b)
            continue;
        const PairVerdict ab = pair_verdict(m, a, b);
        const PairVerdict ba = pair_verdict(m, b, a);
        CHECK(ab.row_based == ba.row_based);
        CHECK(ab.column_based == ba.column_based);
    }
}

TEST_CASE("completeness on the named examples") {
    CHECK(is_complete(build_odd_q_matrix(7)));
    CHECK(is_complete(tokens({{"a", "b"}, {"b", "a"}})));
    CHECK(is_complete(tokens({{"a", "b", "c"}})));
    CHECK(is_complete(tokens({{"a"}, {"b"}, {"c"}})));

    const auto report = completeness(tokens({{"a", "b"}, {"b", "c"}}));
    CHECK_FALSE(report.complete);
    REQUIRE(report.bad_pairs.size() == 1);
    CHECK(report.bad_pairs[0] == std::pair<ColourId, ColourId>{0, 2}); // {a,c}
    CHECK(std::is_sorted(report.bad_pairs.begin(), report.bad_pairs.end()));
}

TEST_CASE("is_member combines properness and completeness") {
    CHECK(is_member(build_odd_q_matrix(9)));
    CHECK_FALSE(is_member(tokens({{"a", "a"}})));
}

TEST_CASE("is_complete agrees with the double-loop oracle on small grids") {
    // all matrices over at most 4 colours, several shapes with p*q <= 9
    const std::pair<int, int> shapes[] = {{1, 3}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}};
    const char * alphabet = "abcd";
    for (const auto & [p, q] : shapes) {
        const int cells = p * q;
        std::vector<int> assign(cells, 0);
        long long total = 1;
        for (int c = 0; c < cells; ++c)
            total *= 4;
        for (long long code = 0; code < total; ++code) {
            long long rest = code;
            int maxc = 0;
            for (int c = 0; c < cells; ++c) {
                assign[c] = static_cast<int>(rest % 4);
                maxc = std::max(maxc, assign[c]);
                rest /= 4;
            }
            std::vector<std::vector<std::string>> rows(p);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j)
                    rows[i].push_back(std::string(1, alphabet[assign[i * q + j]]));
            const ColourMatrix m = ColourMatrix::from_tokens(rows);

            // oracle speaks dense ids: remap by first appearance like the library
            std::vector<int> dense(cells);
            std::vector<int> map(4, -1);
            int next = 0;
            for (int c = 0; c < cells; ++c) {
                if (map[assign[c]] < 0)
                    map[assign[c]] = next++;
                dense[c] = map[assign[c]];
            }
            const bool expected = oracle::complete_by_double_loop(dense, p, q, next);
            CHECK(is_complete(m) == expected);
        }
    }
}

TEST_CASE("permute: identity and row swap") {
    const ColourMatrix m = tokens({{"a", "b"}, {"b", "a"}});
    const std::vector<int> id2{0, 1};
    const std::vector<ColourId> idc{0, 1};
    CHECK(m.permuted(id2, id2, idc) == m);

    const std::vector<int> swapped{1, 0};
    const ColourMatrix rows_swapped = m.permuted(swapped, id2, idc);
    CHECK(rows_swapped == tokens({{"b", "a"}, {"a", "b"}}));
}

TEST_CASE("permute rejects non-bijections") {
    const ColourMatrix m = tokens({{"a", "b"}, {"b", "a"}});
    const std::vector<int> id2{0, 1};
    const std::vector<ColourId> idc{0, 1};
    CHECK_THROWS_AS(m.permuted(std::vector<int>{0, 0}, id2, idc), std::invalid_argument);
    CHECK_THROWS_AS(m.permuted(std::vector<int>{0}, id2, idc), std::invalid_argument);
    CHECK_THROWS_AS(m.permuted(id2, id2, std::vector<ColourId>{1, 1}), std::invalid_argument);
}

TEST_CASE("membership is invariant under random permutations") {
    const ColourMatrix m = build_odd_q_matrix(7);
    std::mt19937 rng(20240801);
    std::vector<int> rho(m.row_count()), sigma(m.col_count());
    std::vector<ColourId> pi(m.colour_count());
    for (int t = 0; t < 100; ++t) {
        std::iota(rho.begin(), rho.end(), 0);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(rho.begin(), rho.end(), rng);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(pi.begin(), pi.end(), rng);
        CHECK(is_member(m.permuted(rho, sigma, pi)));
    }
}

TEST_CASE("matrix text round-trips") {
    for (int q : {7, 9, 11}) {
        const ColourMatrix m = build_odd_q_matrix(q);
        std::istringstream in(render_matrix(m));
        CHECK(read_matrix(in) == m);
    }
    // arbitrary whitespace and comments on parse
    std::istringstream in("# comment\n2  2\n\na   b\n  b a\n# trailing\n");
    const ColourMatrix m = read_matrix(in);
    CHECK(m == tokens({{"a", "b"}, {"b", "a"}}));
}

TEST_CASE("matrix parse errors") {
    auto parse = [](const std::string & text) {
        std::istringstream in(text);
        return read_matrix(in);
    };
    CHECK_THROWS_AS(parse(""), MatrixParseError);
    CHECK_THROWS_AS(parse("2 2\na b\nc\n"), MatrixParseError);  // ragged
    CHECK_THROWS_AS(parse("2 2\na b\n"), MatrixParseError);     // short
    CHECK_THROWS_AS(parse("x y\na b\n"), MatrixParseError);     // bad header
    CHECK_THROWS_AS(parse("1 1\na\nb\n"), MatrixParseError);    // extra line
    CHECK_THROWS_AS(parse("0 2\na b\n"), MatrixParseError);
}

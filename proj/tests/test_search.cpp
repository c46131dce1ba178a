#include "achrolab/bounds.hpp"
#include "achrolab/constructions.hpp"
#include "achrolab/diagnostics.hpp"
#include "achrolab/matrix.hpp"
#include "achrolab/search.hpp"

#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"

using namespace achrolab;

namespace {

SearchConfig cfg(int p, int q, int k) {
    SearchConfig c;
    c.p = p;
    c.q = q;
    c.k = k;
    return c;
}

void check_witness(const SearchResult & r, int k) {
    REQUIRE(r.outcome == SearchOutcome::Found);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->colour_count() == k);
    CHECK(is_member(*r.witness));
}

} // namespace

TEST_CASE("frozen decisions at desk scale") {
    check_witness(exists_colouring(cfg(2, 2, 2)), 2);
    CHECK(exists_colouring(cfg(2, 2, 3)).outcome == SearchOutcome::Exhausted);
    check_witness(exists_colouring(cfg(2, 3, 4)), 4);
    CHECK(exists_colouring(cfg(2, 3, 5)).outcome == SearchOutcome::Exhausted);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(exists_colouring(cfg(3, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(exists_colouring(cfg(2, 2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(achromatic_number(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(achromatic_number(3, 6), std::invalid_argument); // 18 cells
    CHECK_THROWS_AS(heuristic_search(cfg(2, 2, 2)), std::invalid_argument); // no budget
}

TEST_CASE("search agrees with the brute-force oracle everywhere it can run") {
    const std::pair<int, int> shapes[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                          {2, 2}, {2, 3}, {2, 4}, {3, 3}};
    for (const auto & [p, q] : shapes) {
        for (int k = 1; k <= p * q; ++k) {
            const bool expected = oracle::exists_colouring(p, q, k);
            SearchConfig with = cfg(p, q, k);
            const SearchResult r = exists_colouring(with);
            INFO("p=", p, " q=", q, " k=", k);
            CHECK((r.outcome == SearchOutcome::Found) == expected);
            if (r.witness)
                check_witness(r, k);

            with.symmetry_breaking = false;
            const SearchResult plain = exists_colouring(with);
            CHECK((plain.outcome == SearchOutcome::Found) == expected);
        }
    }
}

TEST_CASE("achromatic numbers at desk scale") {
    for (int n = 1; n <= 6; ++n) {
        const AchromaticResult r = achromatic_number(1, n);
        CHECK(r.value == n);
        CHECK(is_member(r.witness));
    }
    CHECK(achromatic_number(2, 2).value == 2);
    CHECK(achromatic_number(2, 3).value == 4);

    // and the oracle confirms both small values independently
    CHECK(oracle::achromatic_number(2, 2) == 2);
    CHECK(oracle::achromatic_number(2, 3) == 4);
}

TEST_CASE("achromatic certificate pins value+1") {
    const AchromaticResult r = achromatic_number(2, 2);
    CHECK(r.certificate.kind == AchromaticCertificate::Kind::Exhausted);
    CHECK(r.certificate.nodes_expanded > 0);

    // single row: the value meets the formula bound, nothing to exhaust
    const AchromaticResult clique = achromatic_number(1, 5);
    CHECK(clique.certificate.kind == AchromaticCertificate::Kind::UpperBoundFormula);
}

TEST_CASE("feasible counts form an interval") {
    const std::pair<int, int> shapes[] = {{1, 6}, {2, 4}, {2, 5}, {3, 3}, {2, 6}, {3, 4}};
    for (const auto & [p, q] : shapes) {
        const int achr = achromatic_number(p, q).value;
        CHECK(achr <= general_upper_bound(p, q));
        for (int k = q; k <= achr; ++k) {
            const SearchResult r = exists_colouring(cfg(p, q, k));
            INFO("p=", p, " q=", q, " k=", k);
            check_witness(r, k);
        }
    }
}

TEST_CASE("root symmetry breaking never changes the verdict") {
    const std::pair<int, int> shapes[] = {{3, 4}, {2, 6}, {2, 8}, {4, 4}};
    for (const auto & [p, q] : shapes)
        for (int k = q; k <= general_upper_bound(p, q); ++k) {
            SearchConfig c = cfg(p, q, k);
            c.symmetry_breaking = true;
            const auto on = exists_colouring(c);
            c.symmetry_breaking = false;
            const auto off = exists_colouring(c);
            INFO("p=", p, " q=", q, " k=", k);
            CHECK(on.outcome == off.outcome);
            CHECK(on.nodes_expanded <= off.nodes_expanded);
        }
}

TEST_CASE("node counts and witnesses are reproducible") {
    const SearchResult a = exists_colouring(cfg(3, 3, 5));
    const SearchResult b = exists_colouring(cfg(3, 3, 5));
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.outcome == b.outcome);
    if (a.witness && b.witness)
        CHECK(*a.witness == *b.witness);

    SearchConfig h = cfg(6, 7, 17);
    h.node_budget = 200000;
    h.seed = 5;
    const SearchResult ha = heuristic_search(h);
    const SearchResult hb = heuristic_search(h);
    CHECK(ha.nodes_expanded == hb.nodes_expanded);
    CHECK(ha.outcome == hb.outcome);
    if (ha.witness && hb.witness)
        CHECK(*ha.witness == *hb.witness);
}

TEST_CASE("budgeted exact search reports budget exhaustion") {
    SearchConfig tight = cfg(3, 3, 5);
    tight.node_budget = 3;
    const SearchResult r = exists_colouring(tight);
    CHECK(r.outcome == SearchOutcome::BudgetExhausted);
    CHECK(r.nodes_expanded == 3);
}

TEST_CASE("heuristic finds the q=7 target") {
    SearchConfig h = cfg(6, 7, 17);
    h.node_budget = 1000000;
    h.seed = 1;
    const SearchResult r = heuristic_search(h);
    check_witness(r, 17);
    CHECK(r.nodes_expanded <= h.node_budget);

    // a found 6x7 member with 17 = 2q+3 colours must satisfy the whole
    // structural claim suite and the basic counting bounds
    const DiagnosticsReport suite = claim_suite(*r.witness);
    CHECK(suite.all_applicable_hold());
    CHECK(check_basic_bounds(*r.witness).empty());
}

TEST_CASE("heuristic on infeasible targets never lies") {
    SearchConfig h = cfg(2, 2, 3);
    h.node_budget = 20000;
    h.seed = 3;
    const SearchResult r = heuristic_search(h);
    CHECK(r.outcome == SearchOutcome::BudgetExhausted);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.nodes_expanded == h.node_budget);
}

TEST_CASE("heuristic finds trivial targets immediately") {
    SearchConfig h = cfg(1, 4, 4);
    h.node_budget = 10;
    h.seed = 0;
    const SearchResult r = heuristic_search(h);
    check_witness(r, 4);
    CHECK(r.nodes_expanded == 1);
}

TEST_CASE("heuristic can rediscover mid-size members") {
    // 6x9, 21 = 2q+3 colours: known feasible via the construction
    SearchConfig h = cfg(6, 9, 21);
    h.node_budget = 2000000;
    h.seed = 1;
    const SearchResult r = heuristic_search(h);
    check_witness(r, 21);
}

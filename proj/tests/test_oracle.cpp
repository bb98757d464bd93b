#include <doctest.h>

#include <matchseq/fixtures.hpp>
#include <matchseq/hypergraph.hpp>
#include <matchseq/oracle.hpp>
#include <matchseq/ordering.hpp>

#include <stdexcept>

using namespace matchseq;

TEST_CASE("complete graph runs match the classical values") {
    // floor((n-1)/2) without, floor((n-2)/2) with the wrap
    CHECK(exact_ms(complete_graph(4), 1, false).ms == 1);
    CHECK(exact_ms(complete_graph(5), 1, false).ms == 2);
    CHECK(exact_ms(complete_graph(6), 1, false).ms == 2);
    CHECK(exact_ms(complete_graph(4), 1, true).ms == 1);
    CHECK(exact_ms(complete_graph(5), 1, true).ms == 1);
    CHECK(exact_ms(complete_graph(6), 1, true).ms == 2);
}

TEST_CASE("complete bipartite runs match the classical values") {
    auto bip = [](int n, int m) { return build_complete_multipartite(PartiteSpec::create(1, {n, m})); };
    for (bool cyclic : {false, true}) {
        CHECK(exact_ms(bip(2, 2), 1, cyclic).ms == 1);
        CHECK(exact_ms(bip(2, 3), 1, cyclic).ms == 2);
        CHECK(exact_ms(bip(2, 4), 1, cyclic).ms == 2);
        CHECK(exact_ms(bip(3, 3), 1, cyclic).ms == 2);
    }
}

TEST_CASE("yes answers carry a verified full cover") {
    auto h = complete_graph(6);
    auto res = exists_ordering(h, 1, 2, false);
    REQUIRE(res.outcome == Outcome::yes);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->size() == h.edge_count());
    CHECK(all_windows_ok(h, *res.witness, 1, 2, false));
}

TEST_CASE("no answers on tight instances") {
    auto h = build_complete_multipartite(PartiteSpec::create(1, {2, 2}));
    CHECK(exists_ordering(h, 1, 2, false).outcome == Outcome::no);

    // a window longer than the part capacity allows dies at the root
    auto wide = build_complete_multipartite(PartiteSpec::create(1, {3, 4}));
    auto res = exists_ordering(wide, 3, 10, false);
    CHECK(res.outcome == Outcome::no);
    CHECK(res.nodes == 0);
}

TEST_CASE("window lengths beyond one pass fold into caps") {
    auto h = build_complete_multipartite(PartiteSpec::create(2, {1, 1}));
    // two parallel edges on two vertices: value r at degree bound r
    for (long long r : {1, 2, 3}) {
        auto res = exact_ms(h, r, false);
        REQUIRE(res.known);
        CHECK(res.ms == r);
    }
    // multiples of the edge count need no search at all
    auto yes = exists_ordering(h, 4, 4, false);
    CHECK(yes.outcome == Outcome::yes);
    CHECK(yes.nodes == 0);
}

TEST_CASE("gallery graphs") {
    CHECK(exact_ms(fixture_g(), 1, true).ms == 1);
    CHECK(exact_ms(fixture_g(), 1, false).ms == 2);
    CHECK(exact_ms(fixture_g(), 4, true).ms == 8);
    CHECK(exact_ms(fixture_g_prime(), 1, false).ms == 1);
    CHECK(exact_ms(fixture_g_prime(), 4, false).ms == 7);
    CHECK(exact_ms(fixture_2h(), 1, false).ms == 1);
    CHECK(exact_ms(fixture_h(), 1, false).ms == 2);
}

TEST_CASE("budget exhaustion reports unknown") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto h = complete_graph(5);
    CHECK(exists_ordering(h, 1, 2, false, tiny).outcome == Outcome::unknown);
    auto val = exact_ms(h, 1, false, tiny);
    CHECK(!val.known);
}

TEST_CASE("argument validation") {
    auto h = complete_graph(3);
    CHECK_THROWS_AS(exists_ordering(h, 0, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(exists_ordering(h, 1, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(exact_ms(h, 0, false), std::invalid_argument);
}

TEST_CASE("degree multiplied runs dominate plain ones") {
    // two interleaved copies keep at least the plain cyclic value
    auto g = fixture_g();
    auto two = multiply(g, 2).graph;
    for (long long r : {1, 2}) {
        auto plain = exact_ms(g, r, true);
        auto doubled = exact_ms(two, r, true);
        REQUIRE(plain.known);
        REQUIRE(doubled.known);
        CHECK(doubled.ms >= plain.ms);
    }
}

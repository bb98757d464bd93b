#include <doctest.h>

#include <matchseq/decompositions.hpp>
#include <matchseq/hypergraph.hpp>
#include <matchseq/ordering.hpp>

#include <stdexcept>

using namespace matchseq;

TEST_CASE("factor_divisor splits a divisor across the tail parts") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    CHECK(factor_divisor(spec, 1) == std::vector<int>{2, 1, 1});
    CHECK(factor_divisor(spec, 4) == std::vector<int>{2, 2, 2});
    CHECK(factor_divisor(spec, 8) == std::vector<int>{2, 2, 4});
    CHECK_THROWS_AS(factor_divisor(spec, 3), std::invalid_argument);
}

TEST_CASE("diagonal family partitions into labelled matchings") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    auto h = build_complete_multipartite(spec);
    auto fam = diagonal_family(spec, {2, 2, 2});
    CHECK(fam.dim_i == 4);
    CHECK(fam.dim_j == 2);
    auto check = verify_family(h, fam);
    CHECK(check.ok);
    // the edge labelled x within a cell has first-part coordinate x
    for (const auto& cell : fam.cells)
        for (std::size_t x = 0; x < cell.edges.size(); ++x)
            CHECK(h.edge(cell.edges[x]).vertices[0].index == static_cast<int>(x));
}

TEST_CASE("diagonal family validates its arguments") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    CHECK_THROWS_AS(diagonal_family(spec, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_family(spec, {1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_family(spec, {2, 2, 3}), std::invalid_argument);
    auto two = PartiteSpec::create(2, {2, 2});
    CHECK_THROWS_AS(diagonal_family(two, {2, 2}), std::invalid_argument);
}

TEST_CASE("adjacent diagonal cells overlap little") {
    auto spec = PartiteSpec::create(1, {3, 3});
    auto h = build_complete_multipartite(spec);
    auto fam = diagonal_family(spec, {3, 1});
    REQUIRE(fam.dim_i == 1);
    REQUIRE(fam.dim_j == 3);
    CHECK(verify_family(h, fam).ok);
    for (long long j = 0; j < fam.dim_j; ++j) {
        auto cur = fam.at(0, j).to_ordering();
        auto nxt = fam.at(0, (j + 1) % fam.dim_j).to_ordering();
        CHECK(ms_pair(h, cur, nxt) >= spec.n1() - 1);
    }
}

TEST_CASE("base ordering interleaves shifted matchings") {
    auto l = base_ordering(2, 3);
    CHECK(l.sequence() == std::vector<EdgeId>{0, 7, 1, 6, 2, 5, 3, 4});
    auto spec = PartiteSpec::create(1, {2, 2, 2});
    auto h = build_complete_multipartite(spec);
    // aligned blocks of n1 are perfect matchings of the first part
    for (int b = 0; b < 4; ++b) {
        const auto& e0 = h.edge(l.at(2 * b)).vertices;
        const auto& e1 = h.edge(l.at(2 * b + 1)).vertices;
        for (std::size_t i = 0; i < e0.size(); ++i) CHECK(e0[i].index != e1[i].index);
    }
    CHECK(base_ordering(3, 1).sequence() == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("refined family frozen for two copies of K_22") {
    auto spec = PartiteSpec::create(2, {2, 2});
    auto h = build_complete_multipartite(spec);
    auto fam = refined_family(spec);
    REQUIRE(fam.dim_i == 2);
    REQUIRE(fam.dim_j == 2);
    CHECK(verify_family(h, fam).ok);
    CHECK(fam.at(0, 0).edges == std::vector<EdgeId>{0, 6});
    CHECK(fam.at(0, 1).edges == std::vector<EdgeId>{1, 7});
    CHECK(fam.at(1, 0).edges == std::vector<EdgeId>{2, 4});
    CHECK(fam.at(1, 1).edges == std::vector<EdgeId>{3, 5});
}

TEST_CASE("refined family covers mixed tails and stays aligned") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    auto h = build_complete_multipartite(spec);
    auto fam = refined_family(spec);
    REQUIRE(fam.dim_i == 2);
    REQUIRE(fam.dim_j == 4);
    CHECK(verify_family(h, fam).ok);
    for (const auto& cell : fam.cells)
        for (std::size_t x = 0; x < cell.edges.size(); ++x)
            CHECK(h.edge(cell.edges[x]).vertices[0].index == static_cast<int>(x));
    // row-wise neighbours, wraparound included, clash in at most one vertex
    for (long long i = 0; i < fam.dim_i; ++i)
        for (long long j = 0; j < fam.dim_j; ++j) {
            auto cur = fam.at(i, j).to_ordering();
            auto nxt = fam.at(i, (j + 1) % fam.dim_j).to_ordering();
            CHECK(ms_pair(h, cur, nxt) >= spec.n1());
        }
}

TEST_CASE("verify_family flags duplicates and gaps") {
    auto spec = PartiteSpec::create(1, {2, 2});
    auto h = build_complete_multipartite(spec);
    auto fam = refined_family(spec);
    REQUIRE(verify_family(h, fam).ok);
    auto broken = fam;
    broken.at(0, 0).edges[1] = broken.at(0, 0).edges[0];
    auto check = verify_family(h, broken);
    CHECK(!check.ok);
    CHECK(check.problems.size() >= 2);  // duplicate coverage and a missing edge
}

#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/shelling.hpp"
#include "oracles.hpp"

using namespace cutcx;

namespace {

SimplicialComplex make(int n, std::vector<std::vector<int>> faces) { return SimplicialComplex::from_facets(n, faces); }

}  // namespace

TEST_CASE("verify_shelling on two triangles")
{
    const auto shared_edge = make(4, {{0, 1, 2}, {1, 2, 3}});
    const auto r = verify_shelling(shared_edge, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}});
    CHECK(r.valid);
    CHECK_FALSE(r.witness);
    CHECK(r.removable[0].empty());
    CHECK(r.removable[1] == VertexSet{3});
    CHECK(spanning_facets(r).empty());
    CHECK(spanning_facets(verify_shelling(shared_edge, {VertexSet{1, 2, 3}, VertexSet{0, 1, 2}})).empty());

    const auto shared_vertex = make(5, {{0, 1, 2}, {2, 3, 4}});
    const auto bad = verify_shelling(shared_vertex, {VertexSet{0, 1, 2}, VertexSet{2, 3, 4}});
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == ShellingWitness{1, 2});
    CHECK(bad.failure_count == 1);
    CHECK_THROWS_AS(spanning_facets(bad), std::logic_error);
}

TEST_CASE("verify_shelling rejects bad input")
{
    const auto c = make(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK_THROWS_AS(verify_shelling(c, {VertexSet{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(c, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(make(3, {{0, 1}, {2}}), {VertexSet{0, 1}, VertexSet{2}}), std::invalid_argument);
}

TEST_CASE("triangle boundary: the last edge is spanning")
{
    const auto b = make(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto r = verify_shelling(b, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}});
    CHECK(r.valid);
    CHECK(spanning_facets(r) == std::vector<VertexSet>{VertexSet{1, 2}});
}

TEST_CASE("verify_shelling matches the literal shelling definition on random orders")
{
    std::mt19937 rng(31);
    int valid_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % 3);
        const auto a = oracle::random_graph(n, 0.45, rng);
        const auto c = cut_complex(testing::to_graph(a), std::min(k, n));
        if (c.is_void() || c.facet_count() > 50)
            continue;
        std::vector<VertexSet> order = c.facets();
        std::shuffle(order.begin(), order.end(), rng);

        const auto report = verify_shelling(c, order, 1 + trial % 3);
        const auto sets = testing::to_sets(order);
        const int failure = oracle::first_shelling_failure(sets);
        REQUIRE(report.valid == (failure < 0));
        if (!report.valid) {
            REQUIRE(static_cast<int>(report.witness->later) == failure + 1);
            continue;
        }
        ++valid_seen;
        REQUIRE(report.spanning == oracle::spanning_brute(sets));
        for (std::size_t j = 1; j < order.size(); ++j)
            REQUIRE_FALSE(report.removable[j].empty());
    }
    CHECK(valid_seen > 20);
}

TEST_CASE("verify_shelling is deterministic across job counts")
{
    const auto c = cut_complex(squared_cycle(10), 3);
    std::vector<VertexSet> order = c.facets();
    std::mt19937 rng(37);
    std::shuffle(order.begin(), order.end(), rng);
    const auto one = verify_shelling(c, order, 1);
    const auto four = verify_shelling(c, order, 4);
    CHECK(one.valid == four.valid);
    CHECK(one.witness == four.witness);
    CHECK(one.failure_count == four.failure_count);
    CHECK(one.removable == four.removable);
}

TEST_CASE("find_shelling")
{
    SUBCASE("two triangles sharing an edge")
    {
        const auto c = make(4, {{0, 1, 2}, {1, 2, 3}});
        const auto r = find_shelling(c);
        REQUIRE(r.status == ShellingSearchStatus::found);
        CHECK(verify_shelling(c, *r.order).valid);
    }
    SUBCASE("two disjoint edges")
    {
        const auto r = find_shelling(make(4, {{0, 1}, {2, 3}}));
        CHECK(r.status == ShellingSearchStatus::not_shellable);
        CHECK_FALSE(r.order);
    }
    SUBCASE("Delta_3(W_9)")
    {
        const auto c = cut_complex(squared_cycle(9), 3);
        const auto r = find_shelling(c);
        REQUIRE(r.status == ShellingSearchStatus::found);
        const auto report = verify_shelling(c, *r.order);
        CHECK(report.valid);
        // Any shelling of a complex has as many spanning facets as its top Betti number.
        CHECK(static_cast<std::int64_t>(report.spanning_count()) == betti(c, Field::prime(2)).at(5));
    }
    SUBCASE("budget exhaustion is reported distinctly")
    {
        // Shellable, but a one-node budget cannot place 48 facets.
        const auto c = cut_complex(squared_cycle(9), 3);
        const auto r = find_shelling(c, 1);
        CHECK(r.status == ShellingSearchStatus::budget_exceeded);
    }
    SUBCASE("degenerate complexes")
    {
        CHECK(find_shelling(SimplicialComplex::void_complex(3)).status == ShellingSearchStatus::found);
        CHECK(find_shelling(SimplicialComplex::empty_complex(3)).status == ShellingSearchStatus::found);
        CHECK_THROWS_AS(find_shelling(make(3, {{0, 1}, {2}})), std::invalid_argument);
    }
}

TEST_CASE("find_shelling agrees with vertex decomposability on 2-cut complexes of small graphs")
{
    for (int n = 2; n <= 5; ++n) {
        const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
        for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
            const auto g = testing::to_graph(oracle::graph_from_code(n, code));
            const auto c = cut_complex(g, 2);
            const auto r = find_shelling(c);
            REQUIRE(r.status != ShellingSearchStatus::budget_exceeded);
            REQUIRE((r.status == ShellingSearchStatus::found) == is_vertex_decomposable(c));
        }
    }
}

#include <doctest.h>

#include <random>
#include <tuple>

#include "convert.hpp"
#include "cutcx/wn_shelling.hpp"
#include "oracles.hpp"

using namespace cutcx;
using namespace cutcx::wn;

namespace {

VertexSet facet_of(int n, VertexSet complement) { return complement.complement(n); }

std::vector<VertexSet> complements(int n)
{
    std::vector<VertexSet> out;
    for (VertexSet f : cut_complex(squared_cycle(n), 3).facets())
        out.push_back(f.complement(n));
    return out;
}

bool is_pattern(int n, VertexSet c, int a, int b)
{
    for (int x = 0; x < n; ++x)
        if (c == VertexSet{x, (x + a) % n, (x + b) % n})
            return true;
    return false;
}

}  // namespace

TEST_CASE("vertex order")
{
    CHECK(VertexOrder(9).m() == 5);
    CHECK(VertexOrder(9).sequence() == std::vector<int>{5, 4, 6, 3, 7, 2, 8, 1, 0});
    CHECK(VertexOrder(10).m() == 5);
    CHECK(VertexOrder(10).sequence() == std::vector<int>{5, 4, 6, 3, 7, 2, 8, 1, 9, 0});
    CHECK(VertexOrder(13).m() == 7);
    CHECK_THROWS_AS(VertexOrder(8), std::invalid_argument);

    const VertexOrder o(9);
    CHECK(o.position(3) == 4);
    CHECK(o.alpha(4) == 3);
    CHECK(o.least(VertexSet{0, 4, 8}) == 4);
    CHECK(cmp_order(o, 5, 4) < 0);
    CHECK(cmp_order(o, 3, 7) < 0);
    for (int y = 1; y < 9; ++y)
        CHECK(cmp_order(o, 0, y) > 0);
}

TEST_CASE("vertex order is a permutation ending in 0 for every n")
{
    for (int n = 9; n <= 64; ++n) {
        const VertexOrder o(n);
        std::vector<int> sorted = o.sequence();
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(static_cast<std::size_t>(n));
        std::iota(expected.begin(), expected.end(), 0);
        REQUIRE(sorted == expected);
        REQUIRE(o.alpha(1) == o.m());
        REQUIRE(o.alpha(n) == 0);
        for (int v = 0; v < n; ++v)
            REQUIRE(o.alpha(o.position(v)) == v);
    }
}

TEST_CASE("comparison characterization of the vertex order")
{
    for (int n = 9; n <= 30; ++n) {
        const VertexOrder o(n);
        const int m = o.m();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y)
                    continue;
                const bool before = cmp_order(o, x, y) < 0;
                if (x < m)
                    REQUIRE(before == (y < x || y >= 2 * m - x));
                else
                    REQUIRE(before == (y < 2 * m - x || y > x));
                if (y < m)
                    REQUIRE(before == (y < x && x < 2 * m - y));
                if (y > m)
                    REQUIRE(before == (2 * m - y <= x && x < y));
            }
    }
}

TEST_CASE("facet signatures")
{
    const VertexOrder o(9);
    CHECK(facet_signature(o, VertexSet{3, 7, 8}) == FacetSignature{4, 3, 7, 8});
    CHECK(facet_signature(o, VertexSet{0, 4, 8}) == FacetSignature{2, 4, 0, 8});
    CHECK(facet_signature(o, VertexSet{5, 0, 1}) == FacetSignature{1, 5, 0, 1});
    CHECK_THROWS_AS(facet_signature(o, VertexSet{1, 2}), std::invalid_argument);
}

TEST_CASE("signature invariants and range on every facet")
{
    for (int n = 9; n <= 16; ++n) {
        const VertexOrder o(n);
        for (VertexSet c : complements(n)) {
            const auto sig = facet_signature(o, c);
            REQUIRE(sig.s1 < sig.s2);
            REQUIRE(cmp_order(o, sig.alpha, sig.s1) < 0);
            REQUIRE(cmp_order(o, sig.alpha, sig.s2) < 0);
            REQUIRE(o.alpha(sig.s) == sig.alpha);
            REQUIRE(sig.alpha >= 2);
            REQUIRE(sig.alpha <= n - 2);
        }
    }
}

TEST_CASE("facet complements")
{
    CHECK(is_facet_complement(9, VertexSet{0, 3, 6}));
    CHECK(is_facet_complement(9, VertexSet{0, 4, 8}));
    CHECK_FALSE(is_facet_complement(9, VertexSet{0, 1, 2}));
    CHECK_FALSE(is_facet_complement(9, VertexSet{0, 1, 3}));
    CHECK_FALSE(is_facet_complement(9, VertexSet{0, 1}));
    for (int n = 9; n <= 14; ++n) {
        std::size_t count = 0;
        for_each_k_subset(n, 3, [&](VertexSet s) { count += is_facet_complement(n, s); });
        REQUIRE(count == cut_complex(squared_cycle(n), 3).facet_count());
    }
}

TEST_CASE("displaced class")
{
    const VertexOrder o9(9);
    CHECK(in_d(o9, VertexSet{3, 6, 7}) == DClass::d1);
    CHECK(in_d(o9, VertexSet{3, 4, 7}) == DClass::d2);
    CHECK(in_d(o9, VertexSet{2, 3, 6}) == DClass::d3);
    CHECK_FALSE(in_d(o9, VertexSet{0, 4, 8}));
    CHECK(in_d(VertexOrder(10), VertexSet{4, 7, 8}) == DClass::d4);
    CHECK_THROWS_AS(in_d(o9, VertexSet{0, 1, 2}), std::invalid_argument);

    // Frozen member counts: 3, 4, 4, 5, 5 for n = 9..13.
    const std::vector<int> expected{3, 4, 4, 5, 5};
    for (int n = 9; n <= 13; ++n) {
        const VertexOrder o(n);
        int count = 0;
        for (VertexSet c : complements(n))
            count += in_d(o, c).has_value();
        REQUIRE(count == expected[static_cast<std::size_t>(n - 9)]);
    }
}

TEST_CASE("cmp_prec examples")
{
    const VertexOrder o(9);
    const auto f = [](VertexSet c) { return facet_of(9, c); };
    CHECK(cmp_prec(o, f(VertexSet{0, 1, 5}), f(VertexSet{0, 4, 8})) < 0);
    CHECK(cmp_prec(o, f(VertexSet{3, 6, 7}), f(VertexSet{3, 7, 8})) < 0);
    CHECK(cmp_prec(o, f(VertexSet{3, 7, 8}), f(VertexSet{3, 6, 7})) > 0);
    CHECK(cmp_prec(o, f(VertexSet{0, 4, 8}), f(VertexSet{0, 4, 8})) == 0);
    CHECK_THROWS(cmp_prec(o, f(VertexSet{0, 1, 2}), f(VertexSet{0, 4, 8})));
}

TEST_CASE("cmp_prec is a strict total order")
{
    for (int n = 9; n <= 12; ++n) {
        const VertexOrder o(n);
        const auto facets = cut_complex(squared_cycle(n), 3).facets();
        const std::size_t t = facets.size();
        // less[i][j] <=> facets[i] ≺ facets[j]
        std::vector<std::vector<bool>> less(t, std::vector<bool>(t));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                const auto forward = cmp_prec(o, facets[i], facets[j]);
                const auto backward = cmp_prec(o, facets[j], facets[i]);
                REQUIRE((forward == 0) == (i == j));
                REQUIRE(forward == (0 <=> backward));
                less[i][j] = forward < 0;
            }
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                if (!less[i][j])
                    continue;
                for (std::size_t k = 0; k < t; ++k)
                    if (less[j][k])
                        REQUIRE(less[i][k]);
            }
    }

    std::mt19937 rng(67);
    for (int n = 13; n <= 16; ++n) {
        const VertexOrder o(n);
        const auto facets = cut_complex(squared_cycle(n), 3).facets();
        std::uniform_int_distribution<std::size_t> pick(0, facets.size() - 1);
        for (int trial = 0; trial < 20000; ++trial) {
            const VertexSet a = facets[pick(rng)], b = facets[pick(rng)], c = facets[pick(rng)];
            if (cmp_prec(o, a, b) < 0 && cmp_prec(o, b, c) < 0)
                REQUIRE(cmp_prec(o, a, c) < 0);
            REQUIRE(cmp_prec(o, a, b) == (0 <=> cmp_prec(o, b, a)));
        }
    }
}

TEST_CASE("shelling order")
{
    const std::vector<std::size_t> counts{48, 80, 121, 172, 234};
    for (int n = 9; n <= 13; ++n) {
        const auto order = shelling_order(n);
        const auto c = cut_complex(squared_cycle(n), 3);
        REQUIRE(order.size() == counts[static_cast<std::size_t>(n - 9)]);
        REQUIRE(order.size() == c.facet_count());

        // Same as sorting by (s, displaced, s1, s2).
        const VertexOrder o(n);
        const auto key = [&](VertexSet f) {
            const VertexSet comp = f.complement(n);
            const auto sig = facet_signature(o, comp);
            return std::tuple(sig.s, in_d(o, comp).has_value(), sig.s1, sig.s2);
        };
        for (std::size_t j = 1; j < order.size(); ++j)
            REQUIRE(key(order[j - 1]) < key(order[j]));

        // Literal prefix-intersection check.
        REQUIRE(oracle::first_shelling_failure(testing::to_sets(order)) < 0);
    }
    CHECK(shelling_order(9).front().complement(9) == VertexSet{0, 1, 5});
}

TEST_CASE("spanning classes")
{
    const VertexOrder o9(9);
    CHECK(in_s(o9, VertexSet{3, 7, 8}) == SClass::s1);
    CHECK_FALSE(in_s(o9, VertexSet{3, 6, 7}));
    CHECK_THROWS_AS(in_s(o9, VertexSet{0, 1, 2}), std::invalid_argument);

    const VertexOrder o10(10);
    int s1 = 0;
    for (VertexSet c : complements(10))
        s1 += in_s(o10, c) == SClass::s1;
    CHECK(s1 == 2);
    CHECK(name(SClass::s3) == "S3");
    CHECK(name(DClass::d4) == "D4");
}

TEST_CASE("spanning count formula")
{
    CHECK(spanning_count_formula(9) == SpanningBreakdown{1, 0, 0, 1});
    CHECK(spanning_count_formula(10) == SpanningBreakdown{2, 0, 4, 6});
    CHECK(spanning_count_formula(13).total == 27);
    for (int n = 9; n <= 64; ++n) {
        const auto b = spanning_count_formula(n);
        REQUIRE(b.total == oracle::binomial(n - 4, 2) - 9);
        REQUIRE(2 * b.total == n * n - 9 * n + 2);
    }
}

TEST_CASE("spanning facets of the shelling order")
{
    const std::vector<std::int64_t> expected{1, 6, 12, 19, 27};
    for (int n = 9; n <= 13; ++n) {
        const VertexOrder o(n);
        const auto order = shelling_order(n);
        const auto sets = testing::to_sets(order);
        const auto spanning = oracle::spanning_brute(sets);
        std::int64_t count = 0;
        for (std::size_t j = 0; j < order.size(); ++j) {
            const VertexSet c = order[j].complement(n);
            REQUIRE(spanning[j] == in_s(o, c).has_value());
            if (in_d(o, c))
                REQUIRE_FALSE(spanning[j]);
            if (!spanning[j])
                continue;
            ++count;
            const auto sig = facet_signature(o, c);
            REQUIRE(sig.s2 == n - 1);
            for (int bad : {0, 1, 2, n - 2, n - 1})
                REQUIRE(sig.alpha != bad);
            REQUIRE_FALSE(is_pattern(n, c, 1, 4));
            REQUIRE_FALSE(is_pattern(n, c, 3, 4));
        }
        REQUIRE(count == expected[static_cast<std::size_t>(n - 9)]);
        REQUIRE(spanning_census(n) == spanning_count_formula(n));
    }
    // The single spanning facet at n = 9.
    const auto order = shelling_order(9);
    const auto spanning = oracle::spanning_brute(testing::to_sets(order));
    const auto it = std::find(spanning.begin(), spanning.end(), true);
    REQUIRE(it != spanning.end());
    CHECK(order[static_cast<std::size_t>(it - spanning.begin())].complement(9) == VertexSet{3, 7, 8});
}

TEST_CASE("census agrees with the formula beyond the tested range")
{
    for (int n = 14; n <= 24; ++n)
        REQUIRE(spanning_census(n) == spanning_count_formula(n));
}

TEST_CASE("verify_conjecture")
{
    const auto r9 = verify_conjecture(9);
    CHECK(r9.all_pass);
    CHECK(r9.m == 5);
    CHECK(r9.facet_count == 48);
    CHECK(r9.dimension == 5);
    CHECK(r9.shelling_valid);
    CHECK(r9.spanning_from_order == 1);
    CHECK(r9.spanning_from_s == 1);
    CHECK(r9.spanning_from_formula == 1);
    CHECK(r9.spanning_sets_agree);
    REQUIRE(r9.betti);
    CHECK(r9.betti->at(5) == 1);
    CHECK(*r9.betti_matches);

    ConjectureOptions no_homology;
    no_homology.with_homology = false;
    const auto r12 = verify_conjecture(12, no_homology);
    CHECK(r12.all_pass);
    CHECK(r12.spanning_from_order == 19);
    CHECK_FALSE(r12.betti);

    ConjectureOptions capped;
    capped.homology_max_n = 10;
    const auto r11 = verify_conjecture(11, capped);
    CHECK(r11.homology_skipped);
    CHECK(r11.all_pass);
}

TEST_CASE("corrupted orders are rejected with a witness")
{
    auto order = shelling_order(9);
    std::swap(order.front(), order.back());
    const auto swapped = verify_conjecture_with_order(9, order);
    CHECK_FALSE(swapped.shelling_valid);
    CHECK_FALSE(swapped.all_pass);
    REQUIRE(swapped.witness);
    CHECK(*swapped.witness == ShellingWitness{1, 2});

    auto reversed = shelling_order(9);
    std::reverse(reversed.begin(), reversed.end());
    const auto r = verify_shelling(cut_complex(squared_cycle(9), 3), reversed);
    CHECK_FALSE(r.valid);
    REQUIRE(r.witness);
    CHECK(*r.witness == ShellingWitness{14, 21});
    CHECK(static_cast<int>(r.witness->later) == oracle::first_shelling_failure(testing::to_sets(reversed)) + 1);

    // Swapping the first two facets keeps a valid shelling.
    auto mild = shelling_order(9);
    std::swap(mild[0], mild[1]);
    CHECK(verify_shelling(cut_complex(squared_cycle(9), 3), mild).valid);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "sumfree/report.hpp"
#include "sumfree/search.hpp"

#include <algorithm>
#include <set>

using namespace sumfree;

namespace {

IntegerSet S(unsigned n, std::initializer_list<unsigned> m) { return IntegerSet::from_members(n, m); }

std::set<std::uint64_t> masks(const std::vector<IntegerSet>& sets)
{
    std::set<std::uint64_t> out;
    for (const IntegerSet& s : sets)
        out.insert(s.to_mask());
    return out;
}

std::set<std::uint64_t> masks(const std::vector<SetRecord>& records)
{
    std::set<std::uint64_t> out;
    for (const SetRecord& r : records)
        out.insert(r.set.to_mask());
    return out;
}

std::set<std::uint64_t> masks(unsigned n, std::initializer_list<std::initializer_list<unsigned>> sets)
{
    std::set<std::uint64_t> out;
    for (auto s : sets)
        out.insert(S(n, s).to_mask());
    return out;
}

}  // namespace

TEST_CASE("oracle small universes")
{
    const auto one = oracle_enumerate_sum_free(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].empty());
    CHECK(one[1] == S(1, {1}));

    // {1,2} fails (1+1=2); the remaining six subsets of [1,3] are sum-free
    const auto three = oracle_enumerate_sum_free(3);
    CHECK(masks(three) == masks(3, {{}, {1}, {2}, {3}, {1, 3}, {2, 3}}));

    // brute force over 16 subsets: 8 non-empty sum-free sets plus the empty set
    const auto four = oracle_enumerate_sum_free(4);
    CHECK(four.size() == 9);
    CHECK(std::count_if(four.begin(), four.end(), [](const IntegerSet& s) { return !s.empty(); }) == 8);

    CHECK_THROWS_AS(oracle_enumerate_sum_free(kOracleMaxUniverse + 1), UsageError);
    CHECK_THROWS_AS(oracle_enumerate_sum_free(0), UsageError);
}

TEST_CASE("oracle agrees with the independent brute force")
{
    for (unsigned n = 1; n <= 14; ++n) {
        const auto expect = naive::all_sum_free(n);
        REQUIRE(masks(oracle_enumerate_sum_free(n)) == std::set<std::uint64_t>(expect.begin(), expect.end()));
    }
}

TEST_CASE("engine examples")
{
    SearchConfig cfg;
    CHECK(masks(enumerate_sum_free(3, cfg)) == masks(oracle_enumerate_sum_free(3)));
    CHECK(enumerate_sum_free(6, cfg).size() == oracle_enumerate_sum_free(6).size());
    CHECK(enumerate_sum_free(6, cfg).size() == 24);
    CHECK(masks(enumerate_sum_free(1, cfg)) == masks(1, {{}, {1}}));
}

TEST_CASE("engine and oracle families agree for n <= 16")
{
    SearchConfig cfg;
    for (unsigned n = 1; n <= 16; ++n) {
        const auto engine = enumerate_sum_free(n, cfg);
        const auto oracle = oracle_enumerate_sum_free(n);
        REQUIRE(engine.size() == oracle.size());
        REQUIRE(masks(engine) == masks(oracle));
    }
}

TEST_CASE("streaming and parallel enumeration match the serial list")
{
    SearchConfig serial;
    serial.prefix_depth = 0;
    for (unsigned n : {1u, 5u, 12u, 18u}) {
        const auto reference = enumerate_sum_free(n, serial);
        std::vector<IntegerSet> streamed;
        for_each_sum_free(n, serial, [&](const IntegerSet& s) { streamed.push_back(s); });
        CHECK(streamed == reference);
        for (unsigned workers : {1u, 3u, 8u})
            for (unsigned depth : {0u, 1u, 2u, 4u, 30u}) {
                SearchConfig cfg{32, workers, depth};
                CHECK(enumerate_sum_free(n, cfg) == reference);
                CHECK(enumerate_maximum_sets(n, cfg) == enumerate_maximum_sets(n, serial));
                CHECK(enumerate_maximal_sets(n, cfg) == enumerate_maximal_sets(n, serial));
            }
    }
}

TEST_CASE("maximum sets examples")
{
    SearchConfig cfg;
    CHECK(masks(enumerate_maximum_sets(8, cfg)) == masks(8, {{1, 3, 5, 7}, {4, 5, 6, 7}, {5, 6, 7, 8}, {2, 3, 7, 8}}));
    CHECK(masks(enumerate_maximum_sets(3, cfg)) == masks(3, {{1, 3}, {2, 3}}));
    CHECK(masks(enumerate_maximum_sets(6, cfg)) ==
          masks(6, {{1, 3, 5}, {3, 4, 5}, {4, 5, 6}, {1, 4, 6}, {2, 5, 6}}));

    for (const SetRecord& r : enumerate_maximum_sets(10, cfg)) {
        CHECK(r.is_maximum);
        CHECK(r.is_maximal);
    }
}

TEST_CASE("maximum and maximal sets agree with oracle filters")
{
    SearchConfig cfg;
    for (unsigned n = 1; n <= 16; ++n) {
        std::set<std::uint64_t> maximum, maximal;
        for (const IntegerSet& s : oracle_enumerate_sum_free(n)) {
            if (s.cardinality() == maximum_cardinality(n))
                maximum.insert(s.to_mask());
            if (naive::maximal(s.members(), n))
                maximal.insert(s.to_mask());
        }
        REQUIRE(masks(enumerate_maximum_sets(n, cfg)) == maximum);
        REQUIRE(masks(enumerate_maximal_sets(n, cfg)) == maximal);
    }
}

TEST_CASE("maximal sets examples")
{
    SearchConfig cfg;
    const auto eight = masks(enumerate_maximal_sets(8, cfg));
    CHECK(eight.count(S(8, {1, 3, 8}).to_mask()) == 1);
    for (const SetRecord& r : enumerate_maximum_sets(8, cfg))
        CHECK(eight.count(r.set.to_mask()) == 1);
    CHECK(masks(enumerate_maximal_sets(4, cfg)) == masks(4, {{1, 3}, {2, 3}, {1, 4}, {3, 4}}));
}

TEST_CASE("compute_g examples")
{
    SearchConfig cfg;
    const GEntry a = compute_g(6, 2, cfg);
    CHECK(a.g_value == 3);
    CHECK(a.witness == S(6, {2, 5, 6}));

    const GEntry b = compute_g(3, 1, cfg);
    CHECK(b.g_value == 2);
    CHECK(b.witness == S(3, {1, 3}));

    const GEntry c = compute_g(8, 5, cfg);
    CHECK(c.g_value == 4);
    CHECK(c.witness == S(8, {5, 6, 7, 8}));

    const GEntry single = compute_g(1, 1, cfg);
    CHECK(single.g_value == 1);
    CHECK(single.witness == S(1, {1}));
    CHECK(single.node_count >= 1);

    CHECK_THROWS_AS(compute_g(6, 0, cfg), UsageError);
    CHECK_THROWS_AS(compute_g(6, 7, cfg), UsageError);
    CHECK_THROWS_AS(compute_g(33, 1, cfg), UsageError);
}

TEST_CASE("witness ties resolve to the smallest bit pattern")
{
    SearchConfig cfg;
    // optimal sets {2,5,6}, {2,3,7}, {2,6,7}; depth-first order would meet {2,3,7} first
    CHECK(compute_g(7, 2, cfg).witness == S(7, {2, 5, 6}));
    // {2,3,7,8}, {2,5,6,9}, {2,3,8,9}, {2,5,8,9}
    CHECK(compute_g(9, 2, cfg).witness == S(9, {2, 3, 7, 8}));
    CHECK(compute_g(8, 3, cfg).witness == S(8, {3, 4, 5}));
}

TEST_CASE("compute_g matches brute force for n <= 14")
{
    SearchConfig cfg;
    for (unsigned n = 1; n <= 14; ++n) {
        const auto family = naive::all_sum_free(n);
        for (unsigned m = 1; m <= n; ++m) {
            const naive::GResult expect = naive::g_value(family, n, m);
            const GEntry got = compute_g(n, m, cfg);
            REQUIRE(got.g_value == expect.g);
            REQUIRE(got.witness.to_mask() == expect.witness);

            const naive::GResult expect_top = naive::g_value(family, n, m, true);
            const auto top = compute_g_containing_max(n, m, cfg);
            REQUIRE(top.has_value() == (expect_top.g > 0));
            if (top) {
                REQUIRE(top->g_value == expect_top.g);
                REQUIRE(top->witness.to_mask() == expect_top.witness);
            }
        }
    }
}

TEST_CASE("containing-max search is empty only at n = 2m")
{
    SearchConfig cfg;
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned m = 1; m <= n; ++m)
            REQUIRE(compute_g_containing_max(n, m, cfg).has_value() == (n != 2 * m));
}

TEST_CASE("g table")
{
    SearchConfig cfg;
    const auto t3 = g_table(3, cfg);
    CHECK(t3.size() == 6);
    CHECK(t3.front().n == 1);
    CHECK(t3.back().n == 3);
    CHECK(t3.back().m == 3);

    const auto t6 = g_table(6, cfg);
    const auto it = std::find_if(t6.begin(), t6.end(), [](const GEntry& g) { return g.n == 6 && g.m == 2; });
    REQUIRE(it != t6.end());
    CHECK(*it == compute_g(6, 2, cfg));

    CHECK_THROWS_AS(g_table(33, cfg), UsageError);
}

TEST_CASE("g table witnesses are valid and the maximum over m is floor((n+1)/2)")
{
    SearchConfig cfg;
    const auto table = g_table(24, cfg);
    std::vector<unsigned> best(25, 0);
    for (const GEntry& g : table) {
        REQUIRE(is_sum_free(g.witness));
        REQUIRE(g.witness.min_element() == g.m);
        REQUIRE(g.witness.cardinality() == g.g_value);
        REQUIRE(g.witness.universe_bound() == g.n);
        best[g.n] = std::max(best[g.n], g.g_value);
    }
    for (unsigned n = 1; n <= 24; ++n)
        CHECK(best[n] == maximum_cardinality(n));
}

TEST_CASE("g table is deterministic across runs and worker counts")
{
    const std::string serial = g_table_csv(g_table(18, SearchConfig{32, 1, 2}));
    CHECK(serial == g_table_csv(g_table(18, SearchConfig{32, 1, 2})));
    CHECK(serial == g_table_csv(g_table(18, SearchConfig{32, 8, 2})));
    CHECK(serial == g_table_csv(g_table(18, SearchConfig{32, 3, 0})));
}

TEST_CASE("search config validation")
{
    CHECK_THROWS_AS(SearchConfig({0, 1, 0}).validate(), UsageError);
    CHECK_THROWS_AS(SearchConfig({64, 1, 0}).validate(), UsageError);
    CHECK_THROWS_AS(SearchConfig({32, 0, 0}).validate(), UsageError);
    CHECK_NOTHROW(SearchConfig({63, 1, 0}).validate());

    SearchConfig small{10, 1, 2};
    CHECK_THROWS_AS(enumerate_sum_free(11, small), UsageError);
    CHECK_THROWS_AS(enumerate_maximum_sets(11, small), UsageError);
    CHECK_THROWS_AS(enumerate_maximal_sets(11, small), UsageError);
    CHECK_NOTHROW(enumerate_maximum_sets(10, small));
}

TEST_CASE("engine handles the top of the word")
{
    SearchConfig cfg{63, 1, 2};
    const auto sets = enumerate_maximum_sets(63, cfg);
    // every maximum set at odd n >= 9 is one of the two classical ones
    CHECK(masks(sets) == std::set<std::uint64_t>{IntegerSet::odd_numbers(63).to_mask(),
                                                 IntegerSet::interval(63, 32, 63).to_mask()});
    CHECK(compute_g(63, 32, cfg).g_value == 32);
}

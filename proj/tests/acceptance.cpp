// One pass/fail line per acceptance criterion; nonzero exit if any fails.

#include "sumfree/bounds.hpp"
#include "sumfree/integer_set.hpp"
#include "sumfree/search.hpp"
#include "sumfree/set_record.hpp"
#include "sumfree/taxonomy.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef SUMFREE_CLI_PATH
#error "SUMFREE_CLI_PATH must name the sumfree executable"
#endif

using namespace sumfree;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

IntegerSet S(unsigned n, std::initializer_list<unsigned> m) { return IntegerSet::from_members(n, m); }

std::string join(const std::vector<IntegerSet>& sets)
{
    std::string s = "[";
    for (std::size_t i = 0; i < sets.size(); ++i)
        s += (i ? " " : "") + sets[i].to_string();
    return s + "]";
}

std::vector<IntegerSet> sets_of(const std::vector<SetRecord>& records)
{
    std::vector<IntegerSet> out;
    for (const SetRecord& r : records)
        out.push_back(r.set);
    return out;
}

Outcome ac1()
{
    const auto t0 = std::chrono::steady_clock::now();
    const GEntry g = compute_g(6, 2, SearchConfig{});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = g.g_value == 3 && g.witness == S(6, {2, 5, 6}) && ce_bound(6, 2) == 2 && g.g_value > ce_bound(6, 2) &&
                    secs < 1.0;
    return {ok, "g(6,2)=" + std::to_string(g.g_value) + " witness " + g.witness.to_string() +
                    " ce_bound=" + std::to_string(ce_bound(6, 2))};
}

Outcome ac2()
{
    unsigned unsound = 0, misplaced = 0, violations = 0;
    std::string cells;
    for (const BoundVerdict& v : scan_bound_violations(24, SearchConfig{})) {
        if (v.g_exact > v.revised_bound)
            ++unsound;
        if (v.ce_violated) {
            ++violations;
            cells += " (" + std::to_string(v.n) + "," + std::to_string(v.m) + ")";
            if (v.n != 3 * v.m || !v.extremal_contains_n || !v.witness.contains(v.n))
                ++misplaced;
        }
    }
    return {unsound == 0 && misplaced == 0,
            "revised violations=" + std::to_string(unsound) + ", ce violations=" + std::to_string(violations) +
                " all at n=3m with n in witness:" + cells};
}

Outcome ac3()
{
    const auto found = sets_of(find_tight_exceptions(24, SearchConfig{}));
    return {found == std::vector<IntegerSet>{S(3, {1, 3}), S(6, {2, 5, 6})}, join(found)};
}

Outcome ac4()
{
    const auto reports = verify_taxonomy_completeness(24, SearchConfig{});
    const TaxonomySummary summary = summarize(reports, 24);
    const std::vector<IntegerSet> expect{S(4, {1, 4}), S(6, {1, 4, 6}), S(6, {2, 5, 6}), S(8, {2, 3, 7, 8})};
    const auto found = sets_of(summary.exceptions);
    return {summary.completeness_ok && found == expect, "exceptions " + join(found)};
}

Outcome ac5()
{
    std::size_t bad = 0;
    for (const LemmaCheck& c : verify_lemma_min_element(24, SearchConfig{}))
        bad += c.counterexamples.size() + (c.ok ? 0 : 1);
    return {bad == 0, std::to_string(bad) + " counterexamples"};
}

Outcome ac6()
{
    const auto m1 = sets_of(verify_m1_exceptions(24, SearchConfig{}));
    const auto m2 = sets_of(verify_m2_exceptions(24, SearchConfig{}));
    const bool ok = m1 == std::vector<IntegerSet>{S(4, {1, 4}), S(6, {1, 4, 6})} &&
                    m2 == std::vector<IntegerSet>{S(6, {2, 5, 6}), S(8, {2, 3, 7, 8})};
    return {ok, "m1 " + join(m1) + " m2 " + join(m2)};
}

Outcome ac7()
{
    unsigned equivalence = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 12); ++bits) {
        const IntegerSet a = IntegerSet::from_mask(12, bits << 1);
        if (is_sum_free(a) != is_difference_free(a))
            ++equivalence;
    }
    unsigned family = 0;
    for (unsigned n = 1; n <= 16; ++n) {
        std::set<std::uint64_t> engine, oracle;
        for (const IntegerSet& s : enumerate_sum_free(n, SearchConfig{}))
            engine.insert(s.to_mask());
        for (const IntegerSet& s : oracle_enumerate_sum_free(n))
            oracle.insert(s.to_mask());
        if (engine != oracle)
            ++family;
    }
    return {equivalence == 0 && family == 0, std::to_string(equivalence) + " equivalence discrepancies over 4096 subsets, " +
                                                  std::to_string(family) + " family mismatches for n<=16"};
}

Outcome ac8()
{
    std::vector<unsigned> best(25, 0);
    for (const GEntry& g : g_table(24, SearchConfig{}))
        best[g.n] = std::max(best[g.n], g.g_value);
    unsigned bad = 0;
    for (unsigned n = 1; n <= 24; ++n)
        if (best[n] != maximum_cardinality(n) || enumerate_maximum_sets(n, SearchConfig{}).empty())
            ++bad;
    return {bad == 0, std::to_string(bad) + " mismatches against floor((n+1)/2) for n<=24"};
}

Outcome ac9()
{
    const SetRecord r = make_record(S(8, {1, 3, 8}));
    return {r.is_sum_free && r.is_maximal && !r.is_maximum,
            std::string("maximal=") + (r.is_maximal ? "true" : "false") + " maximum=" + (r.is_maximum ? "true" : "false")};
}

bool capture(const std::string& command, std::string& output)
{
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe)
        return false;
    std::array<char, 4096> buf;
    output.clear();
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    return ::pclose(pipe) == 0;
}

Outcome ac10()
{
    const std::string base = std::string("'") + SUMFREE_CLI_PATH + "' gtable --n-max 20 2>/dev/null";
    std::string first, second, one, eight;
    const bool ran = capture(base, first) && capture(base, second) && capture(base + " --workers 1", one) &&
                     capture(base + " --workers 8", eight);
    const bool ok = ran && !first.empty() && first == second && one == eight && first == one;
    return {ok, ran ? std::to_string(first.size()) + " bytes, repeat " + (first == second ? "identical" : "differs") +
                          ", workers 1 vs 8 " + (one == eight ? "identical" : "differ")
                    : "cli run failed"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 counterexample g(6,2)=3 exceeds the original bound", ac1},
        {"AC2 revised bound soundness, violations only at n=3m (n<=24)", ac2},
        {"AC3 tight exceptions are {1,3} and {2,5,6} (n<=24)", ac3},
        {"AC4 taxonomy complete up to the four exceptions (n<=24)", ac4},
        {"AC5 no maximum set with min in [3, floor((n+1)/2)-1] (n<=24)", ac5},
        {"AC6 min-1 and min-2 exception lists (n<=24)", ac6},
        {"AC7 sum-free iff difference-free; engine equals oracle (n<=16)", ac7},
        {"AC8 maximum cardinality is floor((n+1)/2) (n<=24)", ac8},
        {"AC9 {1,3,8} in [1,8] is maximal but not maximum", ac9},
        {"AC10 gtable --n-max 20 is byte-identical across runs and workers", ac10},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.precision(1);
        line << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << " (" << std::fixed << ms << " ms)";
        std::cout << line.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failed ? 1 : 0;
}

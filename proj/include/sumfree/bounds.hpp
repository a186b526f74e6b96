#pragma once

#include "sumfree/search.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace sumfree {

/// Which branch of the piecewise g(n, m) bound applies. Decided with integer
/// comparisons: 2m > n, then 3m >= n, otherwise 3m < n.
enum class BoundCase { UpperThird, MiddleThird, LowerThird };

std::string_view to_string(BoundCase c) noexcept;

BoundCase bound_case(unsigned n, unsigned m);

/// The original piecewise bound:
///   n - m + 1            if m > n/2
///   m                    if n/3 <= m <= n/2
///   floor((n - m)/2) + 1 if m < n/3
unsigned ce_bound(unsigned n, unsigned m);

/// m + 1 when n = 3m, ce_bound otherwise. An upper bound for every sum-free
/// set with min m, whether or not it contains n.
unsigned revised_bound(unsigned n, unsigned m);

struct BoundVerdict {
    unsigned n = 0;
    unsigned m = 0;
    BoundCase case_label = BoundCase::UpperThird;
    unsigned ce_bound = 0;
    unsigned revised_bound = 0;
    unsigned g_exact = 0;
    bool ce_violated = false;
    bool revised_violated = false;
    bool tight = false; // g_exact == revised_bound
    IntegerSet witness{1};
    /// Largest sum-free set with min m that contains n; absent when n = 2m.
    std::optional<unsigned> g_with_n;
    /// Some set attaining g_exact contains n.
    bool extremal_contains_n = false;
};

/// The exclusion pairs (x - m, x) for x in [2m, n]. With m in A each pair
/// holds at most one member. When n = 3m and n is in A, the pairs for x = 2m
/// and x = n both exclude 2m; double_counted reports that x (= n) and
/// exclusion_count drops by one.
struct PairAnalysis {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    std::optional<unsigned> double_counted;
    unsigned exclusion_count = 0;

    /// (n - m + 1) - exclusion_count when n >= 2m.
    std::optional<unsigned> implied_bound() const;
};

PairAnalysis pair_exclusion_analysis(unsigned n, unsigned m);

BoundVerdict make_verdict(const GEntry& g, const std::optional<GEntry>& g_with_n);

/// Verdicts for every 1 <= m <= n <= n_max in (n, m) order.
std::vector<BoundVerdict> scan_bound_violations(unsigned n_max, const SearchConfig& config);

/// Maximum-cardinality sets with n = 3m, n in A and |A| = m + 1, over all
/// n <= n_max, ordered by n.
std::vector<SetRecord> find_tight_exceptions(unsigned n_max, const SearchConfig& config);

}  // namespace sumfree

#pragma once

#include "sumfree/integer_set.hpp"
#include "sumfree/set_record.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sumfree {

/// The pruned engines keep search state in one machine word.
inline constexpr unsigned kEngineMaxUniverse = 63;

/// Hard cap of the brute-force oracle (2^n subsets).
inline constexpr unsigned kOracleMaxUniverse = 20;

struct SearchConfig {
    unsigned max_n = 32;       // runtime cap on the universe bound
    unsigned parallel = 1;     // worker threads
    unsigned prefix_depth = 2; // decisions made serially before farming subtrees

    /// Throws UsageError unless 1 <= max_n <= kEngineMaxUniverse and parallel >= 1.
    void validate() const;
    /// Throws UsageError if n is 0 or above max_n.
    void require_within_cap(unsigned n, const char* what) const;
};

/// One exact value g(n, m): the largest sum-free subset of [1, n] whose
/// smallest element is exactly m.
struct GEntry {
    unsigned n = 0;
    unsigned m = 0;
    unsigned g_value = 0;
    IntegerSet witness{1};
    std::uint64_t node_count = 0;

    friend bool operator==(const GEntry&, const GEntry&) = default;
};

/// Every subset of [1, n] tested one by one; n <= kOracleMaxUniverse.
/// Returned in increasing bit-pattern order, empty set first.
std::vector<IntegerSet> oracle_enumerate_sum_free(unsigned n);

/// Streams every sum-free subset of [1, n] (empty set included) in
/// depth-first order with ascending candidates. Serial.
void for_each_sum_free(unsigned n, const SearchConfig& config,
                       const std::function<void(const IntegerSet&)>& visit);

/// Same family and order as for_each_sum_free; subtrees may be searched by
/// config.parallel workers.
std::vector<IntegerSet> enumerate_sum_free(unsigned n, const SearchConfig& config);

/// Sum-free sets of cardinality floor((n+1)/2), in lexicographic order of
/// their sorted members.
std::vector<SetRecord> enumerate_maximum_sets(unsigned n, const SearchConfig& config);

/// Sum-free sets with no sum-free proper superset in [1, n], same order.
std::vector<SetRecord> enumerate_maximal_sets(unsigned n, const SearchConfig& config);

/// Exact g(n, m) by branch and bound over candidates in (m, n]. Among
/// optimal sets the witness has the smallest bit pattern.
GEntry compute_g(unsigned n, unsigned m, const SearchConfig& config);

/// Like compute_g but restricted to sets that also contain n. Absent when no
/// sum-free set has min m and contains n (only when n = 2m).
std::optional<GEntry> compute_g_containing_max(unsigned n, unsigned m, const SearchConfig& config);

/// compute_g for each (n, m) cell, spread over config.parallel workers.
/// Output order matches input order.
std::vector<GEntry> compute_g_cells(const std::vector<std::pair<unsigned, unsigned>>& cells,
                                    const SearchConfig& config);

/// Every (n, m) with 1 <= m <= n <= n_max, in (n, m) ascending order.
std::vector<std::pair<unsigned, unsigned>> g_table_cells(unsigned n_max);

std::vector<GEntry> g_table(unsigned n_max, const SearchConfig& config);

}  // namespace sumfree

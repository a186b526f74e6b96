#include "sumfree/search.hpp"

#include "parallel.hpp"

#include <bit>

namespace sumfree {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned x) noexcept { return Mask{1} << x; }

// Bits lo..hi inclusive; empty when lo > hi. Requires hi <= 63.
constexpr Mask range_mask(unsigned lo, unsigned hi) noexcept
{
    if (lo > hi)
        return 0;
    const Mask upto_hi = hi >= 63 ? ~Mask{0} : bit(hi + 1) - 1;
    return upto_hi & ~(bit(lo) - 1);
}

// Members are added in ascending order, so a later candidate j can only
// break sum-freeness as j = x + y with x, y already chosen; `forbidden`
// holds exactly those sums.
struct Node {
    Mask set = 0;
    Mask forbidden = 0;
    unsigned last = 0;
    unsigned size = 0;
};

Node extend(const Node& node, unsigned k) noexcept
{
    const Mask set = node.set | bit(k);
    return {set, node.forbidden | (set << k), k, node.size + 1};
}

Mask candidates(const Node& node, unsigned n) noexcept
{
    return range_mask(node.last + 1, n) & ~node.forbidden;
}

unsigned popcount(Mask m) noexcept { return static_cast<unsigned>(std::popcount(m)); }

// Every k in [1, n] \ s creates a sum (k = x + y), a difference (k + x in s),
// or a double (2k in s). s is assumed sum-free.
bool is_maximal_mask(Mask s, unsigned n) noexcept
{
    if (s == 0)
        return false;
    Mask blocked = s;
    for (Mask rest = s; rest; rest &= rest - 1) {
        const unsigned x = static_cast<unsigned>(std::countr_zero(rest));
        blocked |= (s << x) | (s >> x);
        if (x % 2 == 0)
            blocked |= bit(x / 2);
    }
    const Mask universe = range_mask(1, n);
    return (blocked & universe) == universe;
}

// One unit of enumeration work, in depth-first preorder. Shallow items only
// emit their own node; subtree items own the whole subtree below them.
struct WorkItem {
    Node node;
    bool subtree = false;
};

template <typename Policy>
void walk_subtree(const Node& node, unsigned n, const Policy& policy, std::vector<Mask>& out)
{
    if (policy.emit(node))
        out.push_back(node.set);
    if (!policy.descend(node, n))
        return;
    for (Mask c = candidates(node, n); c; c &= c - 1)
        walk_subtree(extend(node, static_cast<unsigned>(std::countr_zero(c))), n, policy, out);
}

template <typename Policy>
void split_prefix(const Node& node, unsigned n, unsigned depth, const Policy& policy,
                  std::vector<WorkItem>& items)
{
    if (depth == 0) {
        items.push_back({node, true});
        return;
    }
    items.push_back({node, false});
    if (!policy.descend(node, n))
        return;
    for (Mask c = candidates(node, n); c; c &= c - 1)
        split_prefix(extend(node, static_cast<unsigned>(std::countr_zero(c))), n, depth - 1, policy,
                     items);
}

template <typename Policy>
std::vector<Mask> run_engine(unsigned n, const SearchConfig& config, const Policy& policy)
{
    std::vector<WorkItem> items;
    split_prefix(Node{}, n, config.prefix_depth, policy, items);

    std::vector<std::vector<Mask>> results(items.size());
    detail::parallel_for(items.size(), config.parallel, [&](std::size_t i) {
        const WorkItem& item = items[i];
        if (item.subtree)
            walk_subtree(item.node, n, policy, results[i]);
        else if (policy.emit(item.node))
            results[i].push_back(item.node.set);
    });

    std::vector<Mask> merged;
    for (auto& r : results)
        merged.insert(merged.end(), r.begin(), r.end());
    return merged;
}

struct AllSets {
    bool emit(const Node&) const noexcept { return true; }
    bool descend(const Node&, unsigned) const noexcept { return true; }
};

struct MaximumSets {
    unsigned target;
    bool emit(const Node& node) const noexcept { return node.size == target; }
    bool descend(const Node& node, unsigned n) const noexcept
    {
        return node.size < target && node.size + popcount(candidates(node, n)) >= target;
    }
};

struct MaximalSets {
    unsigned n;
    bool emit(const Node& node) const noexcept { return is_maximal_mask(node.set, n); }
    bool descend(const Node&, unsigned) const noexcept { return true; }
};

std::vector<SetRecord> to_records(unsigned n, const std::vector<Mask>& masks)
{
    std::vector<SetRecord> out;
    out.reserve(masks.size());
    for (Mask m : masks)
        out.push_back(make_record(IntegerSet::from_mask(n, m)));
    return out;
}

struct Incumbent {
    bool found = false;
    unsigned size = 0;
    Mask set = 0;
};

void branch_and_bound(const Node& node, unsigned n, bool require_top, Incumbent& best,
                      std::uint64_t& nodes)
{
    ++nodes;
    const bool has_top = (node.set & bit(n)) != 0;
    if (!require_top || has_top) {
        if (!best.found || node.size > best.size || (node.size == best.size && node.set < best.set))
            best = {true, node.size, node.set};
    }

    const Mask c = candidates(node, n);
    if (require_top && !has_top && !(c & bit(n)))
        return;
    // Ties are explored: an equal-size set with a smaller bit pattern wins.
    if (best.found && node.size + popcount(c) < best.size)
        return;
    for (Mask rest = c; rest; rest &= rest - 1)
        branch_and_bound(extend(node, static_cast<unsigned>(std::countr_zero(rest))), n, require_top,
                         best, nodes);
}

std::optional<GEntry> best_with_min(unsigned n, unsigned m, bool require_top,
                                    const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n, "g(n, m)");
    if (m < 1 || m > n)
        throw UsageError("g(n, m) needs 1 <= m <= n, got n=" + std::to_string(n) +
                         " m=" + std::to_string(m));

    Incumbent best;
    std::uint64_t nodes = 0;
    branch_and_bound(extend(Node{}, m), n, require_top, best, nodes);
    if (!best.found)
        return std::nullopt;
    return GEntry{n, m, best.size, IntegerSet::from_mask(n, best.set), nodes};
}

}  // namespace

void SearchConfig::validate() const
{
    if (max_n < 1 || max_n > kEngineMaxUniverse)
        throw UsageError("max_n must be in [1, " + std::to_string(kEngineMaxUniverse) + "], got " +
                         std::to_string(max_n));
    if (parallel < 1)
        throw UsageError("parallel must be at least 1");
}

void SearchConfig::require_within_cap(unsigned n, const char* what) const
{
    if (n < 1 || n > max_n)
        throw UsageError(std::string(what) + ": n=" + std::to_string(n) + " outside [1, " +
                         std::to_string(max_n) + "] (raise the cap with --cap or SUMFREE_MAX_N)");
}

void for_each_sum_free(unsigned n, const SearchConfig& config,
                       const std::function<void(const IntegerSet&)>& visit)
{
    config.validate();
    config.require_within_cap(n, "enumerate");
    auto walk = [&](auto&& self, const Node& node) -> void {
        visit(IntegerSet::from_mask(n, node.set));
        for (Mask c = candidates(node, n); c; c &= c - 1)
            self(self, extend(node, static_cast<unsigned>(std::countr_zero(c))));
    };
    walk(walk, Node{});
}

std::vector<IntegerSet> enumerate_sum_free(unsigned n, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n, "enumerate");
    std::vector<IntegerSet> out;
    for (Mask m : run_engine(n, config, AllSets{}))
        out.push_back(IntegerSet::from_mask(n, m));
    return out;
}

std::vector<SetRecord> enumerate_maximum_sets(unsigned n, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n, "enumerate maximum");
    return to_records(n, run_engine(n, config, MaximumSets{maximum_cardinality(n)}));
}

std::vector<SetRecord> enumerate_maximal_sets(unsigned n, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n, "enumerate maximal");
    return to_records(n, run_engine(n, config, MaximalSets{n}));
}

GEntry compute_g(unsigned n, unsigned m, const SearchConfig& config)
{
    // {m} alone always qualifies, so a result exists.
    return *best_with_min(n, m, false, config);
}

std::optional<GEntry> compute_g_containing_max(unsigned n, unsigned m, const SearchConfig& config)
{
    return best_with_min(n, m, true, config);
}

std::vector<GEntry> compute_g_cells(const std::vector<std::pair<unsigned, unsigned>>& cells,
                                    const SearchConfig& config)
{
    config.validate();
    std::vector<GEntry> out(cells.size());
    detail::parallel_for(cells.size(), config.parallel, [&](std::size_t i) {
        out[i] = compute_g(cells[i].first, cells[i].second, config);
    });
    return out;
}

std::vector<std::pair<unsigned, unsigned>> g_table_cells(unsigned n_max)
{
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned m = 1; m <= n; ++m)
            cells.emplace_back(n, m);
    return cells;
}

std::vector<GEntry> g_table(unsigned n_max, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n_max, "g table");
    return compute_g_cells(g_table_cells(n_max), config);
}

}  // namespace sumfree

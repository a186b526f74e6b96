#include "sumfree/bounds.hpp"

#include "parallel.hpp"

namespace sumfree {

namespace {

void require_cell(unsigned n, unsigned m)
{
    if (m < 1 || m > n)
        throw UsageError("bound needs 1 <= m <= n, got n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
}

}  // namespace

std::string_view to_string(BoundCase c) noexcept
{
    switch (c) {
    case BoundCase::UpperThird:
        return "UpperThird";
    case BoundCase::MiddleThird:
        return "MiddleThird";
    case BoundCase::LowerThird:
        return "LowerThird";
    }
    return "?";
}

BoundCase bound_case(unsigned n, unsigned m)
{
    require_cell(n, m);
    if (2 * m > n)
        return BoundCase::UpperThird;
    if (3 * m >= n)
        return BoundCase::MiddleThird;
    return BoundCase::LowerThird;
}

unsigned ce_bound(unsigned n, unsigned m)
{
    switch (bound_case(n, m)) {
    case BoundCase::UpperThird:
        return n - m + 1;
    case BoundCase::MiddleThird:
        return m;
    case BoundCase::LowerThird:
        return (n - m) / 2 + 1;
    }
    return 0;
}

unsigned revised_bound(unsigned n, unsigned m)
{
    require_cell(n, m);
    return n == 3 * m ? m + 1 : ce_bound(n, m);
}

std::optional<unsigned> PairAnalysis::implied_bound() const
{
    if (n < 2 * m)
        return std::nullopt;
    return (n - m + 1) - exclusion_count;
}

PairAnalysis pair_exclusion_analysis(unsigned n, unsigned m)
{
    require_cell(n, m);
    PairAnalysis a{n, m, {}, std::nullopt, 0};
    if (n < 2 * m)
        return a;
    for (unsigned x = 2 * m; x <= n; ++x)
        a.pairs.emplace_back(x - m, x);
    // x - 2m in A with min m forces x - 2m = m.
    if (n == 3 * m)
        a.double_counted = n;
    a.exclusion_count = static_cast<unsigned>(a.pairs.size()) - (a.double_counted ? 1 : 0);
    return a;
}

BoundVerdict make_verdict(const GEntry& g, const std::optional<GEntry>& g_with_n)
{
    BoundVerdict v;
    v.n = g.n;
    v.m = g.m;
    v.case_label = bound_case(g.n, g.m);
    v.ce_bound = ce_bound(g.n, g.m);
    v.revised_bound = revised_bound(g.n, g.m);
    v.g_exact = g.g_value;
    v.ce_violated = g.g_value > v.ce_bound;
    v.revised_violated = g.g_value > v.revised_bound;
    v.tight = g.g_value == v.revised_bound;
    v.witness = g.witness;
    if (g_with_n) {
        v.g_with_n = g_with_n->g_value;
        v.extremal_contains_n = g_with_n->g_value == g.g_value;
    }
    return v;
}

std::vector<BoundVerdict> scan_bound_violations(unsigned n_max, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n_max, "scan bounds");
    const auto cells = g_table_cells(n_max);
    std::vector<BoundVerdict> out(cells.size());
    detail::parallel_for(cells.size(), config.parallel, [&](std::size_t i) {
        const auto [n, m] = cells[i];
        out[i] = make_verdict(compute_g(n, m, config), compute_g_containing_max(n, m, config));
    });
    return out;
}

std::vector<SetRecord> find_tight_exceptions(unsigned n_max, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n_max, "tight exceptions");
    std::vector<SetRecord> out;
    for (unsigned n = 3; n <= n_max; n += 3) {
        const unsigned m = n / 3;
        for (SetRecord& r : enumerate_maximum_sets(n, config))
            if (r.min_element == m && r.set.contains(n) && r.cardinality == m + 1)
                out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sumfree

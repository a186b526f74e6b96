#pragma once

#include "sumfree/bounds.hpp"
#include "sumfree/search.hpp"
#include "sumfree/taxonomy.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sumfree {

using Json = nlohmann::ordered_json;

// g-table: header `n,m,g,witness,nodes`, witness quoted since it holds commas.
std::string g_table_csv(const std::vector<GEntry>& rows);
Json g_table_json(const std::vector<GEntry>& rows);

Json to_json(const GEntry& g);
GEntry g_entry_from_json(const Json& j);

// Verdict table. Keys in order: n, m, case, ce_bound, revised_bound, g_exact,
// ce_violated, revised_violated, tight, witness, then g_with_n and
// extremal_contains_n. The CSV mirror uses the same column order.
Json to_json(const BoundVerdict& v);
Json verdicts_json(const std::vector<BoundVerdict>& verdicts);
std::string verdicts_csv(const std::vector<BoundVerdict>& verdicts);

Json to_json(const SetRecord& r);
Json to_json(const TaxonomyLabel& label);

// Per-n: {n, maximum_count, labels: {class: count}, exceptions: [...],
// lemma1_ok, completeness_ok}. The aggregate adds the global exception list.
Json to_json(const TaxonomyReport& r);
Json taxonomy_json(const std::vector<TaxonomyReport>& reports, const TaxonomySummary& summary);

/// Full description of one set: record fields, classification and, for
/// maximum sets, pair coverage.
Json check_json(const IntegerSet& a);

std::string sets_csv(const std::vector<SetRecord>& records);

}  // namespace sumfree

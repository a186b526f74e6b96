#include "sumfree/report.hpp"

#include <sstream>

namespace sumfree {

namespace {

std::string quoted(const std::string& s) { return '"' + s + '"'; }

const char* flag(bool b) { return b ? "true" : "false"; }

Json set_list(const std::vector<SetRecord>& records)
{
    Json out = Json::array();
    for (const SetRecord& r : records)
        out.push_back(r.set.to_string());
    return out;
}

}  // namespace

Json to_json(const GEntry& g)
{
    return Json{{"n", g.n}, {"m", g.m}, {"g", g.g_value}, {"witness", g.witness.to_string()},
                {"nodes", g.node_count}};
}

GEntry g_entry_from_json(const Json& j)
{
    GEntry g;
    g.n = j.at("n").get<unsigned>();
    g.m = j.at("m").get<unsigned>();
    g.g_value = j.at("g").get<unsigned>();
    g.witness = IntegerSet::parse(j.at("witness").get<std::string>(), g.n);
    g.node_count = j.at("nodes").get<std::uint64_t>();
    if (g.m < 1 || g.m > g.n || g.witness.min_element() != g.m || g.witness.cardinality() != g.g_value)
        throw UsageError("inconsistent g entry for n=" + std::to_string(g.n) + " m=" + std::to_string(g.m));
    return g;
}

std::string g_table_csv(const std::vector<GEntry>& rows)
{
    std::ostringstream os;
    os << "n,m,g,witness,nodes\n";
    for (const GEntry& g : rows)
        os << g.n << ',' << g.m << ',' << g.g_value << ',' << quoted(g.witness.to_string()) << ','
           << g.node_count << '\n';
    return os.str();
}

Json g_table_json(const std::vector<GEntry>& rows)
{
    Json out = Json::array();
    for (const GEntry& g : rows)
        out.push_back(to_json(g));
    return out;
}

Json to_json(const BoundVerdict& v)
{
    Json j{{"n", v.n},
           {"m", v.m},
           {"case", std::string(to_string(v.case_label))},
           {"ce_bound", v.ce_bound},
           {"revised_bound", v.revised_bound},
           {"g_exact", v.g_exact},
           {"ce_violated", v.ce_violated},
           {"revised_violated", v.revised_violated},
           {"tight", v.tight},
           {"witness", v.witness.to_string()}};
    j["g_with_n"] = v.g_with_n ? Json(*v.g_with_n) : Json(nullptr);
    j["extremal_contains_n"] = v.extremal_contains_n;
    return j;
}

Json verdicts_json(const std::vector<BoundVerdict>& verdicts)
{
    Json out = Json::array();
    for (const BoundVerdict& v : verdicts)
        out.push_back(to_json(v));
    return out;
}

std::string verdicts_csv(const std::vector<BoundVerdict>& verdicts)
{
    std::ostringstream os;
    os << "n,m,case,ce_bound,revised_bound,g_exact,ce_violated,revised_violated,tight,witness,g_with_n,"
          "extremal_contains_n\n";
    for (const BoundVerdict& v : verdicts) {
        os << v.n << ',' << v.m << ',' << to_string(v.case_label) << ',' << v.ce_bound << ','
           << v.revised_bound << ',' << v.g_exact << ',' << flag(v.ce_violated) << ','
           << flag(v.revised_violated) << ',' << flag(v.tight) << ',' << quoted(v.witness.to_string())
           << ',';
        if (v.g_with_n)
            os << *v.g_with_n;
        os << ',' << flag(v.extremal_contains_n) << '\n';
    }
    return os.str();
}

Json to_json(const SetRecord& r)
{
    Json j{{"set", r.set.to_string()}, {"n", r.universe_bound()}};
    j["min"] = r.min_element ? Json(*r.min_element) : Json(nullptr);
    j["max"] = r.max_element ? Json(*r.max_element) : Json(nullptr);
    j["cardinality"] = r.cardinality;
    j["sum_free"] = r.is_sum_free;
    j["maximal"] = r.is_maximal;
    j["maximum"] = r.is_maximum;
    return j;
}

Json to_json(const TaxonomyLabel& label)
{
    Json classes = Json::array();
    for (TaxonomyClass c : label.classes)
        classes.push_back(std::string(to_string(c)));
    Json j{{"classes", classes}};
    j["exception"] = label.exception ? Json(std::string(to_string(*label.exception))) : Json(nullptr);
    j["unclassified"] = label.unclassified();
    return j;
}

Json to_json(const TaxonomyReport& r)
{
    Json labels = Json::object();
    for (TaxonomyClass c : kAllClasses) {
        const auto it = r.class_counts.find(c);
        labels[std::string(to_string(c))] = it == r.class_counts.end() ? 0u : it->second;
    }
    return Json{{"n", r.n},
                {"maximum_count", r.total_maximum_sets},
                {"labels", labels},
                {"exceptions", set_list(r.exceptions_found)},
                {"unclassified", set_list(r.unclassified_found)},
                {"lemma1_ok", r.lemma1_ok},
                {"completeness_ok", r.completeness_ok}};
}

Json taxonomy_json(const std::vector<TaxonomyReport>& reports, const TaxonomySummary& summary)
{
    Json per_n = Json::array();
    for (const TaxonomyReport& r : reports)
        per_n.push_back(to_json(r));

    Json exceptions = Json::array();
    for (const SetRecord& r : summary.exceptions) {
        const auto e = classify(r.set).exception;
        exceptions.push_back(Json{{"set", r.set.to_string()}, {"n", r.universe_bound()},
                                  {"label", e ? Json(std::string(to_string(*e))) : Json(nullptr)}});
    }
    return Json{{"reports", per_n},
                {"summary",
                 {{"exceptions", exceptions},
                  {"completeness_ok", summary.completeness_ok},
                  {"lemma1_ok", summary.lemma1_ok},
                  {"exceptions_match_expected", summary.exceptions_match_expected}}}};
}

Json check_json(const IntegerSet& a)
{
    const SetRecord r = make_record(a);
    Json j = to_json(r);
    const TaxonomyLabel label = classify(a);
    const Json lj = to_json(label);
    j["classes"] = lj["classes"];
    j["exception"] = lj["exception"];
    j["unclassified"] = lj["unclassified"];
    j["pair_coverage"] = r.is_maximum ? Json(verify_pair_coverage(a)) : Json(nullptr);
    j["odd_pattern"] = odd_pattern_check(a);
    return j;
}

std::string sets_csv(const std::vector<SetRecord>& records)
{
    std::ostringstream os;
    os << "n,set,min,max,cardinality,maximal,maximum\n";
    for (const SetRecord& r : records) {
        os << r.universe_bound() << ',' << quoted(r.set.to_string()) << ',';
        if (r.min_element)
            os << *r.min_element;
        os << ',';
        if (r.max_element)
            os << *r.max_element;
        os << ',' << r.cardinality << ',' << flag(r.is_maximal) << ',' << flag(r.is_maximum) << '\n';
    }
    return os.str();
}

}  // namespace sumfree

#include "sumfree/cli.hpp"

#include "sumfree/bounds.hpp"
#include "sumfree/cache.hpp"
#include "sumfree/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace sumfree {

namespace {

struct Options {
    unsigned n_max = 0;
    unsigned n = 0;
    unsigned workers = 1;
    unsigned cap = 32;
    unsigned prefix_depth = 2;
    std::string cache;
    std::string out;
    std::string format;
    std::string kind = "maximum";
    std::string set_text;
};

SearchConfig make_config(const Options& o)
{
    SearchConfig c{o.cap, o.workers, o.prefix_depth};
    c.validate();
    return c;
}

void emit(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open output file " + o.out);
    f << text;
    f.close();
    if (!f)
        throw std::runtime_error("cannot write output file " + o.out);
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

// Holds the cache lock for the lifetime of one command.
class CacheSession {
public:
    CacheSession(const std::string& path, const CliHooks& hooks)
        : path_(path), lock_(path), load_(load_cache(path, engine_fingerprint())), hooks_(hooks)
    {
    }

    CacheFile& cache() { return load_.cache; }
    void mark_dirty() { dirty_ = true; }

    std::string describe() const
    {
        switch (load_.status) {
        case CacheStatus::Missing:
            return "cache " + path_ + ": new";
        case CacheStatus::Loaded:
            return "cache " + path_ + ": loaded";
        case CacheStatus::Discarded:
            return "cache " + path_ + ": discarded (" + load_.reason + ")";
        }
        return {};
    }

    void commit()
    {
        if (dirty_ || load_.status != CacheStatus::Loaded)
            save_cache_atomic(path_, load_.cache, hooks_.before_cache_rename);
    }

private:
    std::string path_;
    CacheLock lock_;
    CacheLoad load_;
    const CliHooks& hooks_;
    bool dirty_ = false;
};

std::vector<SetRecord> records_from_digest(const MaximumDigest& d)
{
    std::vector<IntegerSet> sets;
    for (const std::string& s : d.sets)
        sets.push_back(IntegerSet::parse(s, d.n));
    // Engine order is lexicographic in sorted members; digests hold string order.
    std::sort(sets.begin(), sets.end(), [](const IntegerSet& a, const IntegerSet& b) {
        const auto ma = a.members(), mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    });
    std::vector<SetRecord> out;
    for (const IntegerSet& s : sets)
        out.push_back(make_record(s));
    return out;
}

std::vector<SetRecord> maximum_sets(unsigned n, const SearchConfig& config, CacheSession* session)
{
    if (session) {
        auto& digests = session->cache().maximum_digests;
        if (const auto it = digests.find(n); it != digests.end())
            return records_from_digest(it->second);
        std::vector<SetRecord> sets = enumerate_maximum_sets(n, config);
        digests.emplace(n, make_digest(n, sets));
        session->mark_dirty();
        return sets;
    }
    return enumerate_maximum_sets(n, config);
}

void open_cache(std::optional<CacheSession>& session, const Options& o, const CliHooks& hooks,
                std::ostream& err)
{
    if (!o.cache.empty()) {
        session.emplace(o.cache, hooks);
        err << session->describe() << '\n';
    }
}

int cmd_check(const Options& o, std::ostream& out)
{
    if (o.n < 1 || o.n > IntegerSet::kMaxOperandUniverse)
        throw UsageError("--n must be in [1, " + std::to_string(IntegerSet::kMaxOperandUniverse) + "]");
    const IntegerSet a = IntegerSet::parse(o.set_text, o.n);
    emit(pretty(check_json(a)), o, out);
    return kExitOk;
}

int cmd_gtable(const Options& o, const CliHooks& hooks, std::ostream& out, std::ostream& err)
{
    const SearchConfig config = make_config(o);
    config.require_within_cap(o.n_max, "gtable");
    std::optional<CacheSession> session;
    open_cache(session, o, hooks, err);

    const auto cells = g_table_cells(o.n_max);
    std::vector<std::pair<unsigned, unsigned>> missing;
    for (const auto& cell : cells)
        if (!session || !session->cache().g_entries.contains(cell))
            missing.push_back(cell);
    const std::vector<GEntry> computed = compute_g_cells(missing, config);

    std::vector<GEntry> rows;
    rows.reserve(cells.size());
    if (session) {
        for (const GEntry& g : computed)
            session->cache().g_entries.emplace(std::make_pair(g.n, g.m), g);
        if (!computed.empty())
            session->mark_dirty();
        for (const auto& cell : cells)
            rows.push_back(session->cache().g_entries.at(cell));
    } else {
        rows = computed;
    }

    emit(o.format == "json" ? pretty(g_table_json(rows)) : g_table_csv(rows), o, out);
    err << "gtable: " << rows.size() << " rows (" << rows.size() - computed.size() << " cached, "
        << computed.size() << " computed)\n";
    if (session)
        session->commit();
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err)
{
    const SearchConfig config = make_config(o);
    std::vector<SetRecord> records;
    if (o.kind == "all") {
        for (const IntegerSet& s : enumerate_sum_free(o.n, config))
            records.push_back(make_record(s));
    } else if (o.kind == "maximal") {
        records = enumerate_maximal_sets(o.n, config);
    } else {
        records = enumerate_maximum_sets(o.n, config);
    }
    if (o.format == "json") {
        Json arr = Json::array();
        for (const SetRecord& r : records)
            arr.push_back(to_json(r));
        emit(pretty(arr), o, out);
    } else {
        emit(sets_csv(records), o, out);
    }
    err << "enumerate: " << records.size() << ' ' << o.kind << " sets for n=" << o.n << '\n';
    return kExitOk;
}

int cmd_scan_bounds(const Options& o, std::ostream& out, std::ostream& err)
{
    const SearchConfig config = make_config(o);
    const std::vector<BoundVerdict> verdicts = scan_bound_violations(o.n_max, config);
    emit(o.format == "csv" ? verdicts_csv(verdicts) : pretty(verdicts_json(verdicts)), o, out);

    unsigned revised = 0;
    bool characterized = true;
    std::ostringstream ce;
    for (const BoundVerdict& v : verdicts) {
        if (v.ce_violated) {
            ce << " (" << v.n << ',' << v.m << ')';
            characterized = characterized && v.n == 3 * v.m && v.extremal_contains_n;
        }
        if (v.revised_violated) {
            ++revised;
            err << "revised bound violated at (" << v.n << ',' << v.m << "): g=" << v.g_exact
                << " witness " << v.witness.to_string() << '\n';
        }
    }
    const std::string ce_list = ce.str();
    err << "ce violations:" << (ce_list.empty() ? " none" : ce_list) << '\n';
    err << "every ce violation at n=3m with an extremal witness containing n: "
        << (characterized ? "yes" : "no") << '\n';
    err << "revised violations: " << revised << '\n';
    return revised == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_taxonomy(const Options& o, const CliHooks& hooks, std::ostream& out, std::ostream& err)
{
    const SearchConfig config = make_config(o);
    config.require_within_cap(o.n_max, "verify-taxonomy");
    std::optional<CacheSession> session;
    open_cache(session, o, hooks, err);
    CacheSession* s = session ? &*session : nullptr;

    const Classifier classifier = hooks.classifier ? hooks.classifier : Classifier(classify);
    const auto reports = verify_taxonomy_completeness(
        o.n_max, [&](unsigned n) { return maximum_sets(n, config, s); }, classifier);
    const TaxonomySummary summary = summarize(reports, o.n_max);
    emit(pretty(taxonomy_json(reports, summary)), o, out);

    err << "exceptions:";
    for (const SetRecord& r : summary.exceptions)
        err << ' ' << r.set.to_string();
    err << (summary.exceptions.empty() ? " none\n" : "\n");
    for (ExceptionSet e : kAllExceptions) {
        const unsigned native = exception_set(e).universe_bound();
        if (native > o.n_max) {
            err << "note: range excludes n>=" << native << '\n';
            break;
        }
    }
    for (const TaxonomyReport& r : reports)
        for (const SetRecord& u : r.unclassified_found)
            err << "unclassified maximum set at n=" << r.n << ": " << u.set.to_string() << '\n';
    err << "completeness: " << (summary.completeness_ok ? "ok" : "FAILED") << '\n';
    err << "exception list matches known four: " << (summary.exceptions_match_expected ? "yes" : "no")
        << '\n';

    if (session)
        session->commit();
    return summary.completeness_ok && summary.exceptions_match_expected ? kExitOk : kExitVerificationFailed;
}

bool same_sets(const std::vector<SetRecord>& got, const std::vector<IntegerSet>& want)
{
    return std::equal(got.begin(), got.end(), want.begin(), want.end(),
                      [](const SetRecord& r, const IntegerSet& s) { return r.set == s; });
}

std::vector<IntegerSet> expected_with_min(unsigned n_max, unsigned min_element)
{
    std::vector<IntegerSet> out;
    for (IntegerSet& s : expected_exceptions(n_max))
        if (s.min_element() == min_element)
            out.push_back(std::move(s));
    return out;
}

int cmd_verify_lemmas(const Options& o, std::ostream& out, std::ostream& err)
{
    const SearchConfig config = make_config(o);
    config.require_within_cap(o.n_max, "verify-lemmas");

    const auto lemma1 = verify_lemma_min_element(o.n_max, config);
    bool lemma1_ok = true;
    Json lemma1_json = Json::array();
    for (const LemmaCheck& c : lemma1) {
        lemma1_ok = lemma1_ok && c.ok;
        Json bad = Json::array();
        for (const SetRecord& r : c.counterexamples)
            bad.push_back(r.set.to_string());
        lemma1_json.push_back(Json{{"n", c.n}, {"ok", c.ok}, {"counterexamples", bad}});
    }

    const auto m1 = verify_m1_exceptions(o.n_max, config);
    const auto m2 = verify_m2_exceptions(o.n_max, config);
    const bool m1_ok = same_sets(m1, expected_with_min(o.n_max, 1));
    const bool m2_ok = same_sets(m2, expected_with_min(o.n_max, 2));

    bool coverage_ok = true;
    bool odd_pattern_ok = true;
    Json coverage_failures = Json::array();
    for (unsigned n = 1; n <= o.n_max; ++n) {
        for (const SetRecord& r : enumerate_maximum_sets(n, config)) {
            if (r.min_element <= 2u && !verify_pair_coverage(r.set)) {
                coverage_ok = false;
                coverage_failures.push_back(Json{{"n", n}, {"set", r.set.to_string()}});
            }
            if (n >= 7 && r.min_element == 1u && !odd_pattern_check(r.set))
                odd_pattern_ok = false;
        }
    }

    const auto tight = find_tight_exceptions(o.n_max, config);
    Json tight_json = Json::array();
    for (const SetRecord& r : tight)
        tight_json.push_back(Json{{"n", r.universe_bound()}, {"set", r.set.to_string()}});

    auto set_strings = [](const std::vector<SetRecord>& rs) {
        Json a = Json::array();
        for (const SetRecord& r : rs)
            a.push_back(r.set.to_string());
        return a;
    };
    const Json report{{"n_max", o.n_max},
                      {"lemma_min_element", {{"ok", lemma1_ok}, {"per_n", lemma1_json}}},
                      {"m1_exceptions", {{"ok", m1_ok}, {"sets", set_strings(m1)}}},
                      {"m2_exceptions", {{"ok", m2_ok}, {"sets", set_strings(m2)}}},
                      {"pair_coverage", {{"ok", coverage_ok}, {"failures", coverage_failures}}},
                      {"odd_pattern_min1_n_ge_7", odd_pattern_ok},
                      {"tight_exceptions", tight_json}};
    emit(pretty(report), o, out);

    const bool ok = lemma1_ok && m1_ok && m2_ok && coverage_ok && odd_pattern_ok;
    err << "lemma (no maximum set with 3 <= min < floor((n+1)/2)): " << (lemma1_ok ? "ok" : "FAILED") << '\n'
        << "min-1 exceptions: " << set_strings(m1).dump() << (m1_ok ? " ok" : " FAILED") << '\n'
        << "min-2 exceptions: " << set_strings(m2).dump() << (m2_ok ? " ok" : " FAILED") << '\n'
        << "pair coverage: " << (coverage_ok ? "ok" : "FAILED") << '\n'
        << "odd pattern: " << (odd_pattern_ok ? "ok" : "FAILED") << '\n';
    return ok ? kExitOk : kExitVerificationFailed;
}

// range checks live in SearchConfig::validate; CLI11 would silently drop an invalid env value
void add_common(CLI::App* sub, Options& o, bool with_cache)
{
    sub->add_option("--workers", o.workers, "Worker threads")->envname("SUMFREE_WORKERS");
    sub->add_option("--cap", o.cap, "Runtime cap on n for exhaustive search")
        ->envname("SUMFREE_MAX_N");
    sub->add_option("--prefix-depth", o.prefix_depth, "Serial branching depth before subtrees are farmed out");
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    if (with_cache)
        sub->add_option("--cache", o.cache, "Persistent cache file")->envname("SUMFREE_CACHE");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks)
{
    CLI::App app{"Exhaustive verification toolkit for sum-free subsets of [1,n]", "sumfree"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Describe one set: sum-free, maximal, maximum, classification");
    check->add_option("set", o.set_text, "Set literal such as {2,5,6}")->required();
    check->add_option("--n", o.n, "Universe bound")->required();
    check->add_option("--out", o.out, "Write the report here instead of stdout");
    check->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));

    auto* gtable = app.add_subcommand("gtable", "Exact g(n,m) for every 1 <= m <= n <= n-max");
    gtable->add_option("--n-max", o.n_max, "Largest n")->required();
    gtable->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    add_common(gtable, o, true);

    auto* enumerate = app.add_subcommand("enumerate", "List sum-free subsets of [1,n]");
    enumerate->add_option("--n", o.n, "Universe bound")->required();
    enumerate->add_option("--kind", o.kind, "all | maximal | maximum")
        ->check(CLI::IsMember({"all", "maximal", "maximum"}));
    enumerate->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    add_common(enumerate, o, false);

    auto* scan = app.add_subcommand("scan-bounds", "Compare exact g(n,m) against both bounds");
    scan->add_option("--n-max", o.n_max, "Largest n")->required();
    scan->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    add_common(scan, o, false);

    auto* taxonomy = app.add_subcommand("verify-taxonomy", "Classify every maximum-cardinality set");
    taxonomy->add_option("--n-max", o.n_max, "Largest n")->required();
    taxonomy->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
    add_common(taxonomy, o, true);

    auto* lemmas = app.add_subcommand("verify-lemmas", "Check the structural lemmas on maximum sets");
    lemmas->add_option("--n-max", o.n_max, "Largest n")->required();
    lemmas->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
    add_common(lemmas, o, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (check->parsed())
            return cmd_check(o, out);
        if (gtable->parsed())
            return cmd_gtable(o, hooks, out, err);
        if (enumerate->parsed())
            return cmd_enumerate(o, out, err);
        if (scan->parsed())
            return cmd_scan_bounds(o, out, err);
        if (taxonomy->parsed())
            return cmd_verify_taxonomy(o, hooks, out, err);
        if (lemmas->parsed())
            return cmd_verify_lemmas(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace sumfree

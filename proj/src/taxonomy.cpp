#include "sumfree/taxonomy.hpp"

#include <algorithm>

namespace sumfree {

std::string_view to_string(TaxonomyClass c) noexcept
{
    switch (c) {
    case TaxonomyClass::OddNumbers:
        return "OddNumbers";
    case TaxonomyClass::OddUpperInterval:
        return "OddUpperInterval";
    case TaxonomyClass::EvenIntervalLow:
        return "EvenIntervalLow";
    case TaxonomyClass::EvenIntervalHigh:
        return "EvenIntervalHigh";
    }
    return "?";
}

std::string_view to_string(ExceptionSet e) noexcept
{
    switch (e) {
    case ExceptionSet::E14:
        return "E14";
    case ExceptionSet::E146:
        return "E146";
    case ExceptionSet::E256:
        return "E256";
    case ExceptionSet::E2378:
        return "E2378";
    }
    return "?";
}

IntegerSet exception_set(ExceptionSet e)
{
    switch (e) {
    case ExceptionSet::E14:
        return IntegerSet::from_members(4, {1, 4});
    case ExceptionSet::E146:
        return IntegerSet::from_members(6, {1, 4, 6});
    case ExceptionSet::E256:
        return IntegerSet::from_members(6, {2, 5, 6});
    case ExceptionSet::E2378:
        return IntegerSet::from_members(8, {2, 3, 7, 8});
    }
    throw UsageError("unknown exception set");
}

std::optional<IntegerSet> class_set(TaxonomyClass c, unsigned n)
{
    const bool odd = n % 2 == 1;
    switch (c) {
    case TaxonomyClass::OddNumbers:
        return IntegerSet::odd_numbers(n);
    case TaxonomyClass::OddUpperInterval:
        if (!odd)
            return std::nullopt;
        return IntegerSet::interval(n, (n + 1) / 2, n);
    case TaxonomyClass::EvenIntervalLow:
        if (odd)
            return std::nullopt;
        return IntegerSet::interval(n, n / 2, n - 1);
    case TaxonomyClass::EvenIntervalHigh:
        if (odd)
            return std::nullopt;
        return IntegerSet::interval(n, n / 2 + 1, n);
    }
    return std::nullopt;
}

TaxonomyLabel classify(const IntegerSet& a)
{
    TaxonomyLabel label;
    const unsigned n = a.universe_bound();
    for (TaxonomyClass c : kAllClasses) {
        const auto members = class_set(c, n);
        if (members && *members == a)
            label.classes.push_back(c);
    }
    if (label.classes.empty()) {
        for (ExceptionSet e : kAllExceptions) {
            if (exception_set(e) == a) {
                label.exception = e;
                break;
            }
        }
    }
    return label;
}

namespace {

bool violates_lemma1(const SetRecord& r)
{
    const unsigned upper = maximum_cardinality(r.universe_bound());
    return r.min_element && *r.min_element >= 3 && *r.min_element < upper;
}

LemmaCheck lemma1_check(unsigned n, const std::vector<SetRecord>& maximum_sets)
{
    LemmaCheck check{n, true, {}};
    for (const SetRecord& r : maximum_sets)
        if (violates_lemma1(r))
            check.counterexamples.push_back(r);
    check.ok = check.counterexamples.empty();
    return check;
}

std::vector<SetRecord> unclassified_with_min(unsigned n_max, const SearchConfig& config,
                                             unsigned min_element)
{
    config.validate();
    config.require_within_cap(n_max, "exception scan");
    std::vector<SetRecord> out;
    for (unsigned n = 1; n <= n_max; ++n)
        for (SetRecord& r : enumerate_maximum_sets(n, config))
            if (r.min_element == min_element && classify(r.set).classes.empty())
                out.push_back(std::move(r));
    return out;
}

}  // namespace

std::vector<TaxonomyReport> verify_taxonomy_completeness(unsigned n_max, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n_max, "verify taxonomy");
    return verify_taxonomy_completeness(
        n_max, [&](unsigned n) { return enumerate_maximum_sets(n, config); }, classify);
}

std::vector<TaxonomyReport> verify_taxonomy_completeness(unsigned n_max, const MaximumSetSource& source,
                                                         const Classifier& classifier)
{
    std::vector<TaxonomyReport> reports;
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::vector<SetRecord> sets = source(n);
        TaxonomyReport rep;
        rep.n = n;
        rep.total_maximum_sets = static_cast<unsigned>(sets.size());
        for (const SetRecord& r : sets) {
            const TaxonomyLabel label = classifier(r.set);
            for (TaxonomyClass c : label.classes)
                ++rep.class_counts[c];
            if (!label.classes.empty())
                ++rep.classified_sets;
            else if (label.exception)
                rep.exceptions_found.push_back(r);
            else
                rep.unclassified_found.push_back(r);
        }
        rep.lemma1_ok = lemma1_check(n, sets).ok;
        rep.completeness_ok = rep.unclassified_found.empty();
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<IntegerSet> expected_exceptions(unsigned n_max)
{
    std::vector<IntegerSet> out;
    for (ExceptionSet e : kAllExceptions) {
        IntegerSet s = exception_set(e);
        if (s.universe_bound() <= n_max)
            out.push_back(std::move(s));
    }
    return out;
}

TaxonomySummary summarize(const std::vector<TaxonomyReport>& reports, unsigned n_max)
{
    TaxonomySummary s;
    s.completeness_ok = true;
    s.lemma1_ok = true;
    for (const TaxonomyReport& r : reports) {
        s.completeness_ok = s.completeness_ok && r.completeness_ok;
        s.lemma1_ok = s.lemma1_ok && r.lemma1_ok;
        s.exceptions.insert(s.exceptions.end(), r.exceptions_found.begin(), r.exceptions_found.end());
    }
    const std::vector<IntegerSet> expected = expected_exceptions(n_max);
    s.exceptions_match_expected =
        std::equal(s.exceptions.begin(), s.exceptions.end(), expected.begin(), expected.end(),
                   [](const SetRecord& r, const IntegerSet& e) { return r.set == e; });
    return s;
}

std::vector<LemmaCheck> verify_lemma_min_element(unsigned n_max, const SearchConfig& config)
{
    config.validate();
    config.require_within_cap(n_max, "lemma scan");
    std::vector<LemmaCheck> out;
    for (unsigned n = 1; n <= n_max; ++n)
        out.push_back(lemma1_check(n, enumerate_maximum_sets(n, config)));
    return out;
}

std::vector<SetRecord> verify_m1_exceptions(unsigned n_max, const SearchConfig& config)
{
    return unclassified_with_min(n_max, config, 1);
}

std::vector<SetRecord> verify_m2_exceptions(unsigned n_max, const SearchConfig& config)
{
    return unclassified_with_min(n_max, config, 2);
}

bool verify_pair_coverage(const IntegerSet& a)
{
    const unsigned n = a.universe_bound();
    if (!is_sum_free(a) || a.cardinality() != maximum_cardinality(n))
        throw UsageError("pair coverage needs a maximum-cardinality sum-free set, got " + a.to_string() +
                         " in [1, " + std::to_string(n) + "]");
    const unsigned p = *a.max_element();
    for (unsigned k = 1; k + 1 <= maximum_cardinality(n); ++k) {
        const unsigned partner = p - k;
        if (partner == k) {
            if (a.contains(k))
                return false;
        } else if (a.contains(k) == a.contains(partner)) {
            return false;
        }
    }
    return true;
}

bool odd_pattern_check(const IntegerSet& a)
{
    const auto p = a.max_element();
    if (!p || *p % 2 == 0)
        return false;
    for (unsigned x = 1; x <= *p; ++x)
        if (a.contains(x) != (x % 2 == 1))
            return false;
    return true;
}

}  // namespace sumfree

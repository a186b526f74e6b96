#pragma once

#include "sumfree/search.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace sumfree {

/// The classical families of maximum-cardinality sum-free subsets of [1, n].
enum class TaxonomyClass {
    OddNumbers,       // all odd values in [1, n]
    OddUpperInterval, // [(n+1)/2, n], n odd
    EvenIntervalLow,  // [n/2, n-1], n even
    EvenIntervalHigh, // [n/2+1, n], n even
};

/// Maximum-cardinality sets outside every family, keyed on (set, n).
enum class ExceptionSet {
    E14,   // {1,4} at n = 4
    E146,  // {1,4,6} at n = 6
    E256,  // {2,5,6} at n = 6
    E2378, // {2,3,7,8} at n = 8
};

inline constexpr TaxonomyClass kAllClasses[] = {TaxonomyClass::OddNumbers, TaxonomyClass::OddUpperInterval,
                                                TaxonomyClass::EvenIntervalLow,
                                                TaxonomyClass::EvenIntervalHigh};
inline constexpr ExceptionSet kAllExceptions[] = {ExceptionSet::E14, ExceptionSet::E146, ExceptionSet::E256,
                                                  ExceptionSet::E2378};

std::string_view to_string(TaxonomyClass c) noexcept;
std::string_view to_string(ExceptionSet e) noexcept;

/// The exceptional set itself, over its own universe.
IntegerSet exception_set(ExceptionSet e);

/// Members of class c over [1, n]; absent when c needs the other parity.
std::optional<IntegerSet> class_set(TaxonomyClass c, unsigned n);

struct TaxonomyLabel {
    std::vector<TaxonomyClass> classes; // every class that matches, in enum order
    std::optional<ExceptionSet> exception;

    bool unclassified() const noexcept { return classes.empty() && !exception; }

    friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
};

/// Purely structural: compares a against each family at its own universe
/// bound, then against the four exceptions.
TaxonomyLabel classify(const IntegerSet& a);

using Classifier = std::function<TaxonomyLabel(const IntegerSet&)>;

struct TaxonomyReport {
    unsigned n = 0;
    unsigned total_maximum_sets = 0;
    std::map<TaxonomyClass, unsigned> class_counts; // a set with two classes counts in both
    unsigned classified_sets = 0;                   // sets with at least one class
    std::vector<SetRecord> exceptions_found;
    std::vector<SetRecord> unclassified_found;
    bool lemma1_ok = false;
    bool completeness_ok = false;
};

/// Supplies the maximum-cardinality sets for one n.
using MaximumSetSource = std::function<std::vector<SetRecord>(unsigned n)>;

std::vector<TaxonomyReport> verify_taxonomy_completeness(unsigned n_max, const SearchConfig& config);

/// Same scan with the set source and classifier supplied by the caller; the
/// CLI uses this to read cached sets.
std::vector<TaxonomyReport> verify_taxonomy_completeness(unsigned n_max, const MaximumSetSource& source,
                                                         const Classifier& classifier);

struct TaxonomySummary {
    std::vector<SetRecord> exceptions; // across all n, in n order
    bool completeness_ok = false;
    bool lemma1_ok = false;
    /// Exceptions equal the four known sets restricted to n <= n_max.
    bool exceptions_match_expected = false;
};

TaxonomySummary summarize(const std::vector<TaxonomyReport>& reports, unsigned n_max);

/// The four known exceptions with native n <= n_max, in n order.
std::vector<IntegerSet> expected_exceptions(unsigned n_max);

struct LemmaCheck {
    unsigned n = 0;
    bool ok = false;
    std::vector<SetRecord> counterexamples;
};

/// For each n: no maximum-cardinality set has min element in
/// [3, floor((n+1)/2) - 1].
std::vector<LemmaCheck> verify_lemma_min_element(unsigned n_max, const SearchConfig& config);

/// Maximum sets containing 1 that match no class, over n <= n_max.
std::vector<SetRecord> verify_m1_exceptions(unsigned n_max, const SearchConfig& config);

/// Maximum sets with min element 2 that match no class, over n <= n_max.
std::vector<SetRecord> verify_m2_exceptions(unsigned n_max, const SearchConfig& config);

/// With p = max(a): p in a and, for each k in [1, floor((n+1)/2) - 1], a
/// holds exactly one of k, p - k (or, when k = p - k, not k). Throws
/// UsageError unless a is a maximum-cardinality sum-free set.
bool verify_pair_coverage(const IntegerSet& a);

/// a = {1, 3, 5, ..., p} with p = max(a) odd.
bool odd_pattern_check(const IntegerSet& a);

}  // namespace sumfree

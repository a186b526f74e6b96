#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumfree {

/// Raised for caller mistakes: mismatched universes, caps exceeded, broken
/// preconditions. The CLI maps it to exit code 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a set literal cannot be parsed. The message names the token.
class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

/// A subset of [1, n] stored as a fixed-width bit array; bit i is set iff i is
/// a member. Bit 0 is never set.
///
/// Storage is wide enough for universes up to kMaxUniverse so that the sumset
/// of two sets over [1, kMaxOperandUniverse] fits without truncation.
class IntegerSet {
public:
    static constexpr unsigned kMaxOperandUniverse = 128;
    static constexpr unsigned kMaxUniverse = 2 * kMaxOperandUniverse;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords = (kMaxUniverse + 1 + kWordBits - 1) / kWordBits;

    using Words = std::array<std::uint64_t, kWords>;

    /// Empty set over [1, universe_bound]. Throws UsageError if the bound is 0
    /// or exceeds kMaxUniverse.
    explicit IntegerSet(unsigned universe_bound);

    static IntegerSet from_members(unsigned universe_bound, std::span<const unsigned> members);
    static IntegerSet from_members(unsigned universe_bound, std::initializer_list<unsigned> members);

    /// Bit i of mask is member i. Requires universe_bound < 64 and no bits
    /// outside [1, universe_bound].
    static IntegerSet from_mask(unsigned universe_bound, std::uint64_t mask);

    /// [lo, hi] intersected with [1, universe_bound]; empty when lo > hi.
    static IntegerSet interval(unsigned universe_bound, unsigned lo, unsigned hi);
    static IntegerSet odd_numbers(unsigned universe_bound);

    /// Canonical text form `{a,b,c}`. Accepts any order and whitespace;
    /// rejects duplicates and members outside [1, universe_bound].
    static IntegerSet parse(std::string_view text, unsigned universe_bound);

    unsigned universe_bound() const noexcept { return bound_; }
    bool contains(unsigned x) const noexcept;
    unsigned cardinality() const noexcept;
    bool empty() const noexcept;
    std::optional<unsigned> min_element() const noexcept;
    std::optional<unsigned> max_element() const noexcept;
    std::vector<unsigned> members() const;

    IntegerSet with(unsigned x) const;
    IntegerSet without(unsigned x) const;

    /// Same members, smaller or larger universe; members above the new bound
    /// are dropped.
    IntegerSet restricted_to(unsigned universe_bound) const;

    bool intersects(const IntegerSet& other) const noexcept;
    bool is_subset_of(const IntegerSet& other) const noexcept;

    /// Low 64 bits of the membership array; requires universe_bound < 64.
    std::uint64_t to_mask() const;

    const Words& words() const noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

    /// Orders by universe, then by the membership bit array read as an
    /// unsigned integer (bit i has weight 2^i).
    friend bool bit_pattern_less(const IntegerSet& a, const IntegerSet& b) noexcept;

private:
    IntegerSet(unsigned universe_bound, const Words& words) noexcept;
    void set_bit(unsigned x) noexcept;

    friend IntegerSet sumset(const IntegerSet&, const IntegerSet&);

    unsigned bound_;
    Words words_{};
};

/// {x + y : x in a, y in b} over the widened universe [1, 2n]. Both operands
/// must share the universe bound n <= kMaxOperandUniverse.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

/// Positive differences {x - y : x, y in a, x > y} over [1, n].
IntegerSet difference_set(const IntegerSet& a);

/// No x, y, z in a with x + y = z (x = y allowed). The empty set is sum-free.
bool is_sum_free(const IntegerSet& a);

/// No x > y in a with x - y in a.
bool is_difference_free(const IntegerSet& a);

/// Sum-free, and no k in [1, n] outside a can be added keeping it sum-free.
/// Returns false for sets that are not sum-free and for the empty set.
bool is_maximal_sum_free(const IntegerSet& a);

/// floor((n + 1) / 2), the largest possible sum-free subset of [1, n].
constexpr unsigned maximum_cardinality(unsigned n) noexcept { return (n + 1) / 2; }

}  // namespace sumfree

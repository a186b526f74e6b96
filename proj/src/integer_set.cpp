#include "sumfree/integer_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace sumfree {

namespace {

using Words = IntegerSet::Words;
constexpr std::size_t kWordBits = IntegerSet::kWordBits;
constexpr std::size_t kWords = IntegerSet::kWords;

void check_bound(unsigned universe_bound)
{
    if (universe_bound == 0 || universe_bound > IntegerSet::kMaxUniverse)
        throw UsageError("universe bound " + std::to_string(universe_bound) + " outside [1, " +
                         std::to_string(IntegerSet::kMaxUniverse) + "]");
}

// Shift left by k bits, dropping anything past the storage width.
Words shifted_left(const Words& w, unsigned k) noexcept
{
    Words out{};
    const std::size_t word_shift = k / kWordBits;
    const unsigned bit_shift = k % kWordBits;
    for (std::size_t i = kWords; i-- > word_shift;) {
        std::uint64_t v = w[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i - word_shift > 0)
            v |= w[i - word_shift - 1] >> (kWordBits - bit_shift);
        out[i] = v;
    }
    return out;
}

// Clear bit 0 and every bit above n.
void clamp(Words& w, unsigned n) noexcept
{
    w[0] &= ~std::uint64_t{1};
    const std::size_t last_word = n / kWordBits;
    const unsigned last_bit = n % kWordBits;
    for (std::size_t i = last_word + 1; i < kWords; ++i)
        w[i] = 0;
    if (last_bit + 1 < kWordBits)
        w[last_word] &= (std::uint64_t{1} << (last_bit + 1)) - 1;
}

bool any_common(const Words& a, const Words& b) noexcept
{
    for (std::size_t i = 0; i < kWords; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

template <typename F>
void for_each_member(const Words& w, F&& f)
{
    for (std::size_t i = 0; i < kWords; ++i) {
        std::uint64_t v = w[i];
        while (v) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(v));
            f(static_cast<unsigned>(i * kWordBits + bit));
            v &= v - 1;
        }
    }
}

}  // namespace

IntegerSet::IntegerSet(unsigned universe_bound) : bound_(universe_bound)
{
    check_bound(universe_bound);
}

IntegerSet::IntegerSet(unsigned universe_bound, const Words& words) noexcept
    : bound_(universe_bound), words_(words)
{
    clamp(words_, bound_);
}

void IntegerSet::set_bit(unsigned x) noexcept
{
    words_[x / kWordBits] |= std::uint64_t{1} << (x % kWordBits);
}

IntegerSet IntegerSet::from_members(unsigned universe_bound, std::span<const unsigned> members)
{
    IntegerSet s(universe_bound);
    for (unsigned x : members) {
        if (x < 1 || x > universe_bound)
            throw UsageError("member " + std::to_string(x) + " outside [1, " +
                             std::to_string(universe_bound) + "]");
        s.set_bit(x);
    }
    return s;
}

IntegerSet IntegerSet::from_members(unsigned universe_bound, std::initializer_list<unsigned> members)
{
    return from_members(universe_bound, std::span<const unsigned>(members.begin(), members.size()));
}

IntegerSet IntegerSet::from_mask(unsigned universe_bound, std::uint64_t mask)
{
    if (universe_bound >= kWordBits)
        throw UsageError("from_mask requires a universe bound below 64");
    IntegerSet s(universe_bound);
    s.words_[0] = mask;
    clamp(s.words_, universe_bound);
    if (s.words_[0] != mask)
        throw UsageError("mask has bits outside [1, " + std::to_string(universe_bound) + "]");
    return s;
}

IntegerSet IntegerSet::interval(unsigned universe_bound, unsigned lo, unsigned hi)
{
    IntegerSet s(universe_bound);
    for (unsigned x = std::max(lo, 1u); x <= std::min(hi, universe_bound); ++x)
        s.set_bit(x);
    return s;
}

IntegerSet IntegerSet::odd_numbers(unsigned universe_bound)
{
    IntegerSet s(universe_bound);
    for (unsigned x = 1; x <= universe_bound; x += 2)
        s.set_bit(x);
    return s;
}

IntegerSet IntegerSet::parse(std::string_view text, unsigned universe_bound)
{
    auto fail = [&](std::string_view token, const std::string& why) -> ParseError {
        return ParseError("cannot parse set literal at '" + std::string(token) + "': " + why);
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };

    IntegerSet s(universe_bound);
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw fail(body, "expected a brace-enclosed list such as {2,5,6}");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty())
        return s;

    while (true) {
        const std::size_t comma = body.find(',');
        const std::string_view token = trim(body.substr(0, comma));
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw fail(token, "not a positive integer");
        if (value < 1 || value > universe_bound)
            throw fail(token, "outside [1, " + std::to_string(universe_bound) + "]");
        if (s.contains(value))
            throw fail(token, "duplicate member");
        s.set_bit(value);
        if (comma == std::string_view::npos)
            break;
        body = body.substr(comma + 1);
    }
    return s;
}

bool IntegerSet::contains(unsigned x) const noexcept
{
    if (x == 0 || x > bound_)
        return false;
    return (words_[x / kWordBits] >> (x % kWordBits)) & 1u;
}

unsigned IntegerSet::cardinality() const noexcept
{
    unsigned c = 0;
    for (std::uint64_t w : words_)
        c += static_cast<unsigned>(std::popcount(w));
    return c;
}

bool IntegerSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<unsigned> IntegerSet::min_element() const noexcept
{
    for (std::size_t i = 0; i < kWords; ++i)
        if (words_[i])
            return static_cast<unsigned>(i * kWordBits + std::countr_zero(words_[i]));
    return std::nullopt;
}

std::optional<unsigned> IntegerSet::max_element() const noexcept
{
    for (std::size_t i = kWords; i-- > 0;)
        if (words_[i])
            return static_cast<unsigned>(i * kWordBits + kWordBits - 1 - std::countl_zero(words_[i]));
    return std::nullopt;
}

std::vector<unsigned> IntegerSet::members() const
{
    std::vector<unsigned> out;
    out.reserve(cardinality());
    for_each_member(words_, [&](unsigned x) { out.push_back(x); });
    return out;
}

IntegerSet IntegerSet::with(unsigned x) const
{
    if (x < 1 || x > bound_)
        throw UsageError("member " + std::to_string(x) + " outside [1, " + std::to_string(bound_) + "]");
    IntegerSet s = *this;
    s.set_bit(x);
    return s;
}

IntegerSet IntegerSet::without(unsigned x) const
{
    IntegerSet s = *this;
    if (contains(x))
        s.words_[x / kWordBits] &= ~(std::uint64_t{1} << (x % kWordBits));
    return s;
}

IntegerSet IntegerSet::restricted_to(unsigned universe_bound) const
{
    check_bound(universe_bound);
    return IntegerSet(universe_bound, words_);
}

bool IntegerSet::intersects(const IntegerSet& other) const noexcept
{
    return any_common(words_, other.words_);
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const noexcept
{
    for (std::size_t i = 0; i < kWords; ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

std::uint64_t IntegerSet::to_mask() const
{
    if (bound_ >= kWordBits)
        throw UsageError("to_mask requires a universe bound below 64");
    return words_[0];
}

std::string IntegerSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_member(words_, [&](unsigned x) {
        if (!first)
            os << ',';
        os << x;
        first = false;
    });
    os << '}';
    return os.str();
}

bool bit_pattern_less(const IntegerSet& a, const IntegerSet& b) noexcept
{
    if (a.bound_ != b.bound_)
        return a.bound_ < b.bound_;
    for (std::size_t i = kWords; i-- > 0;)
        if (a.words_[i] != b.words_[i])
            return a.words_[i] < b.words_[i];
    return false;
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b)
{
    if (a.universe_bound() != b.universe_bound())
        throw UsageError("sumset operands have different universe bounds (" +
                         std::to_string(a.universe_bound()) + " vs " +
                         std::to_string(b.universe_bound()) + ")");
    const unsigned n = a.universe_bound();
    if (n > IntegerSet::kMaxOperandUniverse)
        throw UsageError("sumset operand universe " + std::to_string(n) + " exceeds " +
                         std::to_string(IntegerSet::kMaxOperandUniverse));

    Words acc{};
    for_each_member(a.words_, [&](unsigned x) {
        const Words shifted = shifted_left(b.words_, x);
        for (std::size_t i = 0; i < kWords; ++i)
            acc[i] |= shifted[i];
    });
    return IntegerSet(2 * n, acc);
}

IntegerSet difference_set(const IntegerSet& a)
{
    const std::vector<unsigned> m = a.members();
    IntegerSet out(a.universe_bound());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            out = out.with(m[i] - m[j]);
    return out;
}

bool is_sum_free(const IntegerSet& a)
{
    // (a << x) & a is nonempty iff some z in a has z - x in a.
    bool ok = true;
    for_each_member(a.words(), [&](unsigned x) {
        if (ok && any_common(shifted_left(a.words(), x), a.words()))
            ok = false;
    });
    return ok;
}

bool is_difference_free(const IntegerSet& a)
{
    const std::vector<unsigned> m = a.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a.contains(m[i] - m[j]))
                return false;
    return true;
}

bool is_maximal_sum_free(const IntegerSet& a)
{
    if (a.empty() || !is_sum_free(a))
        return false;
    for (unsigned k = 1; k <= a.universe_bound(); ++k)
        if (!a.contains(k) && is_sum_free(a.with(k)))
            return false;
    return true;
}

}  // namespace sumfree

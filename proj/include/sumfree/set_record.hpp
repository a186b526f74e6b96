#pragma once

#include "sumfree/integer_set.hpp"

#include <optional>

namespace sumfree {

/// An IntegerSet with its derived attributes. min/max are absent for the
/// empty set.
struct SetRecord {
    IntegerSet set;
    std::optional<unsigned> min_element;
    std::optional<unsigned> max_element;
    unsigned cardinality = 0;
    bool is_sum_free = false;
    bool is_maximal = false;
    bool is_maximum = false;

    unsigned universe_bound() const noexcept { return set.universe_bound(); }

    friend bool operator==(const SetRecord&, const SetRecord&) = default;
};

SetRecord make_record(const IntegerSet& a);

}  // namespace sumfree

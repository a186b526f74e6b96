#include "sumfree/set_record.hpp"

namespace sumfree {

SetRecord make_record(const IntegerSet& a)
{
    SetRecord r{a, a.min_element(), a.max_element(), a.cardinality(), false, false, false};
    r.is_sum_free = is_sum_free(a);
    r.is_maximal = r.is_sum_free && is_maximal_sum_free(a);
    // A sum-free set of cardinality floor((n+1)/2) cannot be extended, so
    // is_maximum implies is_maximal; it is still computed independently.
    r.is_maximum = r.is_sum_free && r.cardinality == maximum_cardinality(a.universe_bound());
    return r;
}

}  // namespace sumfree

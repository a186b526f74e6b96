#include "sumfree/search.hpp"

namespace sumfree {

// Deliberately naive: no pruning, no shared state with the engine.
std::vector<IntegerSet> oracle_enumerate_sum_free(unsigned n)
{
    if (n == 0 || n > kOracleMaxUniverse)
        throw UsageError("oracle universe " + std::to_string(n) + " outside [1, " +
                         std::to_string(kOracleMaxUniverse) + "]");
    std::vector<IntegerSet> out;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        const IntegerSet s = IntegerSet::from_mask(n, bits << 1);
        if (is_sum_free(s))
            out.push_back(s);
    }
    return out;
}

}  // namespace sumfree

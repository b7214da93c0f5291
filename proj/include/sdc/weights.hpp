#pragma once

// Low-weight codeword counting for binary self-dual codes.
//
// For a self-dual code both an information set A and its complement B are
// information sets, so every codeword of weight w has at most floor(w/2)
// nonzero message bits on A or on B. Enumerating messages of weight
// <= t = floor(w_max/2) from systematic generators on A and on B yields every
// codeword of weight <= w_max; words light on both sides are counted on A only.

#include "sdc/code.hpp"
#include "sdc/enumerator.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sdc {

struct WeightReport {
    std::size_t n = 0;
    int w_max = 0;
    std::vector<std::uint64_t> counts;   // counts[w] = A_w for 0 <= w <= w_max (counts[0] = 1)
    std::optional<int> d;                // minimum nonzero weight when it is <= w_max
    std::vector<EnumeratorMatch> families;

    std::uint64_t at(int w) const { return w >= 0 && w <= w_max ? counts[static_cast<std::size_t>(w)] : 0; }
    // True when no nonzero codeword has weight below `bound` (requires bound - 1 <= w_max).
    bool certifies_distance_at_least(int bound) const;

    bool operator==(const WeightReport&) const = default;
};

// Parallel (OpenMP) implementation. threads <= 0 uses the OpenMP default.
WeightReport partial_weights(const Code& code, int w_max, int threads = 0);

// Single-threaded reference of the same two-sided enumeration.
WeightReport partial_weights_serial(const Code& code, int w_max);

}  // namespace sdc

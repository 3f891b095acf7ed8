#pragma once

#include "intervalia/construct2.hpp"
#include "intervalia/order.hpp"

#include <optional>
#include <vector>

namespace intervalia {

// Tie-broken representation with the Helly line and the middle/extremal
// split. Element indexing follows the (twin-collapsed) order.
struct StagedRepresentation {
    IntervalFamily family;
    Rat helly;                      // l0
    std::vector<int> middle;        // elements with l < l0 < r
    std::vector<int> extremalLeft;  // leftovers that contained line 0
    std::vector<int> extremalRight; // leftovers that contained line m-1
};

// Stage 1 of the height-3 pipeline: spreads coinciding endpoints so that the
// middle part reads off as an Eq.-(5) permutation. Requires height <= 3 and a
// twin-free order. Throws HeightExceeded.
StagedRepresentation break_ties(const IntervalOrder& p, const CanonicalRepresentation& canon);

struct MiddlePart {
    Permutation pi;                // permutation of the middle intervals
    std::vector<int> byValue;      // middle value v (1..k) -> element id
    std::vector<int> leftLeftovers, rightLeftovers;
};

// Stage 2 entry: the middle-part permutation in Eq.-(5) shape. Throws
// DepthExceeded when the order has depth > 2.
MiddlePart middle_part(const StagedRepresentation& staged);

struct Height3Result {
    IntervalFamily family; // integral, <= 2 distinct lengths, verified
    Rat alpha, beta;
};

// Full Theorem-5 pipeline: twins -> canonical -> tie breaking -> middle-part
// permutation -> two-count construction -> extremal merging -> twin
// re-expansion. Throws HeightExceeded (height > 3) or DepthExceeded
// (depth > 2).
Height3Result two_count_height3(const IntervalOrder& p);

} // namespace intervalia

#pragma once

#include "intervalia/perm.hpp"
#include "intervalia/simplex.hpp"

#include <optional>
#include <vector>

namespace intervalia {

// Slack interval between the right endpoints of an adjacent mixed-color pair
// in left-endpoint order. TS slacks lower-bound beta-alpha, ST slacks
// upper-bound it.
struct SlackInterval {
    enum Kind { TS, ST } kind;
    Rat left, right;            // left < right
    std::pair<int, int> innerPair; // the adjacent pair (x, y) of values

    Rat value() const { return right - left; }
};

struct SlackFamily {
    std::vector<SlackInterval> all;
    std::optional<Rat> maxTS, minST;
};

// Coloring must have k <= 2; classes S = T_1 (short), T = T_2 (long, may be
// absent). Throws NotSorted.
SlackFamily compute_slacks(const Permutation& pi, const IntervalFamily& rep,
                           const SortedColoring& coloring);

// Removes slacks strictly contained in another and asserts the structure of
// Lemma 3: containment only TS inside ST sharing one endpoint; maximal slacks
// pairwise non-nested with all endpoints distinct. Throws StructureViolation.
SlackFamily maximal_slacks(const SlackFamily& family);

// Repositions right endpoints, keeping their order and all left endpoints,
// so that every maximal slack has one common length. Solved as a strict
// difference system through the exact LP kernel.
IntervalFamily roberts_normalize(const Permutation& pi, const IntervalFamily& rep,
                                 const SortedColoring& coloring);

// Moves each ST slack's defining right endpoints outward by a quarter of the
// minimum endpoint gap; afterwards max TS < min ST strictly.
IntervalFamily epsilon_expand(const Permutation& pi, const IntervalFamily& rep,
                              const SortedColoring& coloring);

struct TwoCountRep {
    IntervalFamily family; // integral endpoints
    Rat alpha, beta;       // beta realized only when the long class is non-empty
};

// Chooses beta-alpha inside (maxTS, minST), alpha large enough for the
// closing inequality (and above alphaFloor), recomputes left endpoints and
// clears denominators. Precondition: max TS < min ST on rep.
TwoCountRep assemble_two_count(const Permutation& pi, const IntervalFamily& rep,
                               const SortedColoring& coloring, const Rat& alphaFloor = Rat(0));

// Full pipeline with the Mirsky coloring. Throws DepthExceeded when
// perm_depth(pi) >= 3.
TwoCountRep two_count_permutation(const Permutation& pi);

// Same pipeline for an arbitrary sorted coloring with <= 2 classes; exposed
// to exercise the claim that every sorted 2-coloring is feasible.
TwoCountRep two_count_with_coloring(const Permutation& pi, const SortedColoring& coloring,
                                    const Rat& alphaFloor = Rat(0));

} // namespace intervalia

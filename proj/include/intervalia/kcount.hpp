#pragma once

#include "intervalia/construct2.hpp"
#include "intervalia/order.hpp"
#include "intervalia/perm.hpp"
#include "intervalia/simplex.hpp"

#include <cstdint>
#include <optional>

namespace intervalia {

struct KCountVerdict {
    bool yes = false;
    int k_used = 0;                      // classes of the witness coloring
    std::vector<int> coloring;           // per value/element, 1-based class ids
    IntervalFamily witness;              // verified representation when yes
    std::uint64_t coloringsTried = 0;
};

// Variables r_1..r_n then alpha_1..alpha_k. Rows: endpoint chain, length
// chain, alpha_1 > 0, the adjacent left-endpoint inequalities and the closing
// inequality of Eq. (5).
LinearSystem coloring_system_permutation(const Permutation& pi, const SortedColoring& coloring);

// Right-endpoint formulation for orders: l_x = r_x - alpha_{c(x)}. The LP
// region covers every endpoint order, so no endpoint enumeration is needed.
// classMap is per element, 1-based classes.
LinearSystem coloring_system_order(const IntervalOrder& p, const std::vector<int>& classMap, int k);

// Does pi admit a representation with at most k distinct lengths? Tries
// k' = depth..k and every sorted k'-coloring in lexicographic order; the
// first strictly feasible system wins (deterministic witness).
KCountVerdict is_k_count_perm(const Permutation& pi, int k, int jobs = 1);

// Same decision for interval orders via class-map enumeration with PP-arc
// pruning and unused-class canonicalization. Guarded by TooLarge unless
// allow_large. jobs > 1 parallelizes over prefix blocks with a deterministic
// first-yes merge.
KCountVerdict is_k_count_order(const IntervalOrder& p, int k, int jobs = 1,
                               bool allow_large = false, bool prune_pp = true);

// Strict feasibility of one order class map (helper for Prop. 2 style tests).
FeasibilityResult order_class_map_feasible(const IntervalOrder& p, const std::vector<int>& classMap,
                                           int k);

} // namespace intervalia

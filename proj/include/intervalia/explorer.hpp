#pragma once

#include "intervalia/kcount.hpp"
#include "intervalia/order.hpp"
#include "intervalia/perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intervalia {

struct SearchReport {
    std::string what;
    int nMin = 1, nMax = 0;
    int jobs = 1;
    std::uint64_t seed = 0;                 // only for sampled searches
    std::vector<std::uint64_t> enumerated;  // per n
    std::vector<std::uint64_t> filtered;    // per n, candidates actually tested
    std::vector<std::string> witnesses;     // ascent sequences / permutations that failed
    double seconds = 0;
};

// Orders that pass the filters (4+1-free, depth <= 2 by default) but have no
// 2-count representation. Expected: no witnesses below n = 11.
SearchReport search_non_2count_orders(int nMax, bool fourPlusOneFree = true,
                                      bool depthAtMost2 = true, int jobs = 1,
                                      bool allow_large = false);

// Depth-3 permutations with no 3-count representation. Depth <= 2 and
// depth >= 4 are skipped: the former are 2-count by construction, the latter
// force four lengths on a nested 4-chain. Expected: no witnesses below n = 10.
SearchReport search_non_3count_perms(int nMax, int jobs = 1, bool use_shortcuts = true);

struct ConjectureOutcome {
    bool applicable = false;
    bool criterion = false; // colored-subposet criterion of the conjecture
    bool twoCount = false;
    bool agree = false;
};

// Conjecture 1 check for a single order: peels red, piths green, no fully
// forced spring, versus the 2-count oracle.
ConjectureOutcome conjecture_check(const IntervalOrder& p, int jobs = 1);

// Exhaustive conjecture sweep; witnesses collect any disagreement.
SearchReport sweep_conjecture(int nMax, int jobs = 1);

// All permutations of n in lexicographic order.
void enumerate_permutations(int n, const std::function<bool(const Permutation&)>& yield);

} // namespace intervalia

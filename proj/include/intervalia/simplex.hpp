#pragma once

#include "intervalia/linsys.hpp"

#include <optional>
#include <vector>

namespace intervalia {

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rat> witness; // one value per system variable when feasible
};

// Strict feasibility oracle. A margin t >= 0 is added to every strict row
// (a.x + t <= b), capped by t <= 1, and maximized by exact two-phase simplex
// with Bland's rule; the system is strictly feasible iff the optimum is
// positive. Every returned witness satisfies the original rows exactly.
FeasibilityResult lp_feasible_strict(const LinearSystem& sys);

} // namespace intervalia

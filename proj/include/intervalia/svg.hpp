#pragma once

#include "intervalia/order.hpp"

#include <string>
#include <vector>

namespace intervalia {

// Deterministic SVG with integer pixel coordinates only; identical inputs
// yield byte-identical documents. Color map follows the paper's convention:
// long intervals red, short green, everything else black.
struct RenderOptions {
    int trackHeight = 22;
    int unitMin = 24; // minimum pixels per coordinate unit
    std::vector<int> longElems, shortElems; // optional 0-based coloring
};

// Interval representation on horizontal tracks with endpoint gridlines; a
// dotted helly line is drawn when provided (denominator-cleared internally).
std::string render_representation(const IntervalFamily& f, const RenderOptions& opt = {},
                                  const Rat* helly = nullptr);

// Layered Hasse diagram (layer = longest chain below).
std::string render_hasse(const IntervalOrder& p, const RenderOptions& opt = {});

// PP digraph: nodes on a circle-free grid layout, arrows pith -> peel.
std::string render_pp(const IntervalOrder& p, const RenderOptions& opt = {});

} // namespace intervalia

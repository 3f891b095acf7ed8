#pragma once

#include "intervalia/order.hpp"
#include "intervalia/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace intervalia {

// Permutation of [n]; v[i] is the value at position i (values 1..n).
struct Permutation {
    std::vector<int> v;

    int size() const { return static_cast<int>(v.size()); }
    int at(int pos) const { return v[pos]; } // 0-based position
    std::string str() const;
};

Permutation make_permutation(std::vector<int> values);
// Bracketed one-line notation "[4,2,5,10,3,1,7,6,9,8]".
Permutation parse_permutation(const std::string& text);

// Length of the longest strictly decreasing subsequence, patience style.
int perm_depth(const Permutation& pi);

// All pairs (x, y) of values, x < y, with y before x in pi: exactly the
// forced nestings I_x inside I_y of every representation.
std::vector<std::pair<int, int>> nesting_pairs(const Permutation& pi);

// Indexed partition of values 1..n into classes T_1..T_k; classes[i] holds
// the values of T_{i+1}. Every nesting pair must cross from a lower class to
// a strictly higher one.
struct SortedColoring {
    std::vector<std::vector<int>> classes;

    int k() const { return static_cast<int>(classes.size()); }
    std::vector<int> class_of(int n) const; // value -> 1-based class index
};

bool is_sorted_coloring(const Permutation& pi, const SortedColoring& c);

// Mirsky levels: class of x = length of the longest decreasing subsequence
// starting at x's position; k equals perm_depth.
SortedColoring mirsky_sorted_coloring(const Permutation& pi);

// All sorted colorings with exactly k non-empty classes, in lexicographic
// order of the per-value class vector. Return false from yield to stop.
void enumerate_sorted_colorings(const Permutation& pi, int k,
                                const std::function<bool(const SortedColoring&)>& yield);
std::vector<SortedColoring> enumerate_sorted_colorings(const Permutation& pi, int k);

// Eq.-(5)-shaped family: left endpoint of value pi(i) at i-n-1, right
// endpoint of value j at j.
IntervalFamily initial_representation(const Permutation& pi);

// Checks both endpoint chains including l_{pi(n)} < r_1. Family is indexed by
// value-1.
std::optional<Violation> verify_perm_representation(const Permutation& pi, const IntervalFamily& f);

// Deduplicated sorted interval lengths.
std::vector<Rat> distinct_lengths(const IntervalFamily& f);

} // namespace intervalia

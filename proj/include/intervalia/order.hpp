#pragma once

#include "intervalia/ascent.hpp"
#include "intervalia/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace intervalia {

// Finite strict partial order on elements 0..n-1. Valid instances are
// irreflexive and transitive; interval orders are additionally 2+2-free.
struct IntervalOrder {
    int n = 0;
    std::vector<char> rel; // rel[x*n+y] != 0  <=>  x < y

    bool less(int x, int y) const { return rel[static_cast<size_t>(x) * n + y] != 0; }
    bool incomparable(int x, int y) const { return x != y && !less(x, y) && !less(y, x); }
    void set_less(int x, int y) { rel[static_cast<size_t>(x) * n + y] = 1; }

    std::vector<int> down_set(int x) const;
    std::vector<int> up_set(int x) const;
    IntervalOrder dual() const;
};

IntervalOrder make_order(int n, const std::vector<std::pair<int, int>>& pairs_1based);

// Validity checks. is_interval_order uses quartet enumeration for the 2+2
// test (O(n^4)); that is the documented scalability bound of this module.
bool is_partial_order(const IntervalOrder& p, std::string* why = nullptr);
bool is_two_plus_two_free(const IntervalOrder& p);
void require_interval_order(const IntervalOrder& p); // throws NotAnIntervalOrder

// Family of closed intervals with exact rational endpoints, indexed by the
// elements (order role) or by the values 1..n (permutation role).
struct IntervalFamily {
    std::vector<std::pair<Rat, Rat>> iv;

    int size() const { return static_cast<int>(iv.size()); }
    const Rat& left(int x) const { return iv[x].first; }
    const Rat& right(int x) const { return iv[x].second; }
};

// Minimal-endpoint representation on integer lines 0..m-1.
struct CanonicalRepresentation {
    int m = 0;
    std::vector<std::pair<int, int>> iv; // per element

    IntervalFamily family() const;
};

// Canonical representation from the down-set/up-set chains; magnitude == m.
CanonicalRepresentation canonical_representation(const IntervalOrder& p);
int magnitude(const IntervalOrder& p);

// Ascent-sequence bijection. Elements of the resulting order are numbered by
// insertion, matching the sequence positions.
IntervalOrder order_from_ascent(const AscentSequence& seq);
AscentSequence ascent_of_order(const IntervalOrder& p);

// Longest chain size (any poset).
int height(const IntervalOrder& p);

// Some r-chain plus an element incomparable to all of it, or nullopt.
struct ChainPlusOne {
    std::vector<int> chain;
    int isolated = -1;
};
std::optional<ChainPlusOne> find_chain_plus_one(const IntervalOrder& p, int r);

// Peel-pith digraph: one arc pith -> peel per 3+1 copy, deduplicated; a
// witness chain (a, pith, b) is kept per arc for diagnostics.
struct PPGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;                  // (pith, peel), sorted
    std::vector<std::array<int, 2>> witness;                // (a, b) with a < pith < b
};
PPGraph pp_graph(const IntervalOrder& p);

// Vertex count of a longest directed path of the PP graph (1 if no arcs).
// Throws PPCycleDetected if the PP graph has a directed cycle.
int depth_order(const IntervalOrder& p);
int depth_of_pp(const PPGraph& g);

// Six-element induced copy of the spring pattern (or its dual). roles[i] is
// the element playing role i+1 of the pattern; forced colors are roles 4,5
// long and 2,3 short in either orientation.
struct SpringWitness {
    std::array<int, 6> roles;
    bool dual = false;

    std::array<int, 6> sorted_elements() const;
};
std::vector<SpringWitness> find_springs(const IntervalOrder& p);

// Twin reduction: one representative per class of elements with equal
// down-sets and up-sets.
struct TwinReduction {
    IntervalOrder reduced;
    std::vector<int> rep_of;               // original element -> reduced index
    std::vector<std::vector<int>> classes; // reduced index -> original elements
};
TwinReduction collapse_twins(const IntervalOrder& p);

// ok iff for all x != y: x < y <=> right(x) < left(y). Returns the offending
// pair otherwise.
struct Violation {
    int x = -1, y = -1;
};
std::optional<Violation> verify_order_representation(const IntervalOrder& p, const IntervalFamily& f);

} // namespace intervalia

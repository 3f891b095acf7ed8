#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace intervalia {

// Integer sequence with entries[0] == 0 and every later entry bounded by one
// plus the number of strict ascents in its prefix. Bijective with interval
// orders; see order.hpp.
struct AscentSequence {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    std::string str() const;
};

// Number of strict ascents in the sequence.
int ascent_count(const std::vector<int>& entries);

// Validates entries as an ascent sequence; throws FirstEntryNonzero /
// AscentBoundViolated (with offending index in the message).
AscentSequence make_ascent_sequence(std::vector<int> entries);

// Parses "a0,a1,...,ak". Errors: NotAnInteger, FirstEntryNonzero,
// AscentBoundViolated.
AscentSequence parse_ascent_sequence(const std::string& text);

// All valid sequences of length n in lexicographic order.
void enumerate_ascent_sequences(int n, const std::function<void(const AscentSequence&)>& yield);
std::vector<AscentSequence> enumerate_ascent_sequences(int n);

// Independent counter for the number of length-n ascent sequences. Implements
// the ascent bound as a direct recursion over (position, ascents, last entry)
// without materializing sequences; used as the enumeration oracle in tests.
std::uint64_t count_ascent_sequences(int n);

} // namespace intervalia

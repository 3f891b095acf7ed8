#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace intervalia {

// Exact rational arithmetic everywhere; floating point is banned from the
// feasibility kernel and every representation that feeds it.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q" (q > 0 after normalization) or plain integer "p".
Rat parse_rat(const std::string& text);

// Canonical "p/q" string, integer shorthand "p" when q == 1.
std::string rat_str(const Rat& q);

// Least common multiple of the denominators; 1 for an empty range.
Int lcm_denominators(const std::vector<Rat>& values);

inline Rat rat(long num, long den = 1) { Rat q(num, den); q.canonicalize(); return q; }

} // namespace intervalia

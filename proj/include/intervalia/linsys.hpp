#pragma once

#include "intervalia/rational.hpp"

#include <string>
#include <vector>

namespace intervalia {

enum class Rel { Less, LessEq, Eq };

struct Row {
    std::vector<Rat> a;
    Rel rel = Rel::LessEq;
    Rat b;
};

// Exact-rational linear constraints with per-row strictness.
struct LinearSystem {
    std::vector<std::string> vars;
    std::vector<Row> rows;

    int num_vars() const { return static_cast<int>(vars.size()); }
    void add(std::vector<Rat> a, Rel rel, Rat b);
    // convenience: coefficient list as (var index, coeff) pairs
    void add_sparse(const std::vector<std::pair<int, Rat>>& terms, Rel rel, Rat b);
    bool satisfied_by(const std::vector<Rat>& x) const; // exact substitution, strictness honored
};

} // namespace intervalia

#include "intervalia/linsys.hpp"

#include "intervalia/error.hpp"

namespace intervalia {

void LinearSystem::add(std::vector<Rat> a, Rel rel, Rat b) {
    if (static_cast<int>(a.size()) != num_vars())
        fail("MalformedSystem", "coefficient vector length mismatch");
    rows.push_back(Row{std::move(a), rel, std::move(b)});
}

void LinearSystem::add_sparse(const std::vector<std::pair<int, Rat>>& terms, Rel rel, Rat b) {
    std::vector<Rat> a(num_vars(), Rat(0));
    for (const auto& [i, c] : terms) {
        if (i < 0 || i >= num_vars()) fail("MalformedSystem", "variable index out of range");
        a[i] += c;
    }
    add(std::move(a), rel, std::move(b));
}

bool LinearSystem::satisfied_by(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != num_vars()) return false;
    for (const Row& row : rows) {
        Rat lhs(0);
        for (int j = 0; j < num_vars(); ++j)
            if (row.a[j] != 0) lhs += row.a[j] * x[j];
        switch (row.rel) {
        case Rel::Less:
            if (!(lhs < row.b)) return false;
            break;
        case Rel::LessEq:
            if (!(lhs <= row.b)) return false;
            break;
        case Rel::Eq:
            if (!(lhs == row.b)) return false;
            break;
        }
    }
    return true;
}

} // namespace intervalia

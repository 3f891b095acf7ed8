#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "intervalia/linsys.hpp"
#include "intervalia/order.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace intervalia::testing {

// Fourier-Motzkin feasibility for tiny systems with mixed strictness.
// Equalities are split into two inequalities. Exponential; keep it small.
inline bool fm_feasible(const LinearSystem& sys) {
    struct R {
        std::vector<Rat> a;
        Rat b;
        bool strict;
    };
    std::vector<R> rows;
    for (const Row& r : sys.rows) {
        if (r.rel == Rel::Eq) {
            rows.push_back({r.a, r.b, false});
            std::vector<Rat> neg;
            for (const Rat& c : r.a) neg.push_back(-c);
            rows.push_back({neg, -r.b, false});
        } else {
            rows.push_back({r.a, r.b, r.rel == Rel::Less});
        }
    }
    int v = sys.num_vars();
    for (int var = 0; var < v; ++var) {
        std::vector<R> pos, neg, rest;
        for (auto& r : rows) {
            if (r.a[var] > 0)
                pos.push_back(r);
            else if (r.a[var] < 0)
                neg.push_back(r);
            else
                rest.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // p: a x <= b (coef>0), q: a' x <= b' (coef<0); eliminate var
                Rat cp = p.a[var], cq = -q.a[var];
                R merged;
                merged.a.assign(v, Rat(0));
                for (int j = 0; j < v; ++j) merged.a[j] = p.a[j] * cq + q.a[j] * cp;
                merged.b = p.b * cq + q.b * cp;
                merged.strict = p.strict || q.strict;
                rest.push_back(std::move(merged));
            }
        rows = std::move(rest);
    }
    for (const auto& r : rows) {
        if (r.strict) {
            if (!(Rat(0) < r.b)) return false;
        } else {
            if (!(Rat(0) <= r.b)) return false;
        }
    }
    return true;
}

// Minimum number of distinct endpoints over all representations, by brute
// force over integer endpoints. Only sensible for very small orders.
inline int magnitude_brute_force(const IntervalOrder& p) {
    const int n = p.n;
    const int B = 2 * n; // endpoints in 0..B-1 suffice
    std::vector<std::pair<int, int>> iv(n);
    int best = 2 * n + 1;
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b) continue;
                    if (p.less(a, b) != (iv[a].second < iv[b].first)) return;
                }
            std::vector<int> pts;
            for (auto [l, r] : iv) {
                pts.push_back(l);
                pts.push_back(r);
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            best = std::min(best, static_cast<int>(pts.size()));
            return;
        }
        for (int l = 0; l < B; ++l)
            for (int r = l; r < B; ++r) {
                iv[x] = {l, r};
                rec(x + 1);
            }
    };
    rec(0);
    return best;
}

// Longest chain of the nesting poset by exhaustive DFS.
inline int nesting_poset_height(const std::vector<std::pair<int, int>>& pairs, int n) {
    std::vector<std::vector<int>> above(n + 1);
    for (auto [inner, outer] : pairs) above[inner].push_back(outer);
    std::vector<int> memo(n + 1, 0);
    std::function<int(int)> rec = [&](int x) {
        if (memo[x]) return memo[x];
        int best = 1;
        for (int y : above[x]) best = std::max(best, 1 + rec(y));
        return memo[x] = best;
    };
    int h = 0;
    for (int x = 1; x <= n; ++x) h = std::max(h, rec(x));
    return h;
}

} // namespace intervalia::testing

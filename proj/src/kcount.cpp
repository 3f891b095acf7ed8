#include "intervalia/kcount.hpp"

#include "intervalia/error.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>

namespace intervalia {

LinearSystem coloring_system_permutation(const Permutation& pi, const SortedColoring& coloring) {
    if (!is_sorted_coloring(pi, coloring)) fail("NotSorted", "coloring is not sorted");
    const int n = pi.size();
    const int k = coloring.k();
    std::vector<int> cls = coloring.class_of(n);

    LinearSystem sys;
    for (int j = 1; j <= n; ++j) sys.vars.push_back("r" + std::to_string(j));
    for (int i = 1; i <= k; ++i) sys.vars.push_back("a" + std::to_string(i));
    auto rv = [&](int value) { return value - 1; };
    auto av = [&](int c) { return n + c - 1; };

    for (int j = 1; j < n; ++j)
        sys.add_sparse({{rv(j), Rat(1)}, {rv(j + 1), Rat(-1)}}, Rel::Less, Rat(0));
    for (int c = 1; c < k; ++c)
        sys.add_sparse({{av(c), Rat(1)}, {av(c + 1), Rat(-1)}}, Rel::Less, Rat(0));
    sys.add_sparse({{av(1), Rat(-1)}}, Rel::Less, Rat(0));
    for (int i = 0; i + 1 < n; ++i) {
        int x = pi.at(i), y = pi.at(i + 1);
        // l_x < l_y  with  l_v = r_v - alpha_{c(v)}
        sys.add_sparse({{rv(x), Rat(1)}, {av(cls[x]), Rat(-1)}, {rv(y), Rat(-1)}, {av(cls[y]), Rat(1)}},
                       Rel::Less, Rat(0));
    }
    int last = pi.at(n - 1);
    sys.add_sparse({{rv(last), Rat(1)}, {av(cls[last]), Rat(-1)}, {rv(1), Rat(-1)}}, Rel::Less, Rat(0));
    return sys;
}

LinearSystem coloring_system_order(const IntervalOrder& p, const std::vector<int>& classMap, int k) {
    const int n = p.n;
    if (static_cast<int>(classMap.size()) != n) fail("MalformedSystem", "class map size mismatch");
    LinearSystem sys;
    for (int x = 1; x <= n; ++x) sys.vars.push_back("r" + std::to_string(x));
    for (int c = 1; c <= k; ++c) sys.vars.push_back("a" + std::to_string(c));
    auto rv = [&](int x) { return x; };       // 0-based element
    auto av = [&](int c) { return n + c - 1; };

    for (int c = 1; c < k; ++c)
        sys.add_sparse({{av(c), Rat(1)}, {av(c + 1), Rat(-1)}}, Rel::Less, Rat(0));
    sys.add_sparse({{av(1), Rat(-1)}}, Rel::Less, Rat(0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (p.less(x, y)) {
                // r_x < r_y - alpha_{c(y)}
                sys.add_sparse({{rv(x), Rat(1)}, {rv(y), Rat(-1)}, {av(classMap[y]), Rat(1)}},
                               Rel::Less, Rat(0));
            } else if (x < y && p.incomparable(x, y)) {
                // closed-interval overlap, both directions
                sys.add_sparse({{rv(y), Rat(1)}, {av(classMap[y]), Rat(-1)}, {rv(x), Rat(-1)}},
                               Rel::LessEq, Rat(0));
                sys.add_sparse({{rv(x), Rat(1)}, {av(classMap[x]), Rat(-1)}, {rv(y), Rat(-1)}},
                               Rel::LessEq, Rat(0));
            }
        }
    return sys;
}

FeasibilityResult order_class_map_feasible(const IntervalOrder& p, const std::vector<int>& classMap,
                                           int k) {
    return lp_feasible_strict(coloring_system_order(p, classMap, k));
}

namespace {

IntervalFamily family_from_perm_witness(const Permutation& pi, const std::vector<Rat>& w,
                                        const std::vector<int>& cls, int k) {
    const int n = pi.size();
    IntervalFamily f;
    f.iv.resize(n);
    for (int x = 1; x <= n; ++x) {
        Rat r = w[x - 1];
        Rat len = w[n + cls[x] - 1];
        f.iv[x - 1] = {r - len, r};
    }
    (void)k;
    return f;
}

IntervalFamily family_from_order_witness(const IntervalOrder& p, const std::vector<Rat>& w,
                                         const std::vector<int>& cls) {
    IntervalFamily f;
    f.iv.resize(p.n);
    for (int x = 0; x < p.n; ++x) {
        Rat r = w[x];
        Rat len = w[p.n + cls[x] - 1];
        f.iv[x] = {r - len, r};
    }
    return f;
}

} // namespace

KCountVerdict is_k_count_perm(const Permutation& pi, int k, int jobs) {
    if (k < 1) fail("BadArgument", "k must be >= 1");
    (void)jobs; // coloring streams are cheap; LP dominates and runs per coloring
    KCountVerdict v;
    int d = perm_depth(pi);
    if (d > k) return v;
    const int n = pi.size();
    for (int kk = d; kk <= std::min(k, n); ++kk) {
        bool found = false;
        enumerate_sorted_colorings(pi, kk, [&](const SortedColoring& col) {
            ++v.coloringsTried;
            FeasibilityResult res = lp_feasible_strict(coloring_system_permutation(pi, col));
            if (!res.feasible) return true;
            std::vector<int> cls = col.class_of(n);
            v.yes = true;
            v.k_used = kk;
            v.coloring.assign(cls.begin() + 1, cls.end());
            v.witness = family_from_perm_witness(pi, res.witness, cls, kk);
            found = true;
            return false;
        });
        if (found) break;
    }
    if (v.yes) {
        if (verify_perm_representation(pi, v.witness))
            fail("InternalError", "k-count witness failed verification");
        if (static_cast<int>(distinct_lengths(v.witness).size()) > k)
            fail("InternalError", "k-count witness uses too many lengths");
    }
    return v;
}

namespace {

// Lexicographic enumeration of class maps {1..k}^n with PP-arc pruning and
// the used-classes-form-a-prefix canonical form. Calls test on each surviving
// map; stops at the first yes (deterministic: maps are visited in
// lexicographic order).
struct OrderSearch {
    const IntervalOrder& p;
    int k;
    bool prune;
    std::vector<std::vector<int>> arcs_into; // element -> piths forced below it

    OrderSearch(const IntervalOrder& p_, int k_, bool prune_) : p(p_), k(k_), prune(prune_) {
        arcs_into.assign(p.n, {});
        if (prune) {
            PPGraph g = pp_graph(p);
            for (auto [pith, peel] : g.arcs)
                if (pith < peel)
                    arcs_into[peel].push_back(pith);
                else
                    arcs_into[peel].push_back(pith); // both orders possible; checked lazily
        }
    }

    bool arc_ok(const std::vector<int>& cls, int upto) const {
        // piths strictly below peels, for arcs with both ends assigned
        for (int peel = 0; peel <= upto; ++peel)
            for (int pith : arcs_into[peel])
                if (pith <= upto && !(cls[pith] < cls[peel])) return false;
        return true;
    }
};

} // namespace

KCountVerdict is_k_count_order(const IntervalOrder& p, int k, int jobs, bool allow_large,
                               bool prune_pp) {
    if (k < 1) fail("BadArgument", "k must be >= 1");
    require_interval_order(p);
    const int n = p.n;
    double work = n * std::log2(static_cast<double>(k) + 0.0001);
    if (k > 1 && work > 24 && !allow_large)
        fail("TooLarge", "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             " needs the override flag");

    PPGraph g = pp_graph(p);
    std::vector<std::pair<int, int>> arcs = prune_pp ? g.arcs : std::vector<std::pair<int, int>>{};

    // enumerate maps lexicographically; test each candidate
    KCountVerdict verdict;
    std::vector<int> cls(n, 1);

    auto is_canonical = [&](const std::vector<int>& c) {
        int mx = 0;
        std::vector<char> used(k + 1, 0);
        for (int x : c) {
            used[x] = 1;
            mx = std::max(mx, x);
        }
        for (int i = 1; i <= mx; ++i)
            if (!used[i]) return false;
        return true;
    };
    auto arcs_ok_full = [&](const std::vector<int>& c) {
        for (auto [pith, peel] : arcs)
            if (!(c[pith] < c[peel])) return false;
        return true;
    };

    // collect candidates in lexicographic order
    std::vector<std::vector<int>> block;
    const size_t blockSize = std::max(1, jobs) > 1 ? 64 : 1;
    bool done = false;

    auto test_map = [&](const std::vector<int>& c, IntervalFamily* fam) {
        FeasibilityResult res = order_class_map_feasible(p, c, k);
        if (!res.feasible) return false;
        *fam = family_from_order_witness(p, res.witness, c);
        return true;
    };

    std::function<void()> advance = [&]() {
        int i = n - 1;
        while (i >= 0 && cls[i] == k) {
            cls[i] = 1;
            --i;
        }
        if (i < 0)
            done = true;
        else
            ++cls[i];
    };

    while (!done) {
        block.clear();
        while (!done && block.size() < blockSize) {
            if (is_canonical(cls) && arcs_ok_full(cls)) block.push_back(cls);
            advance();
        }
        if (block.empty()) continue;
        int hit = -1;
        IntervalFamily hitFam;
        if (jobs > 1) {
            std::vector<char> ok(block.size(), 0);
            std::vector<IntervalFamily> fams(block.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
            for (int bi = 0; bi < static_cast<int>(block.size()); ++bi) {
                IntervalFamily f;
                if (test_map(block[bi], &f)) {
                    ok[bi] = 1;
                    fams[bi] = f;
                }
            }
            for (size_t bi = 0; bi < block.size(); ++bi) {
                ++verdict.coloringsTried;
                if (ok[bi]) {
                    hit = static_cast<int>(bi);
                    hitFam = fams[bi];
                    break;
                }
            }
        } else {
            for (size_t bi = 0; bi < block.size(); ++bi) {
                ++verdict.coloringsTried;
                IntervalFamily f;
                if (test_map(block[bi], &f)) {
                    hit = static_cast<int>(bi);
                    hitFam = f;
                    break;
                }
            }
        }
        if (hit >= 0) {
            verdict.yes = true;
            verdict.coloring = block[hit];
            verdict.witness = hitFam;
            int mx = 0;
            for (int c : block[hit]) mx = std::max(mx, c);
            verdict.k_used = mx;
            break;
        }
    }

    if (verdict.yes) {
        if (verify_order_representation(p, verdict.witness))
            fail("InternalError", "order k-count witness failed verification");
        if (static_cast<int>(distinct_lengths(verdict.witness).size()) > k)
            fail("InternalError", "order k-count witness uses too many lengths");
    }
    return verdict;
}

} // namespace intervalia

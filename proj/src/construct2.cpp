#include "intervalia/construct2.hpp"

#include "intervalia/error.hpp"

#include <algorithm>

namespace intervalia {

namespace {

std::vector<int> two_class_map(const Permutation& pi, const SortedColoring& coloring) {
    if (coloring.k() > 2) fail("NotSorted", "expected at most 2 classes");
    if (!is_sorted_coloring(pi, coloring)) fail("NotSorted", "coloring is not a sorted coloring");
    return coloring.class_of(pi.size());
}

} // namespace

SlackFamily compute_slacks(const Permutation& pi, const IntervalFamily& rep,
                           const SortedColoring& coloring) {
    const int n = pi.size();
    std::vector<int> cls = two_class_map(pi, coloring);
    SlackFamily fam;
    for (int i = 0; i + 1 < n; ++i) {
        int x = pi.at(i), y = pi.at(i + 1);
        if (cls[x] == cls[y]) continue;
        const Rat& rx = rep.right(x - 1);
        const Rat& ry = rep.right(y - 1);
        if (cls[x] == 2 && cls[y] == 1) {
            // TS: only when r_x > r_y; otherwise the pair imposes no constraint
            if (rx > ry) fam.all.push_back(SlackInterval{SlackInterval::TS, ry, rx, {x, y}});
        } else {
            // ST: sortedness forbids I_y inside I_x, so r_x < r_y
            if (!(rx < ry)) fail("NotSorted", "ST pair with reversed right endpoints");
            fam.all.push_back(SlackInterval{SlackInterval::ST, rx, ry, {x, y}});
        }
    }
    for (const auto& s : fam.all) {
        if (s.kind == SlackInterval::TS) {
            if (!fam.maxTS || s.value() > *fam.maxTS) fam.maxTS = s.value();
        } else {
            if (!fam.minST || s.value() < *fam.minST) fam.minST = s.value();
        }
    }
    return fam;
}

SlackFamily maximal_slacks(const SlackFamily& family) {
    const auto& all = family.all;
    std::vector<bool> contained(all.size(), false);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            const auto &J = all[i], &H = all[j];
            bool inside = J.left >= H.left && J.right <= H.right &&
                          !(J.left == H.left && J.right == H.right);
            if (!inside) continue;
            contained[i] = true;
            // Lemma 3(i): only TS inside ST, sharing one endpoint
            if (!(J.kind == SlackInterval::TS && H.kind == SlackInterval::ST))
                fail("StructureViolation", "containment must be TS inside ST");
            if (!(J.left == H.left || J.right == H.right))
                fail("StructureViolation", "contained TS must share an endpoint with its ST");
        }
    SlackFamily out;
    for (size_t i = 0; i < all.size(); ++i)
        if (!contained[i]) out.all.push_back(all[i]);
    // Lemma 3(ii): maximal slacks are pairwise non-nested and share no endpoints
    for (size_t i = 0; i < out.all.size(); ++i)
        for (size_t j = i + 1; j < out.all.size(); ++j) {
            const auto &J = out.all[i], &H = out.all[j];
            if (J.left == H.left || J.right == H.right || J.left == H.right || J.right == H.left)
                fail("StructureViolation", "maximal slacks share an endpoint");
        }
    for (const auto& s : out.all) {
        if (s.kind == SlackInterval::TS) {
            if (!out.maxTS || s.value() > *out.maxTS) out.maxTS = s.value();
        } else {
            if (!out.minST || s.value() < *out.minST) out.minST = s.value();
        }
    }
    return out;
}

IntervalFamily roberts_normalize(const Permutation& pi, const IntervalFamily& rep,
                                 const SortedColoring& coloring) {
    const int n = pi.size();
    SlackFamily maximal = maximal_slacks(compute_slacks(pi, rep, coloring));
    if (maximal.all.size() <= 1) return rep;

    // variables: r'_1..r'_n then the common length lambda
    LinearSystem sys;
    for (int j = 1; j <= n; ++j) sys.vars.push_back("r" + std::to_string(j));
    sys.vars.push_back("lambda");
    const int lam = n;
    for (int j = 0; j + 1 < n; ++j)
        sys.add_sparse({{j, Rat(1)}, {j + 1, Rat(-1)}}, Rel::Less, Rat(0));
    // l_{pi(n)} stays fixed; keep it left of the first right endpoint
    sys.add_sparse({{0, Rat(-1)}}, Rel::Less, -rep.left(pi.at(n - 1) - 1));
    sys.add_sparse({{lam, Rat(-1)}}, Rel::Less, Rat(0));
    for (const auto& s : maximal.all) {
        // slack endpoints are right endpoints of the inner pair's elements
        int left_el = (s.kind == SlackInterval::TS) ? s.innerPair.second : s.innerPair.first;
        int right_el = (s.kind == SlackInterval::TS) ? s.innerPair.first : s.innerPair.second;
        sys.add_sparse({{right_el - 1, Rat(1)}, {left_el - 1, Rat(-1)}, {lam, Rat(-1)}}, Rel::Eq,
                       Rat(0));
    }
    FeasibilityResult res = lp_feasible_strict(sys);
    if (!res.feasible) fail("InfeasibleNormalization", "equal-length system infeasible");

    IntervalFamily out = rep;
    for (int j = 0; j < n; ++j) out.iv[j].second = res.witness[j];
    if (verify_perm_representation(pi, out)) fail("InternalError", "roberts step broke the representation");
    return out;
}

IntervalFamily epsilon_expand(const Permutation& pi, const IntervalFamily& rep,
                              const SortedColoring& coloring) {
    const int n = pi.size();
    SlackFamily fam = compute_slacks(pi, rep, coloring);
    bool any_st = false;
    for (const auto& s : fam.all)
        if (s.kind == SlackInterval::ST) any_st = true;
    if (!any_st) return rep;

    // minimum gap between consecutive right endpoints (they are distinct)
    std::vector<Rat> rs;
    for (int j = 0; j < n; ++j) rs.push_back(rep.right(j));
    std::sort(rs.begin(), rs.end());
    Rat gap = rs.back() - rs.front();
    for (size_t i = 0; i + 1 < rs.size(); ++i) gap = std::min(gap, Rat(rs[i + 1] - rs[i]));
    Rat eps = gap / 4;

    IntervalFamily out = rep;
    std::vector<bool> moved(n, false);
    for (const auto& s : fam.all) {
        if (s.kind != SlackInterval::ST) continue;
        int xs = s.innerPair.first, yt = s.innerPair.second;
        if (moved[xs - 1] || moved[yt - 1]) fail("StructureViolation", "ST slacks share an endpoint");
        out.iv[xs - 1].second -= eps;
        out.iv[yt - 1].second += eps;
        moved[xs - 1] = moved[yt - 1] = true;
    }
    if (verify_perm_representation(pi, out)) fail("InternalError", "expansion broke the representation");
    SlackFamily after = compute_slacks(pi, out, coloring);
    if (after.maxTS && after.minST && !(*after.maxTS < *after.minST))
        fail("InternalError", "key inequality still violated after expansion");
    return out;
}

TwoCountRep assemble_two_count(const Permutation& pi, const IntervalFamily& rep,
                               const SortedColoring& coloring, const Rat& alphaFloor) {
    const int n = pi.size();
    std::vector<int> cls = two_class_map(pi, coloring);
    SlackFamily fam = compute_slacks(pi, rep, coloring);
    if (fam.maxTS && fam.minST && !(*fam.maxTS < *fam.minST))
        fail("KeyInequalityViolated", "max TS must be below min ST");

    Rat delta;
    if (fam.maxTS && fam.minST)
        delta = (*fam.maxTS + *fam.minST) / 2;
    else if (fam.maxTS)
        delta = *fam.maxTS + 1;
    else if (fam.minST)
        delta = *fam.minST / 2;
    else
        delta = 1;

    int last = pi.at(n - 1);
    Rat span = rep.right(last - 1) - rep.right(0);
    Rat bound = (cls[last] == 2) ? span - delta : span; // alpha must exceed this
    Rat alpha = std::max({bound, alphaFloor, Rat(0)}) + 1;

    TwoCountRep out;
    for (;;) {
        out.family = rep;
        out.alpha = alpha;
        out.beta = alpha + delta;
        for (int x = 1; x <= n; ++x)
            out.family.iv[x - 1].first =
                out.family.iv[x - 1].second - (cls[x] == 2 ? out.beta : out.alpha);
        if (!verify_perm_representation(pi, out.family)) break;
        // The chosen alpha always verifies (Prop. 3); the growth loop is kept
        // as the documented guard for the open question about colliding
        // bounds. It terminates because only the global offset grows.
        alpha *= 2;
        if (alpha > span * 1000000 + 1000000) fail("InternalError", "assembly failed to verify");
    }

    // clear denominators
    std::vector<Rat> vals{out.alpha, out.beta};
    for (const auto& [l, r] : out.family.iv) {
        vals.push_back(l);
        vals.push_back(r);
    }
    Int scale = lcm_denominators(vals);
    if (scale != 1) {
        Rat s(scale);
        for (auto& [l, r] : out.family.iv) {
            l *= s;
            r *= s;
        }
        out.alpha *= s;
        out.beta *= s;
    }
    return out;
}

TwoCountRep two_count_with_coloring(const Permutation& pi, const SortedColoring& coloring,
                                    const Rat& alphaFloor) {
    IntervalFamily rep = initial_representation(pi);
    IntervalFamily norm = roberts_normalize(pi, rep, coloring);
    IntervalFamily expanded = epsilon_expand(pi, norm, coloring);
    TwoCountRep out = assemble_two_count(pi, expanded, coloring, alphaFloor);
    if (verify_perm_representation(pi, out.family))
        fail("InternalError", "two-count assembly failed verification");
    if (distinct_lengths(out.family).size() > 2)
        fail("InternalError", "two-count assembly produced more than 2 lengths");
    return out;
}

TwoCountRep two_count_permutation(const Permutation& pi) {
    int d = perm_depth(pi);
    if (d >= 3) fail("DepthExceeded", "permutation has depth " + std::to_string(d));
    return two_count_with_coloring(pi, mirsky_sorted_coloring(pi));
}

} // namespace intervalia

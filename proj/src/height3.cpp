#include "intervalia/height3.hpp"

#include "intervalia/error.hpp"

#include <algorithm>
#include <map>

namespace intervalia {

namespace {

bool is_extremal(const CanonicalRepresentation& c, int x) {
    return c.iv[x].first == 0 || c.iv[x].second == c.m - 1;
}

} // namespace

StagedRepresentation break_ties(const IntervalOrder& p, const CanonicalRepresentation& canon) {
    const int n = p.n;
    if (height(p) > 3) fail("HeightExceeded", "order has height > 3");
    const int m = canon.m;

    std::vector<int> nonext;
    for (int x = 0; x < n; ++x)
        if (!is_extremal(canon, x)) nonext.push_back(x);

    Rat l0;
    if (nonext.empty()) {
        l0 = Rat(m - 1) / 2;
    } else {
        int best = canon.iv[nonext[0]].first;
        for (int x : nonext) best = std::max(best, canon.iv[x].first);
        l0 = Rat(best);
        // the Helly line really is common to all non-extremal intervals
        for (int x : nonext)
            if (!(Rat(canon.iv[x].first) <= l0 && l0 <= Rat(canon.iv[x].second)))
                fail("InternalError", "Helly line missed a non-extremal interval");
    }

    StagedRepresentation st;
    st.helly = l0;
    st.family.iv.resize(n);
    for (int x = 0; x < n; ++x)
        st.family.iv[x] = {Rat(canon.iv[x].first), Rat(canon.iv[x].second)};

    // the non-extremal singleton, if any, sits exactly at l0; expand it last
    int singleton = -1;
    for (int x : nonext)
        if (canon.iv[x].first == canon.iv[x].second) {
            if (singleton >= 0) fail("InternalError", "two non-extremal singletons survive twins");
            singleton = x;
        }

    // left pass: lines 0..floor(l0); spread tied left endpoints into (i-1, i)
    // ordered by right endpoint (keeps same-line intervals non-nested)
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), l0.get_num().get_mpz_t(), l0.get_den().get_mpz_t());
    int lineTop = static_cast<int>(fl.get_si());
    for (int i = 0; i <= lineTop; ++i) {
        std::vector<int> group;
        for (int x = 0; x < n; ++x) {
            if (x == singleton || canon.iv[x].first != i) continue;
            bool isMiddleish = Rat(canon.iv[x].second) > l0;
            if (i == 0 && !isMiddleish) continue; // left leftovers keep l = 0
            group.push_back(x);
        }
        if (group.empty()) continue;
        std::sort(group.begin(), group.end(), [&](int a, int b) {
            if (canon.iv[a].second != canon.iv[b].second)
                return canon.iv[a].second < canon.iv[b].second;
            return a < b;
        });
        bool keepLast = (Rat(i) < l0); // at l0 every left endpoint moves below the line
        int spread = static_cast<int>(group.size()) - (keepLast ? 1 : 0);
        for (int t = 0; t < spread; ++t) {
            // ascending r -> ascending fresh positions inside (i-1, i)
            st.family.iv[group[t]].first = Rat(i) - Rat(spread - t, spread + 1);
        }
    }

    // right pass (dual): lines ceil(l0)..m-1. Which member may keep the line
    // depends on the line: at l0 the extremal [0, l0] stays (it is a
    // leftover), on interior lines the widest member stays, at m-1 the
    // right leftovers stay while middle members move up.
    int lineBot = lineTop;
    if (Rat(lineTop) < l0) ++lineBot;
    for (int j = lineBot; j <= m - 1; ++j) {
        std::vector<int> group;
        for (int x = 0; x < n; ++x) {
            if (x == singleton || canon.iv[x].second != j) continue;
            bool middleish = st.family.left(x) < l0 && Rat(canon.iv[x].second) > l0;
            if (Rat(j) == l0 && is_extremal(canon, x)) continue;  // [0, l0] keeps the line
            if (j == m - 1 && !middleish) continue;               // right leftovers keep m-1
            group.push_back(x);
        }
        if (group.empty()) continue;
        std::sort(group.begin(), group.end(), [&](int a, int b) {
            if (st.family.left(a) != st.family.left(b)) return st.family.left(a) < st.family.left(b);
            return a < b;
        });
        bool keepFirst = (Rat(j) > l0 && j < m - 1);
        int keep = keepFirst ? 1 : 0;
        int spread = static_cast<int>(group.size()) - keep;
        for (int t = 0; t < spread; ++t) {
            int x = group[keep + t];
            // ascending l -> ascending fresh positions inside (j, j+1)
            st.family.iv[x].second = Rat(j) + Rat(t + 1, spread + 1);
        }
    }

    // expand the singleton around l0, inside the gap to the nearest endpoint
    if (singleton >= 0) {
        Rat eps(1, 4);
        for (int x = 0; x < n; ++x) {
            if (x == singleton) continue;
            for (const Rat& e : {st.family.iv[x].first, st.family.iv[x].second}) {
                Rat d = e > l0 ? e - l0 : l0 - e;
                if (d > 0) eps = std::min(eps, Rat(d / 2));
            }
        }
        st.family.iv[singleton] = {l0 - eps, l0 + eps};
    }

    if (verify_order_representation(p, st.family))
        fail("InternalError", "tie breaking broke the representation");

    for (int x = 0; x < n; ++x) {
        const auto& [l, r] = st.family.iv[x];
        if (l < l0 && l0 < r)
            st.middle.push_back(x);
        else if (r <= l0)
            st.extremalLeft.push_back(x);
        else
            st.extremalRight.push_back(x);
    }
    // leftovers really are the extremal intervals of the canonical picture
    for (int x : st.extremalLeft)
        if (canon.iv[x].first != 0) fail("MissingExtremalAtLine", "left leftover does not touch 0");
    for (int x : st.extremalRight)
        if (canon.iv[x].second != m - 1)
            fail("MissingExtremalAtLine", "right leftover does not touch m-1");
    return st;
}

MiddlePart middle_part(const StagedRepresentation& staged) {
    MiddlePart out;
    std::vector<int> byLeft = staged.middle, byRight = staged.middle;
    auto& fam = staged.family;
    std::sort(byLeft.begin(), byLeft.end(),
              [&](int a, int b) { return fam.left(a) < fam.left(b); });
    std::sort(byRight.begin(), byRight.end(),
              [&](int a, int b) { return fam.right(a) < fam.right(b); });
    const int k = static_cast<int>(staged.middle.size());
    std::vector<int> valueOf(k >= 1 ? *std::max_element(staged.middle.begin(), staged.middle.end()) + 1
                                    : 0,
                             0);
    for (int v = 0; v < k; ++v) valueOf[byRight[v]] = v + 1;
    std::vector<int> vals;
    for (int i = 0; i < k; ++i) vals.push_back(valueOf[byLeft[i]]);
    if (k > 0) {
        out.pi = make_permutation(vals);
        int d = perm_depth(out.pi);
        if (d > 2) fail("DepthExceeded", "middle-part permutation has depth " + std::to_string(d));
    }
    out.byValue.assign(k + 1, -1);
    for (int v = 1; v <= k; ++v) out.byValue[v] = byRight[v - 1];
    out.leftLeftovers = staged.extremalLeft;
    out.rightLeftovers = staged.extremalRight;
    return out;
}

namespace {

Rat placement_in_gap(const Rat& lower, const Rat& upper) { return lower + (upper - lower) / 2; }

} // namespace

Height3Result two_count_height3(const IntervalOrder& p) {
    require_interval_order(p);
    if (height(p) > 3) fail("HeightExceeded", "order has height > 3");
    int d = depth_order(p);
    if (d > 2) fail("DepthExceeded", "order has depth " + std::to_string(d));

    TwinReduction tw = collapse_twins(p);
    const IntervalOrder& q = tw.reduced;
    CanonicalRepresentation canon = canonical_representation(q);
    StagedRepresentation staged = break_ties(q, canon);
    MiddlePart mid = middle_part(staged);
    const int k = mid.pi.size();

    // Stage 2: two-count representation of the middle part. alpha has to клеar
    // every leftover length plus the whole middle span, so the merged extremal
    // intervals cannot nest with middle intervals.
    Rat alpha(1), beta(1);
    IntervalFamily midFam; // by middle value 1..k
    Rat maxLeftoverLen(0);
    for (int x : mid.leftLeftovers)
        maxLeftoverLen = std::max(maxLeftoverLen, Rat(staged.family.right(x) - staged.family.left(x)));
    for (int x : mid.rightLeftovers)
        maxLeftoverLen = std::max(maxLeftoverLen, Rat(staged.family.right(x) - staged.family.left(x)));

    if (k > 0) {
        SortedColoring col = mirsky_sorted_coloring(mid.pi);
        // probe run fixes the right-endpoint span; the span is unchanged by the
        // alpha re-choice because assemble keeps right endpoints fixed
        IntervalFamily rep0 = initial_representation(mid.pi);
        IntervalFamily norm = roberts_normalize(mid.pi, rep0, col);
        IntervalFamily expanded = epsilon_expand(mid.pi, norm, col);
        SlackFamily fam = compute_slacks(mid.pi, expanded, col);
        Rat delta = fam.maxTS && fam.minST ? (*fam.maxTS + *fam.minST) / 2
                    : fam.maxTS            ? *fam.maxTS + 1
                    : fam.minST            ? *fam.minST / 2
                                           : Rat(1);
        Rat wr = expanded.right(k - 1) - expanded.right(0);
        Rat floor = 2 * wr + 2 * delta + maxLeftoverLen + 4;
        TwoCountRep rep = assemble_two_count(mid.pi, expanded, col, floor);
        alpha = rep.alpha;
        beta = rep.beta;
        midFam = rep.family;
    } else {
        alpha = maxLeftoverLen + 1;
        beta = alpha;
    }

    // Stage 3: merge the leftovers back, each with length exactly alpha.
    IntervalFamily merged;
    merged.iv.resize(q.n);
    for (int v = 1; v <= k; ++v) merged.iv[mid.byValue[v]] = midFam.iv[v - 1];

    Rat minL(0), maxL(0), minR(0), maxR(0);
    if (k > 0) {
        minL = maxL = midFam.left(0);
        minR = maxR = midFam.right(0);
        for (int v = 0; v < k; ++v) {
            minL = std::min(minL, midFam.left(v));
            maxL = std::max(maxL, midFam.left(v));
            minR = std::min(minR, midFam.right(v));
            maxR = std::max(maxR, midFam.right(v));
        }
    }

    // left leftovers: place right endpoints among the middle left endpoints,
    // respecting the staged relations; extend left to length alpha
    {
        std::vector<int> lo = mid.leftLeftovers;
        std::sort(lo.begin(), lo.end(), [&](int a, int b) {
            if (staged.family.right(a) != staged.family.right(b))
                return staged.family.right(a) < staged.family.right(b);
            return a < b;
        });
        int t = 0;
        for (int x : lo) {
            Rat lower, upper;
            bool hasLower = false, hasUpper = false;
            for (int v = 1; v <= k; ++v) {
                int y = mid.byValue[v];
                bool overlap = staged.family.left(y) <= staged.family.right(x);
                if (overlap) {
                    if (!hasLower || midFam.left(v - 1) > lower) lower = midFam.left(v - 1);
                    hasLower = true;
                } else {
                    if (!hasUpper || midFam.left(v - 1) < upper) upper = midFam.left(v - 1);
                    hasUpper = true;
                }
            }
            Rat pos;
            if (k == 0) {
                pos = Rat(t);
            } else if (!hasLower) {
                pos = minL - 1 - Rat(t, static_cast<int>(lo.size()) + 1);
            } else if (!hasUpper) {
                // above all middle lefts: stay inside the Eq.-(5) gap
                pos = maxL + Rat(t + 1, static_cast<int>(lo.size()) + 1) * (minR - maxL) / 2;
            } else {
                pos = placement_in_gap(lower, upper);
            }
            merged.iv[x] = {pos - alpha, pos};
            ++t;
        }
    }
    // right leftovers, dual
    {
        std::vector<int> hi = mid.rightLeftovers;
        std::sort(hi.begin(), hi.end(), [&](int a, int b) {
            if (staged.family.left(a) != staged.family.left(b))
                return staged.family.left(a) < staged.family.left(b);
            return a < b;
        });
        int t = 0;
        for (int x : hi) {
            Rat lower, upper;
            bool hasLower = false, hasUpper = false;
            for (int v = 1; v <= k; ++v) {
                int y = mid.byValue[v];
                bool overlap = staged.family.right(y) >= staged.family.left(x);
                if (overlap) {
                    if (!hasUpper || midFam.right(v - 1) < upper) upper = midFam.right(v - 1);
                    hasUpper = true;
                } else {
                    if (!hasLower || midFam.right(v - 1) > lower) lower = midFam.right(v - 1);
                    hasLower = true;
                }
            }
            Rat pos;
            if (k == 0) {
                pos = Rat(t) + alpha + 1;
            } else if (!hasUpper) {
                pos = maxR + 1 + Rat(t, static_cast<int>(hi.size()) + 1);
            } else if (!hasLower) {
                pos = upper - Rat(t + 1, static_cast<int>(hi.size()) + 1) * (upper - maxL) / 2;
            } else {
                pos = placement_in_gap(lower, upper);
            }
            merged.iv[x] = {pos, pos + alpha};
            ++t;
        }
    }

    if (verify_order_representation(q, merged))
        fail("InternalError", "merge broke the reduced representation");

    // stage-3 invariant: merged extremal intervals nest with no middle interval
    for (int x : mid.leftLeftovers)
        for (int v = 1; v <= k; ++v) {
            int y = mid.byValue[v];
            bool xInY = merged.left(y) <= merged.left(x) && merged.right(x) <= merged.right(y);
            bool yInX = merged.left(x) <= merged.left(y) && merged.right(y) <= merged.right(x);
            if (xInY || yInX) fail("InternalError", "merged leftover nests with a middle interval");
        }
    for (int x : mid.rightLeftovers)
        for (int v = 1; v <= k; ++v) {
            int y = mid.byValue[v];
            bool xInY = merged.left(y) <= merged.left(x) && merged.right(x) <= merged.right(y);
            bool yInX = merged.left(x) <= merged.left(y) && merged.right(y) <= merged.right(x);
            if (xInY || yInX) fail("InternalError", "merged leftover nests with a middle interval");
        }

    // re-expand twins and clear denominators
    Height3Result out;
    out.family.iv.resize(p.n);
    for (int x = 0; x < p.n; ++x) out.family.iv[x] = merged.iv[tw.rep_of[x]];
    std::vector<Rat> vals{alpha, beta};
    for (const auto& [l, r] : out.family.iv) {
        vals.push_back(l);
        vals.push_back(r);
    }
    Int scale = lcm_denominators(vals);
    Rat s(scale);
    if (scale != 1)
        for (auto& [l, r] : out.family.iv) {
            l *= s;
            r *= s;
        }
    out.alpha = alpha * s;
    out.beta = beta * s;

    if (verify_order_representation(p, out.family))
        fail("InternalError", "final representation failed verification");
    if (distinct_lengths(out.family).size() > 2)
        fail("InternalError", "final representation uses more than 2 lengths");
    return out;
}

} // namespace intervalia

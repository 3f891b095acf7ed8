#include "intervalia/explorer.hpp"

#include "intervalia/error.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <numeric>

namespace intervalia {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

// Deterministic parallel map over an indexable batch: results are reduced in
// index order, so parallel and serial runs report identical witnesses.
template <typename Item, typename Fn>
std::vector<std::string> scan_batch(const std::vector<Item>& items, int jobs, Fn&& failsWitness) {
    std::vector<std::string> failures(items.size());
    std::vector<char> failed(items.size(), 0);
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int i = 0; i < static_cast<int>(items.size()); ++i) {
            std::string w;
            if (failsWitness(items[i], &w)) {
                failed[i] = 1;
                failures[i] = w;
            }
        }
    } else {
        for (size_t i = 0; i < items.size(); ++i) {
            std::string w;
            if (failsWitness(items[i], &w)) {
                failed[i] = 1;
                failures[i] = w;
            }
        }
    }
    std::vector<std::string> out;
    for (size_t i = 0; i < items.size(); ++i)
        if (failed[i]) out.push_back(failures[i]);
    return out;
}

} // namespace

void enumerate_permutations(int n, const std::function<bool(const Permutation&)>& yield) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        if (!yield(Permutation{v})) return;
    } while (std::next_permutation(v.begin(), v.end()));
}

SearchReport search_non_2count_orders(int nMax, bool fourPlusOneFree, bool depthAtMost2, int jobs,
                                      bool allow_large) {
    if (nMax > 10 && !allow_large)
        fail("TooLarge", "n > 10 needs the override flag");
    double t0 = now_seconds();
    SearchReport rep;
    rep.what = "non-2count-orders";
    rep.nMax = nMax;
    rep.jobs = jobs;
    rep.enumerated.assign(nMax + 1, 0);
    rep.filtered.assign(nMax + 1, 0);
    for (int n = 1; n <= nMax; ++n) {
        std::vector<AscentSequence> candidates;
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            ++rep.enumerated[n];
            IntervalOrder p = order_from_ascent(s);
            if (fourPlusOneFree && find_chain_plus_one(p, 4)) return;
            if (depthAtMost2 && depth_order(p) > 2) return;
            candidates.push_back(s);
        });
        rep.filtered[n] = candidates.size();
        auto failures = scan_batch(candidates, jobs, [&](const AscentSequence& s, std::string* w) {
            IntervalOrder p = order_from_ascent(s);
            KCountVerdict v = is_k_count_order(p, 2, 1, true);
            if (v.yes) return false;
            *w = s.str();
            return true;
        });
        for (auto& w : failures) rep.witnesses.push_back(w);
    }
    rep.seconds = now_seconds() - t0;
    return rep;
}

SearchReport search_non_3count_perms(int nMax, int jobs, bool use_shortcuts) {
    if (nMax > 9) fail("TooLarge", "n > 9 needs a stretch run; lower nMax");
    double t0 = now_seconds();
    SearchReport rep;
    rep.what = "non-3count-perms";
    rep.nMax = nMax;
    rep.jobs = jobs;
    rep.enumerated.assign(nMax + 1, 0);
    rep.filtered.assign(nMax + 1, 0);
    for (int n = 1; n <= nMax; ++n) {
        std::vector<Permutation> candidates;
        enumerate_permutations(n, [&](const Permutation& pi) {
            ++rep.enumerated[n];
            int d = perm_depth(pi);
            // depth <= 2 is 2-count (hence 3-count), depth >= 4 forces four
            // lengths on a nested 4-chain; both verdicts are immediate
            if (use_shortcuts && d != 3) return true;
            if (!use_shortcuts && d > 3) return true; // depth>=4 can never be 3-count
            candidates.push_back(pi);
            return true;
        });
        rep.filtered[n] = candidates.size();
        auto failures = scan_batch(candidates, jobs, [&](const Permutation& pi, std::string* w) {
            KCountVerdict v = is_k_count_perm(pi, 3);
            if (v.yes) return false;
            if (perm_depth(pi) <= 2) return false; // shortcut re-validation path
            *w = pi.str();
            return true;
        });
        for (auto& w : failures) rep.witnesses.push_back(w);
    }
    rep.seconds = now_seconds() - t0;
    return rep;
}

ConjectureOutcome conjecture_check(const IntervalOrder& p, int jobs) {
    ConjectureOutcome out;
    if (find_chain_plus_one(p, 4)) return out;
    if (depth_order(p) > 2) return out;
    out.applicable = true;

    PPGraph g = pp_graph(p);
    const int n = p.n;
    // 0 = free, 1 = green (short), 2 = red (long)
    std::vector<int> forced(n, 0);
    bool consistent = true;
    for (auto [pith, peel] : g.arcs) {
        if (forced[pith] == 2 || forced[peel] == 1) consistent = false;
        forced[pith] = 1;
        forced[peel] = 2;
    }
    std::vector<SpringWitness> springs = find_springs(p);

    if (consistent) {
        std::vector<int> freeElems;
        for (int x = 0; x < n; ++x)
            if (!forced[x]) freeElems.push_back(x);
        std::vector<int> color = forced;
        auto violates = [&]() {
            for (const auto& s : springs) {
                // pattern roles 0..5; forced colors: roles 3,4 red; 1,2 green
                if (color[s.roles[3]] == 2 && color[s.roles[4]] == 2 &&
                    color[s.roles[1]] == 1 && color[s.roles[2]] == 1)
                    return true;
            }
            return false;
        };
        std::uint64_t total = 1ull << freeElems.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            for (size_t i = 0; i < freeElems.size(); ++i)
                color[freeElems[i]] = (mask >> i & 1) ? 2 : 1;
            if (!violates()) {
                out.criterion = true;
                break;
            }
        }
    }
    out.twoCount = is_k_count_order(p, 2, jobs, true).yes;
    out.agree = (out.criterion == out.twoCount);
    return out;
}

SearchReport sweep_conjecture(int nMax, int jobs) {
    double t0 = now_seconds();
    SearchReport rep;
    rep.what = "conjecture";
    rep.nMax = nMax;
    rep.jobs = jobs;
    rep.enumerated.assign(nMax + 1, 0);
    rep.filtered.assign(nMax + 1, 0);
    for (int n = 1; n <= nMax; ++n) {
        std::vector<AscentSequence> candidates;
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            ++rep.enumerated[n];
            candidates.push_back(s);
        });
        rep.filtered[n] = candidates.size();
        auto failures = scan_batch(candidates, jobs, [&](const AscentSequence& s, std::string* w) {
            IntervalOrder p = order_from_ascent(s);
            ConjectureOutcome oc = conjecture_check(p, 1);
            if (!oc.applicable || oc.agree) return false;
            *w = s.str();
            return true;
        });
        for (auto& w : failures) rep.witnesses.push_back(w);
    }
    rep.seconds = now_seconds() - t0;
    return rep;
}

} // namespace intervalia

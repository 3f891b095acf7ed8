#include "intervalia/perm.hpp"

#include "intervalia/error.hpp"

#include <algorithm>

namespace intervalia {

std::string Permutation::str() const {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

Permutation make_permutation(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n < 1) fail("BadPermutation", "permutation must be non-empty");
    std::vector<char> seen(n + 1, 0);
    for (int x : values) {
        if (x < 1 || x > n || seen[x]) fail("BadPermutation", "not a permutation of 1..n");
        seen[x] = 1;
    }
    return Permutation{std::move(values)};
}

Permutation parse_permutation(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        fail("BadPermutation", "expected bracketed one-line notation like [2,1]");
    s = s.substr(1, s.size() - 2);
    std::vector<int> vals;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) fail("BadPermutation", "empty entry");
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            fail("BadPermutation", "bad entry '" + cur + "'");
        }
        if (pos != cur.size()) fail("BadPermutation", "bad entry '" + cur + "'");
        vals.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return make_permutation(std::move(vals));
}

int perm_depth(const Permutation& pi) {
    // longest strictly decreasing subsequence == LIS of the reversed sequence;
    // patience piles with binary search
    const int n = pi.size();
    std::vector<int> tails; // tails[len-1] = smallest tail of an increasing subsequence of that length
    tails.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        int x = pi.at(i);
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

std::vector<std::pair<int, int>> nesting_pairs(const Permutation& pi) {
    const int n = pi.size();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pi.at(i) > pi.at(j)) out.emplace_back(pi.at(j), pi.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SortedColoring::class_of(int n) const {
    std::vector<int> c(n + 1, 0);
    for (int i = 0; i < k(); ++i)
        for (int x : classes[i]) c[x] = i + 1;
    return c;
}

bool is_sorted_coloring(const Permutation& pi, const SortedColoring& col) {
    const int n = pi.size();
    std::vector<int> cls(n + 1, 0);
    for (int i = 0; i < col.k(); ++i) {
        if (col.classes[i].empty()) return false;
        for (int x : col.classes[i]) {
            if (x < 1 || x > n || cls[x]) return false;
            cls[x] = i + 1;
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!cls[x]) return false;
    for (auto [inner, outer] : nesting_pairs(pi))
        if (!(cls[inner] < cls[outer])) return false;
    return true;
}

SortedColoring mirsky_sorted_coloring(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> level(n, 0); // by position
    for (int i = n - 1; i >= 0; --i) {
        int best = 0;
        for (int j = i + 1; j < n; ++j)
            if (pi.at(j) < pi.at(i)) best = std::max(best, level[j]);
        level[i] = best + 1;
    }
    int k = *std::max_element(level.begin(), level.end());
    SortedColoring c;
    c.classes.assign(k, {});
    for (int i = 0; i < n; ++i) c.classes[level[i] - 1].push_back(pi.at(i));
    for (auto& cl : c.classes) std::sort(cl.begin(), cl.end());
    return c;
}

void enumerate_sorted_colorings(const Permutation& pi, int k,
                                const std::function<bool(const SortedColoring&)>& yield) {
    const int n = pi.size();
    if (k < 1) return;
    // constraints on value classes: cls[inner] < cls[outer] per nesting pair
    std::vector<std::vector<int>> must_exceed(n + 1); // value -> values that must be smaller-class
    auto pairs = nesting_pairs(pi);
    std::vector<std::vector<int>> inner_of(n + 1);
    for (auto [inner, outer] : pairs) inner_of[outer].push_back(inner);

    std::vector<int> cls(n + 1, 0);
    std::vector<int> count(k + 1, 0);
    bool stop = false;

    std::function<void(int)> rec = [&](int val) {
        if (stop) return;
        if (val > n) {
            bool all = true;
            for (int c = 1; c <= k; ++c)
                if (!count[c]) { all = false; break; }
            if (!all) return;
            SortedColoring out;
            out.classes.assign(k, {});
            for (int x = 1; x <= n; ++x) out.classes[cls[x] - 1].push_back(x);
            if (!yield(out)) stop = true;
            return;
        }
        // non-emptiness pruning: remaining assignments must cover empty classes
        int empty = 0;
        for (int c = 1; c <= k; ++c)
            if (!count[c]) ++empty;
        if (empty > n - val + 1) return;
        for (int c = 1; c <= k && !stop; ++c) {
            bool ok = true;
            for (int inner : inner_of[val])
                if (inner < val && cls[inner] >= c) { ok = false; break; }
            // val may also be an inner of an already-assigned larger value? values
            // assigned in increasing order, outers are larger values: check pairs
            // (val, outer) with outer < val impossible since outer > inner=val.
            if (!ok) continue;
            // pairs where val is inner and outer already assigned cannot exist
            // (outer > val not yet assigned); pairs where val is outer handled above.
            cls[val] = c;
            ++count[c];
            rec(val + 1);
            --count[c];
            cls[val] = 0;
        }
    };
    rec(1);
}

std::vector<SortedColoring> enumerate_sorted_colorings(const Permutation& pi, int k) {
    std::vector<SortedColoring> out;
    enumerate_sorted_colorings(pi, k, [&](const SortedColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

IntervalFamily initial_representation(const Permutation& pi) {
    const int n = pi.size();
    IntervalFamily f;
    f.iv.assign(n, {Rat(0), Rat(0)});
    for (int i = 0; i < n; ++i) {
        int value = pi.at(i);
        f.iv[value - 1].first = Rat(i + 1 - n - 1); // position 1-based minus n+1
        f.iv[value - 1].second = Rat(value);
    }
    return f;
}

std::optional<Violation> verify_perm_representation(const Permutation& pi, const IntervalFamily& f) {
    const int n = pi.size();
    if (f.size() != n) fail("IndexMismatch", "family size differs from permutation size");
    for (int i = 0; i + 1 < n; ++i) {
        int x = pi.at(i), y = pi.at(i + 1);
        if (!(f.left(x - 1) < f.left(y - 1))) return Violation{x, y};
    }
    if (n >= 1 && !(f.left(pi.at(n - 1) - 1) < f.right(0)))
        return Violation{pi.at(n - 1), 1};
    for (int j = 1; j < n; ++j)
        if (!(f.right(j - 1) < f.right(j))) return Violation{j, j + 1};
    for (int j = 0; j < n; ++j)
        if (!(f.left(j) <= f.right(j))) return Violation{j + 1, j + 1};
    return std::nullopt;
}

std::vector<Rat> distinct_lengths(const IntervalFamily& f) {
    std::vector<Rat> lens;
    lens.reserve(f.size());
    for (const auto& [l, r] : f.iv) lens.push_back(r - l);
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    return lens;
}

} // namespace intervalia

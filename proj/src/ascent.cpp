#include "intervalia/ascent.hpp"

#include "intervalia/error.hpp"

#include <map>

namespace intervalia {

int ascent_count(const std::vector<int>& entries) {
    int a = 0;
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) ++a;
    return a;
}

std::string AscentSequence::str() const {
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    return s;
}

AscentSequence make_ascent_sequence(std::vector<int> entries) {
    if (entries.empty()) fail("EmptySequence", "ascent sequence must be non-empty");
    if (entries[0] != 0) fail("FirstEntryNonzero", "entry 0 must be 0");
    int asc = 0;
    for (size_t i = 1; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] > asc + 1)
            fail("AscentBoundViolated",
                 "entry " + std::to_string(i) + " = " + std::to_string(entries[i]) +
                     " exceeds ascent bound " + std::to_string(asc + 1));
        if (entries[i] > entries[i - 1]) ++asc;
    }
    return AscentSequence{std::move(entries)};
}

AscentSequence parse_ascent_sequence(const std::string& text) {
    std::vector<int> entries;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) fail("NotAnInteger", "empty entry in ascent sequence");
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            fail("NotAnInteger", "bad entry '" + cur + "'");
        }
        if (pos != cur.size()) fail("NotAnInteger", "bad entry '" + cur + "'");
        entries.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush();
    return make_ascent_sequence(std::move(entries));
}

void enumerate_ascent_sequences(int n, const std::function<void(const AscentSequence&)>& yield) {
    if (n < 1) fail("BadLength", "n must be >= 1");
    std::vector<int> cur(1, 0);
    // iterative DFS, lexicographic
    std::function<void(int)> rec = [&](int asc) {
        if (static_cast<int>(cur.size()) == n) {
            yield(AscentSequence{cur});
            return;
        }
        int last = cur.back();
        for (int a = 0; a <= asc + 1; ++a) {
            cur.push_back(a);
            rec(asc + (a > last ? 1 : 0));
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<AscentSequence> enumerate_ascent_sequences(int n) {
    std::vector<AscentSequence> out;
    enumerate_ascent_sequences(n, [&](const AscentSequence& s) { out.push_back(s); });
    return out;
}

std::uint64_t count_ascent_sequences(int n) {
    if (n < 1) fail("BadLength", "n must be >= 1");
    // f(len, asc, last): number of completions; memoized
    std::map<std::tuple<int, int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int, int)> f = [&](int len, int asc, int last) -> std::uint64_t {
        if (len == n) return 1;
        auto key = std::make_tuple(len, asc, last);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (int a = 0; a <= asc + 1; ++a)
            total += f(len + 1, asc + (a > last ? 1 : 0), a);
        memo[key] = total;
        return total;
    };
    return f(1, 0, 0);
}

} // namespace intervalia

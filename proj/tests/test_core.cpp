#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intervalia/error.hpp"
#include "intervalia/explorer.hpp"
#include "intervalia/order.hpp"
#include "intervalia/perm.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace intervalia;

namespace {

const char* kFig1 = "0,1,2,0,3,2,3,0,2,4,2";
const char* kFig8 = "0,1,0,1,2,1,0,2,0,2,0,3";

IntervalOrder fig1() { return order_from_ascent(parse_ascent_sequence(kFig1)); }
IntervalOrder fig8() { return order_from_ascent(parse_ascent_sequence(kFig8)); }

} // namespace

TEST_CASE("ascent sequence parsing") {
    CHECK(parse_ascent_sequence(kFig1).size() == 11);
    CHECK(parse_ascent_sequence("0").size() == 1);
    CHECK_THROWS_WITH_AS(parse_ascent_sequence("0,2"), doctest::Contains("entry 1"), Error);
    CHECK_THROWS_AS(parse_ascent_sequence("1"), Error);
    CHECK_THROWS_AS(parse_ascent_sequence("0,x"), Error);
    CHECK_THROWS_AS(parse_ascent_sequence(""), Error);
}

TEST_CASE("enumeration matches the recursive counter") {
    const std::uint64_t expected[] = {1, 2, 5, 15, 53, 217, 1014, 5335};
    for (int n = 1; n <= 8; ++n) {
        CHECK(count_ascent_sequences(n) == expected[n - 1]);
    }
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t seen = 0;
        std::vector<int> prev;
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            ++seen;
            CHECK(prev < s.entries); // lexicographic
            prev = s.entries;
        });
        CHECK(seen == count_ascent_sequences(n));
    }
}

TEST_CASE("tiny orders from sequences") {
    IntervalOrder one = order_from_ascent(parse_ascent_sequence("0"));
    CHECK(one.n == 1);

    IntervalOrder anti = order_from_ascent(parse_ascent_sequence("0,0"));
    CHECK(anti.incomparable(0, 1));

    IntervalOrder chain = order_from_ascent(parse_ascent_sequence("0,1"));
    CHECK(chain.less(0, 1));
}

TEST_CASE("figure 1 order") {
    IntervalOrder p = fig1();
    CanonicalRepresentation c = canonical_representation(p);
    std::vector<std::pair<int, int>> want = {{0, 0}, {1, 1}, {3, 3}, {0, 3}, {6, 6}, {3, 5},
                                             {5, 6}, {0, 2}, {2, 4}, {4, 6}, {2, 6}};
    CHECK(c.iv == want);
    CHECK(c.m == 7);
    CHECK(magnitude(p) == 7);
    CHECK(depth_order(p) == 2);
    CHECK(height(p) == 4); // contains the chain 1 < 2 < 3 < 5
    CHECK(!find_chain_plus_one(p, 4).has_value());
    CHECK(find_chain_plus_one(p, 3).has_value());

    PPGraph g = pp_graph(p);
    std::set<std::pair<int, int>> arcs(g.arcs.begin(), g.arcs.end());
    std::set<std::pair<int, int>> wantArcs = {{1, 3}, {1, 7}, {2, 8}, {2, 10}, {5, 10}};
    CHECK(arcs == wantArcs); // 1-based: 2->4, 2->8, 3->9, 3->11, 6->11

    auto springs = find_springs(p);
    bool found = false;
    for (const auto& w : springs) {
        auto s = w.sorted_elements();
        if (s == std::array<int, 6>{0, 1, 3, 5, 6, 8}) found = true; // {1,2,4,6,7,9}
    }
    CHECK(found);

    AscentSequence back = ascent_of_order(p);
    CHECK(back.str() == kFig1);
}

TEST_CASE("figure 8 order") {
    IntervalOrder p = fig8();
    CanonicalRepresentation c = canonical_representation(p);
    auto multiset = c.iv;
    std::sort(multiset.begin(), multiset.end());
    std::vector<std::pair<int, int>> want = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4},
                                             {1, 5}, {2, 3}, {3, 6}, {4, 6}, {5, 6}, {6, 6}};
    CHECK(multiset == want);
    CHECK(c.m == 7);
    CHECK(height(p) == 3);
    CHECK(depth_order(p) == 2);
    CHECK(find_springs(p).empty()); // springs have height 4
}

TEST_CASE("round trip over all small sequences") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            IntervalOrder p = order_from_ascent(s);
            AscentSequence back = ascent_of_order(p);
            REQUIRE(back.entries == s.entries);
        });
    }
}

TEST_CASE("distinct sequences give non-isomorphic orders") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<std::pair<int, int>>> keys;
        std::uint64_t total = 0;
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            ++total;
            auto c = canonical_representation(order_from_ascent(s));
            auto key = c.iv;
            std::sort(key.begin(), key.end());
            keys.insert(key);
        });
        CHECK(keys.size() == total);
    }
}

TEST_CASE("canonical representation invariants") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            IntervalOrder p = order_from_ascent(s);
            CanonicalRepresentation c = canonical_representation(p);
            REQUIRE(!verify_order_representation(p, c.family()).has_value());
            std::vector<char> isLeft(c.m, 0), isRight(c.m, 0);
            bool has00 = false, hasTop = false;
            for (auto [l, r] : c.iv) {
                REQUIRE(0 <= l);
                REQUIRE(l <= r);
                REQUIRE(r <= c.m - 1);
                isLeft[l] = isRight[r] = 1;
                if (l == 0 && r == 0) has00 = true;
                if (l == c.m - 1 && r == c.m - 1) hasTop = true;
            }
            for (int i = 0; i < c.m; ++i) {
                REQUIRE(isLeft[i]);
                REQUIRE(isRight[i]);
            }
            REQUIRE(has00);
            REQUIRE(hasTop);
        });
    }
    CanonicalRepresentation c1 = canonical_representation(order_from_ascent(parse_ascent_sequence("0")));
    CHECK(c1.m == 1);
    CHECK(c1.iv == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("magnitude of chains matches brute force") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::pair<int, int>> rel;
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) rel.emplace_back(a, b);
        IntervalOrder chain = make_order(k, rel);
        CHECK(magnitude(chain) == k);
        CHECK(testing::magnitude_brute_force(chain) == k);
    }
}

TEST_CASE("not an interval order") {
    IntervalOrder p = make_order(4, {{1, 2}, {3, 4}}); // a 2+2
    CHECK(!is_two_plus_two_free(p));
    CHECK_THROWS_AS(canonical_representation(p), Error);
    CHECK_THROWS_AS(ascent_of_order(p), Error);
}

TEST_CASE("chain plus one") {
    IntervalOrder chain3 = make_order(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(!find_chain_plus_one(chain3, 3).has_value());
    IntervalOrder p31 = make_order(4, {{1, 2}, {1, 3}, {2, 3}});
    auto w = find_chain_plus_one(p31, 3);
    REQUIRE(w.has_value());
    CHECK(w->isolated == 3);
    CHECK(w->chain.size() == 3);
    PPGraph g = pp_graph(p31);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0] == std::pair<int, int>(1, 3)); // pith "2", peel "4"
}

TEST_CASE("depth facts") {
    IntervalOrder chain4 = order_from_ascent(parse_ascent_sequence("0,1,2,3"));
    CHECK(depth_order(chain4) == 1);
    CHECK(pp_graph(chain4).arcs.empty());
    for (int n = 1; n <= 6; ++n) {
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            IntervalOrder p = order_from_ascent(s);
            bool semi = !find_chain_plus_one(p, 3).has_value();
            if (semi) {
                REQUIRE(pp_graph(p).arcs.empty());
                REQUIRE(depth_order(p) == 1);
            }
        });
    }
}

TEST_CASE("pp graph and springs under duality") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            IntervalOrder p = order_from_ascent(s);
            IntervalOrder d = p.dual();
            PPGraph gp = pp_graph(p), gd = pp_graph(d);
            // piths stay piths under dualization, so the arc sets agree
            std::set<std::pair<int, int>> ap(gp.arcs.begin(), gp.arcs.end());
            std::set<std::pair<int, int>> ad(gd.arcs.begin(), gd.arcs.end());
            REQUIRE(ap == ad);
            REQUIRE(find_springs(p).size() == find_springs(d).size());
        });
    }
}

TEST_CASE("springs on flat posets") {
    IntervalOrder anti = order_from_ascent(parse_ascent_sequence("0,0,0,0,0,0"));
    CHECK(find_springs(anti).empty());
    for (int n = 6; n <= 7; ++n) {
        enumerate_ascent_sequences(n, [&](const AscentSequence& s) {
            IntervalOrder p = order_from_ascent(s);
            if (height(p) <= 3) REQUIRE(find_springs(p).empty());
        });
    }
}

TEST_CASE("twins") {
    IntervalOrder anti2 = order_from_ascent(parse_ascent_sequence("0,0"));
    TwinReduction tw = collapse_twins(anti2);
    CHECK(tw.reduced.n == 1);
    CHECK(tw.classes[0].size() == 2);

    IntervalOrder lam = order_from_ascent(parse_ascent_sequence("0,0,1"));
    TwinReduction tl = collapse_twins(lam);
    CHECK(tl.reduced.n == 2);
    CHECK(tl.rep_of[0] == tl.rep_of[1]); // the two minimal elements are twins

    IntervalOrder chain = order_from_ascent(parse_ascent_sequence("0,1,2"));
    CHECK(collapse_twins(chain).reduced.n == 3);
}

TEST_CASE("verify order representation") {
    IntervalOrder chain2 = make_order(2, {{1, 2}});
    IntervalFamily overlapping;
    overlapping.iv = {{Rat(0), Rat(2)}, {Rat(1), Rat(3)}};
    CHECK(verify_order_representation(chain2, overlapping).has_value());
    IntervalFamily good;
    good.iv = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
    CHECK(!verify_order_representation(chain2, good).has_value());
    IntervalFamily wrongSize;
    wrongSize.iv = {{Rat(0), Rat(0)}};
    CHECK_THROWS_AS(verify_order_representation(chain2, wrongSize), Error);
}

// ---------------------------------------------------------------------------
// permutations
// ---------------------------------------------------------------------------

TEST_CASE("perm parsing and depth") {
    Permutation fig4 = parse_permutation("[4,2,5,10,3,1,7,6,9,8]");
    CHECK(fig4.size() == 10);
    CHECK(perm_depth(fig4) == 3);
    CHECK(perm_depth(parse_permutation("[1,2,3,4,5]")) == 1);
    CHECK(perm_depth(parse_permutation("[3,2,1]")) == 3);
    CHECK_THROWS_AS(parse_permutation("[1,1]"), Error);
    CHECK_THROWS_AS(parse_permutation("1,2"), Error);
}

TEST_CASE("nesting pairs") {
    CHECK(nesting_pairs(parse_permutation("[2,1]")) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(nesting_pairs(parse_permutation("[1,2,3]")).empty());

    // the inclusion order of fig 4's permutation: covers 1<2<4, 1<3<5, 3<4,
    // 3<10, 6<7<10, 8<9<10 plus closures
    Permutation fig4 = parse_permutation("[4,2,5,10,3,1,7,6,9,8]");
    auto pairs = nesting_pairs(fig4);
    CHECK(testing::nesting_poset_height(pairs, 10) == perm_depth(fig4));
    std::set<std::pair<int, int>> set(pairs.begin(), pairs.end());
    for (auto pr : std::vector<std::pair<int, int>>{
             {1, 2}, {2, 4}, {1, 3}, {3, 5}, {3, 4}, {3, 10}, {6, 7}, {7, 10}, {8, 9}, {9, 10}})
        CHECK(set.count(pr));
    CHECK(!set.count({2, 3}));
    CHECK(!set.count({5, 10}));
}

TEST_CASE("perm depth equals nesting poset height") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_permutations(n, [&](const Permutation& pi) {
            REQUIRE(perm_depth(pi) == testing::nesting_poset_height(nesting_pairs(pi), n));
            return true;
        });
    }
}

TEST_CASE("mirsky coloring") {
    SortedColoring c = mirsky_sorted_coloring(parse_permutation("[2,1]"));
    CHECK(c.classes == std::vector<std::vector<int>>{{1}, {2}});
    SortedColoring ci = mirsky_sorted_coloring(parse_permutation("[1,2,3]"));
    CHECK(ci.classes == std::vector<std::vector<int>>{{1, 2, 3}});

    Permutation fig4 = parse_permutation("[4,2,5,10,3,1,7,6,9,8]");
    SortedColoring cf = mirsky_sorted_coloring(fig4);
    REQUIRE(cf.k() == 3);
    auto cls = cf.class_of(10);
    CHECK(cls[1] == 1);
    CHECK(cls[6] == 1);
    CHECK(cls[2] == 2);
    CHECK(cls[9] == 2);
    CHECK(cls[5] == 3);
    CHECK(cls[10] == 3);

    for (int n = 1; n <= 7; ++n) {
        enumerate_permutations(n, [&](const Permutation& pi) {
            SortedColoring col = mirsky_sorted_coloring(pi);
            REQUIRE(is_sorted_coloring(pi, col));
            REQUIRE(col.k() == perm_depth(pi));
            return true;
        });
    }
}

TEST_CASE("enumerate sorted colorings") {
    auto single = enumerate_sorted_colorings(parse_permutation("[2,1]"), 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].classes == std::vector<std::vector<int>>{{1}, {2}});

    CHECK(enumerate_sorted_colorings(parse_permutation("[1,2]"), 2).size() == 2);
    CHECK(enumerate_sorted_colorings(parse_permutation("[3,2,1]"), 2).empty());

    // self-consistency against a from-scratch validity filter
    for (int n = 1; n <= 5; ++n) {
        enumerate_permutations(n, [&](const Permutation& pi) {
            for (int k = 1; k <= 3 && k <= n; ++k) {
                auto got = enumerate_sorted_colorings(pi, k);
                for (const auto& c : got) REQUIRE(is_sorted_coloring(pi, c));
                std::uint64_t brute = 0;
                std::vector<int> cls(n + 1, 1);
                std::function<void(int)> rec = [&](int val) {
                    if (val > n) {
                        SortedColoring c;
                        c.classes.assign(k, {});
                        for (int x = 1; x <= n; ++x) c.classes[cls[x] - 1].push_back(x);
                        bool nonempty = true;
                        for (const auto& cl : c.classes)
                            if (cl.empty()) nonempty = false;
                        if (nonempty && is_sorted_coloring(pi, c)) ++brute;
                        return;
                    }
                    for (int cc = 1; cc <= k; ++cc) {
                        cls[val] = cc;
                        rec(val + 1);
                    }
                };
                rec(1);
                REQUIRE(got.size() == brute);
            }
            return true;
        });
    }
}

TEST_CASE("initial representation and verification") {
    Permutation p21 = parse_permutation("[2,1]");
    IntervalFamily f = initial_representation(p21);
    CHECK(f.iv == std::vector<std::pair<Rat, Rat>>{{Rat(-1), Rat(1)}, {Rat(-2), Rat(2)}});
    CHECK(!verify_perm_representation(p21, f).has_value());

    Permutation mid = parse_permutation("[1,3,4,5,2]");
    CHECK(!verify_perm_representation(mid, initial_representation(mid)).has_value());

    Permutation id3 = parse_permutation("[1,2,3]");
    IntervalFamily f3 = initial_representation(id3);
    for (int j = 1; j <= 3; ++j) {
        CHECK(f3.left(j - 1) == Rat(j - 4));
        CHECK(f3.right(j - 1) == Rat(j));
    }

    for (int n = 1; n <= 8; ++n) {
        enumerate_permutations(n, [&](const Permutation& pi) {
            REQUIRE(!verify_perm_representation(pi, initial_representation(pi)).has_value());
            return true;
        });
    }

    IntervalFamily bad;
    bad.iv = {{Rat(-2), Rat(1)}, {Rat(-1), Rat(2)}};
    CHECK(verify_perm_representation(p21, bad).has_value());

    // figure 2's representation of [5,2,3,1,4], doubled to integer coordinates
    Permutation f2 = parse_permutation("[5,2,3,1,4]");
    IntervalFamily fig2;
    fig2.iv = {{Rat(-3), Rat(1)}, {Rat(-5), Rat(3)}, {Rat(-4), Rat(4)}, {Rat(-1), Rat(6)},
               {Rat(-7), Rat(7)}};
    CHECK(!verify_perm_representation(f2, fig2).has_value());
}

TEST_CASE("nesting pairs match containments of a valid representation") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_permutations(n, [&](const Permutation& pi) {
            IntervalFamily f = initial_representation(pi);
            std::vector<std::pair<int, int>> contain;
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) {
                    if (x == y) continue;
                    if (f.left(y - 1) < f.left(x - 1) && f.right(x - 1) < f.right(y - 1))
                        contain.emplace_back(x, y);
                }
            std::sort(contain.begin(), contain.end());
            REQUIRE(contain == nesting_pairs(pi));
            return true;
        });
    }
}

TEST_CASE("distinct lengths") {
    auto lens = distinct_lengths(initial_representation(parse_permutation("[2,1]")));
    CHECK(lens == std::vector<Rat>{Rat(2), Rat(4)});
    IntervalFamily unit;
    unit.iv = {{Rat(0), Rat(1)}, {Rat(2), Rat(3)}};
    CHECK(distinct_lengths(unit).size() == 1);
}

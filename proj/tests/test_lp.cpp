#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intervalia/error.hpp"
#include "intervalia/kcount.hpp"
#include "intervalia/simplex.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace intervalia;

namespace {

LinearSystem sys2(std::vector<Row> rows) {
    LinearSystem s;
    s.vars = {"x", "y"};
    for (auto& r : rows) s.rows.push_back(std::move(r));
    return s;
}

} // namespace

TEST_CASE("trivial systems") {
    // x < y, y < x: infeasible
    LinearSystem bad = sys2({{{Rat(1), Rat(-1)}, Rel::Less, Rat(0)},
                             {{Rat(-1), Rat(1)}, Rel::Less, Rat(0)}});
    CHECK(!lp_feasible_strict(bad).feasible);

    // x < y: feasible with a strict witness
    LinearSystem good = sys2({{{Rat(1), Rat(-1)}, Rel::Less, Rat(0)}});
    FeasibilityResult r = lp_feasible_strict(good);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] < r.witness[1]);

    // boundary-only solution: x <= 0, x >= 0, x < 1 is feasible (x = 0)
    LinearSystem boundary = sys2({{{Rat(1), Rat(0)}, Rel::LessEq, Rat(0)},
                                  {{Rat(-1), Rat(0)}, Rel::LessEq, Rat(0)},
                                  {{Rat(1), Rat(0)}, Rel::Less, Rat(1)}});
    CHECK(lp_feasible_strict(boundary).feasible);

    // equality pinning: x = 3, y = x, y < 3 infeasible
    LinearSystem eq = sys2({{{Rat(1), Rat(0)}, Rel::Eq, Rat(3)},
                            {{Rat(1), Rat(-1)}, Rel::Eq, Rat(0)},
                            {{Rat(0), Rat(1)}, Rel::Less, Rat(3)}});
    CHECK(!lp_feasible_strict(eq).feasible);

    // strictness matters: x < 0 and x >= 0
    LinearSystem strict = sys2({{{Rat(1), Rat(0)}, Rel::Less, Rat(0)},
                                {{Rat(-1), Rat(0)}, Rel::LessEq, Rat(0)}});
    CHECK(!lp_feasible_strict(strict).feasible);

    LinearSystem malformed;
    malformed.vars = {"x"};
    malformed.rows.push_back(Row{{Rat(1), Rat(2)}, Rel::Less, Rat(0)});
    CHECK_THROWS_AS(lp_feasible_strict(malformed), Error);
}

TEST_CASE("agrees with Fourier-Motzkin on random tiny systems") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> nv(1, 4), nr(1, 8), coeff(-3, 3), rhs(-4, 4), rel(0, 2);
    int feasibleCount = 0;
    for (int trial = 0; trial < 500; ++trial) {
        LinearSystem sys;
        int v = nv(rng);
        for (int j = 0; j < v; ++j) sys.vars.push_back("x" + std::to_string(j));
        int rows = nr(rng);
        for (int i = 0; i < rows; ++i) {
            std::vector<Rat> a(v);
            for (int j = 0; j < v; ++j) a[j] = Rat(coeff(rng));
            Rel rr = rel(rng) == 0 ? Rel::Less : rel(rng) == 1 ? Rel::LessEq : Rel::Eq;
            sys.rows.push_back(Row{a, rr, Rat(rhs(rng))});
        }
        FeasibilityResult got = lp_feasible_strict(sys);
        bool want = testing::fm_feasible(sys);
        REQUIRE(got.feasible == want);
        if (got.feasible) {
            ++feasibleCount;
            REQUIRE(sys.satisfied_by(got.witness));
        }
    }
    CHECK(feasibleCount > 50); // both outcomes well represented
    CHECK(feasibleCount < 450);
}

TEST_CASE("row scaling never changes the verdict") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> coeff(-3, 3), rhs(-4, 4), rel(0, 2), num(1, 5), den(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        LinearSystem sys;
        sys.vars = {"x", "y", "z"};
        for (int i = 0; i < 6; ++i) {
            std::vector<Rat> a{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
            Rel rr = rel(rng) == 0 ? Rel::Less : rel(rng) == 1 ? Rel::LessEq : Rel::Eq;
            sys.rows.push_back(Row{a, rr, Rat(rhs(rng))});
        }
        LinearSystem scaled = sys;
        for (auto& row : scaled.rows) {
            Rat f(num(rng), den(rng));
            for (auto& c : row.a) c *= f;
            row.b *= f;
        }
        CHECK(lp_feasible_strict(sys).feasible == lp_feasible_strict(scaled).feasible);
    }
}

TEST_CASE("deterministic witness") {
    LinearSystem sys;
    sys.vars = {"x", "y", "z"};
    sys.rows.push_back(Row{{Rat(1), Rat(-1), Rat(0)}, Rel::Less, Rat(0)});
    sys.rows.push_back(Row{{Rat(0), Rat(1), Rat(-1)}, Rel::Less, Rat(0)});
    sys.rows.push_back(Row{{Rat(1), Rat(1), Rat(1)}, Rel::LessEq, Rat(10)});
    FeasibilityResult a = lp_feasible_strict(sys), b = lp_feasible_strict(sys);
    REQUIRE(a.feasible);
    CHECK(a.witness == b.witness);
}

TEST_CASE("the section-5 subpermutation system is infeasible") {
    // pi' = [2,5,10,1,6,9] on {1,2,5,6,9,10}, relabeled by rank to [2,3,6,1,4,5]
    // with the forced coloring T1 = {1,4}, T2 = {2,5}, T3 = {3,6}.
    Permutation pi = make_permutation({2, 3, 6, 1, 4, 5});
    SortedColoring col;
    col.classes = {{1, 4}, {2, 5}, {3, 6}};
    REQUIRE(is_sorted_coloring(pi, col));
    LinearSystem sys = coloring_system_permutation(pi, col);
    CHECK(!lp_feasible_strict(sys).feasible);

    // the same statement written with explicit per-element left endpoints:
    // vars l1..l6, r1..r6; order rows from the one-line notation, the three
    // equal-length-within-class rows, and l6' < r1'.
    LinearSystem lit;
    for (int i = 1; i <= 6; ++i) lit.vars.push_back("l" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) lit.vars.push_back("r" + std::to_string(i));
    auto L = [](int x) { return x - 1; };
    auto R = [](int x) { return 6 + x - 1; };
    int order[] = {2, 3, 6, 1, 4, 5};
    for (int i = 0; i + 1 < 6; ++i)
        lit.add_sparse({{L(order[i]), Rat(1)}, {L(order[i + 1]), Rat(-1)}}, Rel::Less, Rat(0));
    lit.add_sparse({{L(order[5]), Rat(1)}, {R(1), Rat(-1)}}, Rel::Less, Rat(0));
    for (int j = 1; j < 6; ++j)
        lit.add_sparse({{R(j), Rat(1)}, {R(j + 1), Rat(-1)}}, Rel::Less, Rat(0));
    // equal lengths inside each class
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}})
        lit.add_sparse({{R(a), Rat(1)}, {L(a), Rat(-1)}, {R(b), Rat(-1)}, {L(b), Rat(1)}}, Rel::Eq,
                       Rat(0));
    CHECK(!lp_feasible_strict(lit).feasible);
    // dropping the middle class ties makes it feasible (sanity check)
    LinearSystem relaxed = lit;
    relaxed.rows.pop_back();
    relaxed.rows.pop_back();
    relaxed.rows.pop_back();
    CHECK(lp_feasible_strict(relaxed).feasible);
}

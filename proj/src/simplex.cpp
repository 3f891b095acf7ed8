#include "intervalia/simplex.hpp"

#include "intervalia/error.hpp"

#include <algorithm>

namespace intervalia {

namespace {

// Dense exact tableau. rows[0..m-1] are constraints (last entry = rhs),
// rows[m] is the phase-2 objective, rows[m+1] the phase-1 objective while it
// exists. Basic columns have zero reduced cost in every objective row.
struct Tableau {
    std::vector<std::vector<Rat>> rows;
    std::vector<int> basis; // per constraint row
    int m = 0;              // constraint rows
    int cols = 0;           // columns excluding rhs

    Rat& rhs(int i) { return rows[i][cols]; }

    void pivot(int pr, int pc) {
        Rat inv = rows[pr][pc];
        for (int j = 0; j <= cols; ++j) rows[pr][j] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pr) continue;
            Rat f = rows[i][pc];
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j)
                if (rows[pr][j] != 0) rows[i][j] -= f * rows[pr][j];
        }
        basis[pr] = pc;
    }

    // Bland's rule; maximizes the objective in row `obj`. Returns false when
    // unbounded (cannot happen here: the margin is capped).
    bool optimize(int obj) {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < cols; ++j)
                if (rows[obj][j] > 0) { pc = j; break; }
            if (pc < 0) return true;
            int pr = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (rows[i][pc] <= 0) continue;
                Rat ratio = rhs(i) / rows[i][pc];
                if (pr < 0 || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    }
};

} // namespace

FeasibilityResult lp_feasible_strict(const LinearSystem& sys) {
    const int v = sys.num_vars();
    for (const Row& r : sys.rows)
        if (static_cast<int>(r.a.size()) != v) fail("MalformedSystem", "row width mismatch");

    // Structural columns: x_j = p_j - q_j (2v columns), then margin t.
    const int tcol = 2 * v;
    const int nstruct = 2 * v + 1;
    const int nrows = static_cast<int>(sys.rows.size()) + 1; // + cap row t <= 1

    // Build rows as (coeffs over structural vars, rel in {LessEq, Eq}, rhs).
    std::vector<std::vector<Rat>> A;
    std::vector<bool> is_eq;
    std::vector<Rat> B;
    A.reserve(nrows);
    for (const Row& r : sys.rows) {
        std::vector<Rat> a(nstruct, Rat(0));
        for (int j = 0; j < v; ++j) {
            if (r.a[j] == 0) continue;
            a[2 * j] = r.a[j];
            a[2 * j + 1] = -r.a[j];
        }
        if (r.rel == Rel::Less) a[tcol] = 1;
        A.push_back(std::move(a));
        is_eq.push_back(r.rel == Rel::Eq);
        B.push_back(r.b);
    }
    {
        std::vector<Rat> cap(nstruct, Rat(0));
        cap[tcol] = 1;
        A.push_back(std::move(cap));
        is_eq.push_back(false);
        B.push_back(Rat(1));
    }

    const int m = static_cast<int>(A.size());
    // columns: structural | slacks (one per inequality) | artificials (built below)
    int nslack = 0;
    for (bool e : is_eq)
        if (!e) ++nslack;

    Tableau tab;
    tab.m = m;
    std::vector<int> slack_col(m, -1);
    int col = nstruct;
    for (int i = 0; i < m; ++i)
        if (!is_eq[i]) slack_col[i] = col++;
    int first_art = col;

    // normalize rhs >= 0, decide artificials
    std::vector<int> art_col(m, -1);
    std::vector<int> sign(m, 1);
    for (int i = 0; i < m; ++i) {
        if (B[i] < 0) sign[i] = -1;
        bool slack_usable = slack_col[i] >= 0 && sign[i] == 1;
        if (!slack_usable) art_col[i] = col++;
    }
    tab.cols = col;
    tab.rows.assign(m + 2, std::vector<Rat>(col + 1, Rat(0)));
    tab.basis.assign(m, -1);

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nstruct; ++j) tab.rows[i][j] = sign[i] * A[i][j];
        if (slack_col[i] >= 0) tab.rows[i][slack_col[i]] = sign[i];
        if (art_col[i] >= 0) tab.rows[i][art_col[i]] = 1;
        tab.rows[i][col] = sign[i] * B[i];
        tab.basis[i] = (art_col[i] >= 0) ? art_col[i] : slack_col[i];
    }

    // phase-2 objective: maximize t
    tab.rows[m][tcol] = 1;
    // phase-1 objective: maximize -sum(artificials); price out basic artificials
    bool any_art = false;
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) {
            any_art = true;
            tab.rows[m + 1][art_col[i]] = -1;
        }
    if (any_art) {
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0)
                for (int j = 0; j <= col; ++j) tab.rows[m + 1][j] += tab.rows[i][j];
        if (!tab.optimize(m + 1)) fail("InternalError", "phase 1 unbounded");
        if (tab.rows[m + 1][col] != 0) return {}; // relaxation infeasible
        // drive remaining basic artificials out
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < first_art) continue;
            int pc = -1;
            for (int j = 0; j < first_art; ++j)
                if (tab.rows[i][j] != 0) { pc = j; break; }
            if (pc >= 0) tab.pivot(i, pc);
            // else: redundant row; its artificial stays basic at zero, harmless
        }
        // forbid artificials from re-entering
        for (auto& row : tab.rows)
            for (int j = first_art; j < col; ++j) row[j] = 0;
    }

    if (!tab.optimize(m)) fail("InternalError", "phase 2 unbounded despite cap");
    Rat tstar = -tab.rows[m][col]; // objective rows keep rhs = -value
    if (!(tstar > 0)) return {};

    std::vector<Rat> y(col, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] >= 0 && tab.basis[i] < col) y[tab.basis[i]] = tab.rows[i][col];
    FeasibilityResult res;
    res.feasible = true;
    res.witness.resize(v);
    for (int j = 0; j < v; ++j) res.witness[j] = y[2 * j] - y[2 * j + 1];
    if (!sys.satisfied_by(res.witness)) fail("InternalError", "simplex witness failed verification");
    return res;
}

} // namespace intervalia

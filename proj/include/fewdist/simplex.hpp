#pragma once

// Exact simplex over an ordered field (Rat or QuadExt).
//
// Two-phase tableau simplex with Bland's anti-cycling rule throughout:
// entering variable = lowest-index negative reduced cost, leaving variable =
// lowest-index among minimum-ratio rows. With exact arithmetic this
// terminates on every input. No floating point anywhere.

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fewdist {

enum class Rel { le, ge, eq };
enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpProblem {
    bool maximize = false;
    std::vector<T> objective;
    struct Row {
        std::vector<T> coeffs;
        Rel rel;
        T rhs;
    };
    std::vector<Row> rows;
    // variables are >= 0 by default; free_vars marks lower bound -inf
    std::vector<bool> free_vars;
};

template <class T>
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    T objective{};
    std::vector<T> x;        // structural variable values
    std::vector<int> basis;  // final basic column indices (internal numbering)
};

namespace detail {

template <class T>
class Tableau {
public:
    // rows of (coeffs | rhs) as equalities with rhs >= 0, plus basis bookkeeping
    std::vector<std::vector<T>> a;
    std::vector<T> b;
    std::vector<int> basis;
    int ncols = 0;

    void pivot(int r, int c) {
        const int m = static_cast<int>(a.size());
        T inv = T(1) / a[r][c];
        for (auto& v : a[r]) v = v * inv;
        b[r] = b[r] * inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            T f = a[i][c];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        basis[r] = c;
    }

    // Bland simplex on the current basis for cost vector `cost` (minimize).
    // Returns false if unbounded.
    bool run(const std::vector<T>& cost) {
        const int m = static_cast<int>(a.size());
        for (;;) {
            // reduced costs via the basic cost multipliers
            std::vector<const T*> cb(m);
            for (int i = 0; i < m; ++i) cb[i] = &cost[basis[i]];
            int enter = -1;
            for (int j = 0; j < ncols && enter < 0; ++j) {
                T rc = cost[j];
                for (int i = 0; i < m; ++i)
                    if (!a[i][j].is_zero()) rc -= *cb[i] * a[i][j];
                if (rc.sign() < 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            T best{};
            for (int i = 0; i < m; ++i) {
                if (a[i][enter].sign() <= 0) continue;
                T ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

template <class T>
LpSolution<T> lp_solve(const LpProblem<T>& p) {
    const int m = static_cast<int>(p.rows.size());
    const int n_struct = static_cast<int>(p.objective.size());
    for (const auto& r : p.rows)
        if (static_cast<int>(r.coeffs.size()) != n_struct)
            throw std::invalid_argument("lp_solve: ragged constraint matrix");

    // column layout: for each structural var one column (plus a negated twin
    // for free variables), then one slack/surplus per inequality.
    std::vector<int> neg_col(n_struct, -1);
    int ncols = n_struct;
    for (int j = 0; j < n_struct; ++j)
        if (j < static_cast<int>(p.free_vars.size()) && p.free_vars[j]) neg_col[j] = ncols++;
    int slack_base = ncols;
    for (const auto& r : p.rows)
        if (r.rel != Rel::eq) ++ncols;

    detail::Tableau<T> t;
    t.ncols = ncols;
    t.a.assign(m, std::vector<T>(ncols, T(0)));
    t.b.assign(m, T(0));
    t.basis.assign(m, -1);

    int si = slack_base;
    for (int i = 0; i < m; ++i) {
        const auto& row = p.rows[i];
        bool flip = row.rhs.sign() < 0;
        for (int j = 0; j < n_struct; ++j) {
            T v = flip ? -row.coeffs[j] : row.coeffs[j];
            t.a[i][j] = v;
            if (neg_col[j] >= 0) t.a[i][neg_col[j]] = -v;
        }
        t.b[i] = flip ? -row.rhs : row.rhs;
        if (row.rel != Rel::eq) {
            Rel rel = row.rel;
            if (flip) rel = (rel == Rel::le) ? Rel::ge : Rel::le;
            t.a[i][si] = (rel == Rel::le) ? T(1) : T(-1);
            if (rel == Rel::le) t.basis[i] = si;  // slack starts basic
            ++si;
        }
    }

    // phase 1: add artificials where no basic column is available
    std::vector<int> art;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= 0) continue;
        for (auto& row : t.a) row.push_back(T(0));
        t.a[i][t.ncols] = T(1);
        t.basis[i] = t.ncols;
        art.push_back(t.ncols);
        ++t.ncols;
    }
    if (!art.empty()) {
        std::vector<T> cost1(t.ncols, T(0));
        for (int j : art) cost1[j] = T(1);
        t.run(cost1);  // phase-1 objective is bounded below by 0
        // any artificial stuck at a positive level => infeasible
        for (int i = 0; i < m; ++i) {
            bool is_art = std::find(art.begin(), art.end(), t.basis[i]) != art.end();
            if (is_art && t.b[i].sign() != 0) {
                LpSolution<T> s;
                s.status = LpStatus::infeasible;
                return s;
            }
        }
        // drive remaining zero-level artificials out of the basis
        for (int i = 0; i < m; ++i) {
            if (std::find(art.begin(), art.end(), t.basis[i]) == art.end()) continue;
            int c = -1;
            for (int j = 0; j < art.front() && c < 0; ++j)
                if (!t.a[i][j].is_zero()) c = j;
            if (c >= 0) t.pivot(i, c);
            // else: redundant row, harmless to keep (its artificial stays at 0)
        }
        // freeze artificial columns at zero for phase 2
        for (int i = 0; i < m; ++i)
            for (int j : art)
                if (t.basis[i] != j) t.a[i][j] = T(0);
    }

    std::vector<T> cost2(t.ncols, T(0));
    for (int j = 0; j < n_struct; ++j) {
        cost2[j] = p.maximize ? -p.objective[j] : p.objective[j];
        if (neg_col[j] >= 0) cost2[neg_col[j]] = -cost2[j];
    }
    if (!t.run(cost2)) {
        LpSolution<T> s;
        s.status = LpStatus::unbounded;
        return s;
    }

    LpSolution<T> s;
    s.status = LpStatus::optimal;
    s.x.assign(n_struct, T(0));
    std::vector<T> full(t.ncols, T(0));
    for (int i = 0; i < m; ++i) full[t.basis[i]] = t.b[i];
    for (int j = 0; j < n_struct; ++j) {
        s.x[j] = full[j];
        if (neg_col[j] >= 0) s.x[j] -= full[neg_col[j]];
    }
    s.objective = T(0);
    for (int j = 0; j < n_struct; ++j) s.objective += p.objective[j] * s.x[j];
    s.basis = t.basis;
    return s;
}

}  // namespace fewdist

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterLimit };

struct Solution {
    Status status = Status::IterLimit;
    std::vector<double> x;       // variable values (original, free variables)
    double objective = 0.0;      // primal objective c'x
    double dual_objective = 0.0; // y'b; lower bound on the optimum when reduced costs are clean
    double min_reduced_cost = 0.0;
};

namespace detail {

// Two-phase tableau simplex for min c'x, Ax = b, x >= 0 (Bland's rule).
struct StandardForm {
    int m = 0, n = 0;
    std::vector<std::vector<double>> A;
    std::vector<double> b, c;

    Solution solve(int max_iters = 100000) const {
        const double eps = 1e-11;
        int N = n + m;  // + artificials
        std::vector<std::vector<double>> T(static_cast<std::size_t>(m),
                                           std::vector<double>(static_cast<std::size_t>(N + 1), 0.0));
        std::vector<int> basis(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            double s = b[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n; ++j)
                T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    s * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            T[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1.0;
            T[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)] = s * b[static_cast<std::size_t>(i)];
            basis[static_cast<std::size_t>(i)] = n + i;
        }

        auto pivot = [&](int pr, int pc) {
            auto& row = T[static_cast<std::size_t>(pr)];
            double pv = row[static_cast<std::size_t>(pc)];
            for (auto& v : row) v /= pv;
            for (int i = 0; i < m; ++i) {
                if (i == pr) continue;
                double f = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
                if (f == 0.0) continue;
                for (int j = 0; j <= N; ++j)
                    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        f * row[static_cast<std::size_t>(j)];
            }
            basis[static_cast<std::size_t>(pr)] = pc;
        };

        auto run = [&](const std::vector<double>& cost, int allowed_cols, int iters) -> bool {
            for (int it = 0; it < iters; ++it) {
                // reduced costs r_j = cost_j - cost_B' T_col(j)
                int enter = -1;
                for (int j = 0; j < allowed_cols; ++j) {
                    double r = cost[static_cast<std::size_t>(j)];
                    for (int i = 0; i < m; ++i)
                        r -= cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] *
                             T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (r < -1e-9) {
                        enter = j;
                        break;  // Bland: first improving index
                    }
                }
                if (enter < 0) return true;  // optimal
                int leave = -1;
                double best = std::numeric_limits<double>::infinity();
                for (int i = 0; i < m; ++i) {
                    double a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
                    if (a > eps) {
                        double ratio = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)] / a;
                        if (ratio < best - 1e-12 ||
                            (ratio < best + 1e-12 && (leave < 0 || basis[static_cast<std::size_t>(i)] <
                                                                       basis[static_cast<std::size_t>(leave)]))) {
                            best = ratio;
                            leave = i;
                        }
                    }
                }
                if (leave < 0) return false;  // unbounded
                pivot(leave, enter);
            }
            return true;  // iteration limit; caller inspects
        };

        // Phase 1
        std::vector<double> cost1(static_cast<std::size_t>(N), 0.0);
        for (int j = n; j < N; ++j) cost1[static_cast<std::size_t>(j)] = 1.0;
        run(cost1, N, max_iters);
        double art = 0.0;
        for (int i = 0; i < m; ++i)
            if (basis[static_cast<std::size_t>(i)] >= n)
                art += T[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)];
        Solution sol;
        if (art > 1e-7) {
            sol.status = Status::Infeasible;
            return sol;
        }
        // Drive basic artificials out where possible.
        for (int i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] < n) continue;
            for (int j = 0; j < n; ++j) {
                if (std::abs(T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > 1e-9) {
                    pivot(i, j);
                    break;
                }
            }
        }

        // Phase 2 (artificial columns may not enter)
        std::vector<double> cost2(static_cast<std::size_t>(N), 0.0);
        for (int j = 0; j < n; ++j) cost2[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
        bool done = run(cost2, n, max_iters);
        sol.status = done ? Status::Optimal : Status::Unbounded;

        sol.x.assign(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < m; ++i)
            if (basis[static_cast<std::size_t>(i)] < n)
                sol.x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(N)];
        sol.objective = 0.0;
        for (int j = 0; j < n; ++j) sol.objective += c[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];

        // Duals from the artificial block (holds B^{-1}); y = c_B' B^{-1}.
        std::vector<double> y(static_cast<std::size_t>(m), 0.0);
        for (int i = 0; i < m; ++i) {
            double cb = basis[static_cast<std::size_t>(i)] < n
                            ? c[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])]
                            : 0.0;
            if (cb == 0.0) continue;
            for (int k = 0; k < m; ++k)
                y[static_cast<std::size_t>(k)] += cb * T[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + k)];
        }
        // y is w.r.t. the sign-flipped rows; flip back for y'b on original data.
        sol.dual_objective = 0.0;
        for (int i = 0; i < m; ++i) {
            double s = b[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
            sol.dual_objective += y[static_cast<std::size_t>(i)] * s * b[static_cast<std::size_t>(i)];
        }
        double minrc = 0.0;
        for (int j = 0; j < n; ++j) {
            double r = c[static_cast<std::size_t>(j)];
            for (int i = 0; i < m; ++i)
                r -= (basis[static_cast<std::size_t>(i)] < n
                          ? c[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])]
                          : 0.0) *
                     T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            minrc = std::min(minrc, r);
        }
        sol.min_reduced_cost = minrc;
        return sol;
    }
};

}  // namespace detail

// Convenience builder: free variables, <= and == rows, min objective.
// Free variables are split into positive parts; <= rows get slacks.
class Problem {
public:
    explicit Problem(int nvars) : nv_(nvars), obj_(static_cast<std::size_t>(nvars), 0.0) {}

    void set_objective(std::vector<double> c) { obj_ = std::move(c); }

    void add_le(std::vector<double> a, double rhs) { rows_.push_back({std::move(a), rhs, false}); }
    void add_eq(std::vector<double> a, double rhs) { rows_.push_back({std::move(a), rhs, true}); }

    Solution solve() const {
        const int m = static_cast<int>(rows_.size());
        int nslack = 0;
        for (const auto& r : rows_)
            if (!r.eq) ++nslack;
        detail::StandardForm sf;
        sf.m = m;
        sf.n = 2 * nv_ + nslack;
        sf.A.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(sf.n), 0.0));
        sf.b.assign(static_cast<std::size_t>(m), 0.0);
        sf.c.assign(static_cast<std::size_t>(sf.n), 0.0);
        for (int j = 0; j < nv_; ++j) {
            sf.c[static_cast<std::size_t>(2 * j)] = obj_[static_cast<std::size_t>(j)];
            sf.c[static_cast<std::size_t>(2 * j + 1)] = -obj_[static_cast<std::size_t>(j)];
        }
        int slack = 0;
        for (int i = 0; i < m; ++i) {
            const auto& r = rows_[static_cast<std::size_t>(i)];
            for (int j = 0; j < nv_; ++j) {
                double a = j < static_cast<int>(r.a.size()) ? r.a[static_cast<std::size_t>(j)] : 0.0;
                sf.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * j)] = a;
                sf.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * j + 1)] = -a;
            }
            if (!r.eq) {
                sf.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * nv_ + slack)] = 1.0;
                ++slack;
            }
            sf.b[static_cast<std::size_t>(i)] = r.rhs;
        }
        Solution s = sf.solve();
        if (s.status == Status::Optimal || s.status == Status::IterLimit) {
            std::vector<double> v(static_cast<std::size_t>(nv_), 0.0);
            for (int j = 0; j < nv_; ++j)
                v[static_cast<std::size_t>(j)] =
                    s.x[static_cast<std::size_t>(2 * j)] - s.x[static_cast<std::size_t>(2 * j + 1)];
            s.x = std::move(v);
        }
        return s;
    }

private:
    struct Row {
        std::vector<double> a;
        double rhs;
        bool eq;
    };
    int nv_;
    std::vector<double> obj_;
    std::vector<Row> rows_;
};

}  // namespace numrad::lp

#include "snum/simplex.hpp"

#include <cmath>
#include <vector>

#include "snum/errors.hpp"

namespace snum {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

struct Tableau {
    Eigen::MatrixXd T;        // rows x (ncols+1), last column is the rhs
    std::vector<int> basis;   // basic variable per row
    int rows;
    int cols;                 // structural + artificial columns

    void pivot(int r, int j) {
        T.row(r) /= T(r, j);
        for (int i = 0; i < rows; ++i) {
            if (i != r && std::abs(T(i, j)) > 0.0) T.row(i) -= T(i, j) * T.row(r);
        }
        basis[r] = j;
    }
};

// One simplex phase with Bland's rule. `cost` has one entry per column.
// `allowed` masks columns that may enter the basis.
void run_phase(Tableau& tab, const Eigen::VectorXd& cost, const std::vector<bool>& allowed, int iter_cap) {
    for (int iter = 0; iter < iter_cap; ++iter) {
        // reduced costs r_j = c_j - c_B' T_col(j)
        int enter = -1;
        for (int j = 0; j < tab.cols; ++j) {
            if (!allowed[j]) continue;
            double r = cost[j];
            for (int i = 0; i < tab.rows; ++i) r -= cost[tab.basis[i]] * tab.T(i, j);
            if (r < -kCostTol) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter < 0) return;  // optimal

        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < tab.rows; ++i) {
            double a = tab.T(i, enter);
            if (a > kPivotTol) {
                double ratio = tab.T(i, tab.cols) / a;
                if (leave < 0 || ratio < best_ratio - kPivotTol ||
                    (ratio < best_ratio + kPivotTol && tab.basis[i] < tab.basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) throw NumericalFailure("LP unbounded");
        tab.pivot(leave, enter);
    }
    throw NumericalFailure("LP iteration cap exceeded (cycling guard)");
}

}  // namespace

LpSolution solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    if (b.size() != m || c.size() != n) throw InputError("LP shape mismatch");

    // Normalize to b >= 0, remembering row signs for the dual.
    Eigen::VectorXd row_sign = Eigen::VectorXd::Ones(m);
    Tableau tab;
    tab.rows = m;
    tab.cols = n + m;  // structural + artificial
    tab.T.setZero(m, tab.cols + 1);
    for (int i = 0; i < m; ++i) {
        double s = (b[i] < 0.0) ? -1.0 : 1.0;
        row_sign[i] = s;
        tab.T.block(i, 0, 1, n) = s * A.row(i);
        tab.T(i, n + i) = 1.0;
        tab.T(i, tab.cols) = s * b[i];
    }
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) tab.basis[i] = n + i;

    const int iter_cap = 200 * (m + n) + 1000;

    // Phase 1: minimize the artificial sum.
    Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(tab.cols);
    cost1.tail(m).setOnes();
    std::vector<bool> allowed(tab.cols, true);
    run_phase(tab, cost1, allowed, iter_cap);

    double infeas = 0.0;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) infeas += tab.T(i, tab.cols);
    }
    if (infeas > 1e-8) throw NumericalFailure("LP infeasible (phase 1 residual)");

    // Pivot any artificial still in the basis out on a structural column;
    // rows with no candidate are redundant and stay put at value zero.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (std::abs(tab.T(i, j)) > 1e-9) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2: artificial columns stay in the tableau (they carry B^{-1}
    // for the dual readout) but may not re-enter.
    Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(tab.cols);
    cost2.head(n) = c;
    for (int j = n; j < tab.cols; ++j) allowed[j] = false;
    run_phase(tab, cost2, allowed, iter_cap);

    LpSolution sol;
    sol.x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.T(i, tab.cols);
    }
    sol.value = c.dot(sol.x);
    // y' = c_B' B^{-1}; the artificial block holds B^{-1} of the sign-fixed
    // system, so undo the row flips afterwards.
    sol.dual = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        double cb = cost2[tab.basis[i]];
        if (cb != 0.0) sol.dual += cb * tab.T.row(i).segment(n, m).transpose();
    }
    sol.dual.array() *= row_sign.array();
    return sol;
}

}  // namespace snum

#pragma once

#include <Eigen/Dense>

namespace snum {

// Small dense two-phase simplex for min c'x s.t. Ax = b, x >= 0.
// Bland's rule throughout, so it cannot cycle; an iteration cap guards
// against numerical stalls. Internal plumbing for the norm-distance LPs,
// not a general-purpose solver.
struct LpSolution {
    Eigen::VectorXd x;     // primal optimum
    Eigen::VectorXd dual;  // row multipliers y with A'y <= c, b'y = value
    double value = 0.0;
};

LpSolution solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

}  // namespace snum

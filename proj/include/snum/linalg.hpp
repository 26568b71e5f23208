#pragma once

#include <Eigen/Dense>
#include <complex>

#include "snum/spaces.hpp"

namespace snum {

struct SvdResult {
    Mat U;      // left factor, orthonormal columns
    Vec sigma;  // non-increasing, nonnegative
    Mat V;      // right factor, orthonormal columns; M = U diag(sigma) V^T
};

SvdResult svd(const Mat& M);

// Eigenvalues sorted by non-increasing modulus (ties: by real part, then
// imaginary part, descending).
Eigen::VectorXcd eigenvalues(const Mat& M);

// Triangular matrices get the exact diagonal product; everything else goes
// through partial-pivot LU.
double determinant(const Mat& M);

int numerical_rank(const Mat& M);

// Orthonormal basis of the column span (SVD-based, rank-revealing).
Mat orthonormal_basis(const Mat& A);

// Orthonormal basis of {x : Fx = 0}; F rows are functionals on R^{F.cols()}.
Mat null_space_basis(const Mat& F);

struct SubspaceDistance {
    double value = 0.0;  // inf over span(N) of ||y - z||_X
    Vec dual;            // functional vanishing on N that norms the residual
    Vec nearest;         // the minimizing point z in span(N)
    bool exact = true;   // false on the general-p descent path
    double gap = 0.0;    // primal-dual agreement, <= 1e-9 on exact paths
};

// Least squares for p=2, a dense LP with a dual certificate for p in {1,inf},
// projected descent (flagged inexact) otherwise.
SubspaceDistance distance_to_subspace(const Vec& y, const Mat& N, const SequenceSpace& space);

}  // namespace snum

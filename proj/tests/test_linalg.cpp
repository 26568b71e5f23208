#include "doctest.h"

#include <complex>

#include "snum/errors.hpp"
#include "snum/generators.hpp"
#include "snum/linalg.hpp"
#include "snum/rng.hpp"
#include "snum/simplex.hpp"

using namespace snum;

namespace {

Mat random_mat(int rows, int cols, std::uint64_t seed) {
    GaussianStream g(seed);
    Mat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = g.next();
    return M;
}

// test-side oracle: characteristic polynomial residual |det(M - lambda I)|
double charpoly_residual(const Mat& M, std::complex<double> lambda) {
    Eigen::MatrixXcd A = M.cast<std::complex<double>>();
    for (int i = 0; i < A.rows(); ++i) A(i, i) -= lambda;
    return std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(A).determinant());
}

}  // namespace

TEST_CASE("svd on diagonal, circulant-shift and zero matrices") {
    {
        Mat D = Mat::Zero(3, 3);
        D(0, 0) = 3;
        D(1, 1) = 2;
        D(2, 2) = 1;
        Vec s = svd(D).sigma;
        CHECK(s[0] == doctest::Approx(3));
        CHECK(s[1] == doctest::Approx(2));
        CHECK(s[2] == doctest::Approx(1));
    }
    {
        Vec s = svd(make_t_matrix(4, 0.5).matrix).sigma;
        CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s[3] == doctest::Approx(0.5).epsilon(1e-12));
    }
    {
        Vec s = svd(Mat::Zero(3, 3)).sigma;
        CHECK(s.maxCoeff() == 0.0);
    }
}

TEST_CASE("svd reconstruction and orthogonality on random input") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Mat M = random_mat(5, 7, seed);
        SvdResult r = svd(M);
        double scale = 1.0 + M.norm();
        CHECK((r.U * r.sigma.asDiagonal() * r.V.transpose() - M).norm() <= 1e-10 * scale);
        CHECK((r.U.transpose() * r.U - Mat::Identity(5, 5)).norm() <= 1e-10);
        CHECK((r.V.transpose() * r.V - Mat::Identity(5, 5)).norm() <= 1e-10);
        for (int i = 0; i + 1 < r.sigma.size(); ++i) CHECK(r.sigma[i] >= r.sigma[i + 1]);
    }
}

TEST_CASE("singular values are invariant under permutations") {
    Mat M = random_mat(5, 5, 17);
    Mat P = Mat::Zero(5, 5);
    int perm[5] = {3, 0, 4, 1, 2};
    for (int i = 0; i < 5; ++i) P(i, perm[i]) = 1.0;
    Vec s1 = svd(M).sigma, s2 = svd(Mat(P * M)).sigma, s3 = svd(Mat(M * P)).sigma;
    CHECK((s1 - s2).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((s1 - s3).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("eigenvalues: identity, shift-with-corner, diagonal") {
    {
        Eigen::VectorXcd ev = eigenvalues(Mat::Identity(3, 3));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(ev[i] - 1.0) <= 1e-12);
    }
    {
        Eigen::VectorXcd ev = eigenvalues(make_t_matrix(4, 0.5).matrix);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i]) == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-7));
    }
    {
        Mat D = Mat::Zero(3, 3);
        D(0, 0) = 3;
        D(1, 1) = 2;
        D(2, 2) = 1;
        Eigen::VectorXcd ev = eigenvalues(D);
        CHECK(ev[0].real() == doctest::Approx(3));
        CHECK(ev[1].real() == doctest::Approx(2));
        CHECK(ev[2].real() == doctest::Approx(1));
    }
}

TEST_CASE("eigenvalues satisfy the characteristic polynomial and multiply to det") {
    for (std::uint64_t seed : {5ULL, 6ULL}) {
        Mat M = random_mat(5, 5, seed);
        Eigen::VectorXcd ev = eigenvalues(M);
        double scale = 1.0 + std::pow(M.norm(), 5);
        std::complex<double> prod = 1.0;
        for (int i = 0; i < 5; ++i) {
            CHECK(charpoly_residual(M, ev[i]) <= 1e-7 * scale);
            prod *= ev[i];
        }
        double det = determinant(M);
        CHECK(std::abs(prod - det) <= 1e-7 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("determinant on triangular and general matrices") {
    CHECK(determinant(Mat::Identity(4, 4)) == 1.0);
    Mat T(2, 2);
    T << 3.5, 2.0, 0.0, -1.25;
    CHECK(determinant(T) == 3.5 * -1.25);  // exact: diagonal product path
    Mat A = random_mat(5, 5, 9), B = random_mat(5, 5, 10);
    CHECK(determinant(Mat(A * B)) ==
          doctest::Approx(determinant(A) * determinant(B)).epsilon(1e-9));
}

TEST_CASE("|det| equals the singular value product") {
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
        Mat M = random_mat(4, 4, seed);
        Vec s = svd(M).sigma;
        double prod = s.prod();
        CHECK(std::abs(determinant(M)) == doctest::Approx(prod).epsilon(1e-8));
    }
}

TEST_CASE("null space bases") {
    {
        Mat F(1, 3);
        F << 1, 0, 0;
        Mat B = null_space_basis(F);
        CHECK(B.cols() == 2);
        CHECK((F * B).norm() <= 1e-10);
        CHECK((B.transpose() * B - Mat::Identity(2, 2)).norm() <= 1e-10);
    }
    CHECK(null_space_basis(Mat(0, 4)) == Mat::Identity(4, 4));
    {
        Mat F(2, 2);
        F << 1, 0, 0, 1;
        CHECK(null_space_basis(F).cols() == 0);
    }
}

TEST_CASE("simplex solves a tiny LP with matching dual") {
    Mat A(1, 2);
    A << 1, 1;
    Vec b(1), c(2);
    b << 1;
    c << -1, -2;
    LpSolution sol = solve_lp(A, b, c);
    CHECK(sol.value == doctest::Approx(-2.0));
    CHECK(sol.x[1] == doctest::Approx(1.0));
    CHECK(sol.dual[0] == doctest::Approx(-2.0));
}

TEST_CASE("distance to subspace: closed-form cases") {
    Mat N(2, 1);
    N << 1, 0;
    Vec y(2);
    y << 1, 1;
    CHECK(distance_to_subspace(y, N, {2, Exponent(2.0)}).value == doctest::Approx(1.0));
    CHECK(distance_to_subspace(y, N, {2, Exponent::inf()}).value == doctest::Approx(1.0));
    CHECK(distance_to_subspace(y, N, {2, Exponent(1.0)}).value == doctest::Approx(1.0));

    Mat Nm(2, 1);
    Nm << 1, 1;
    for (double pv : {1.0, 2.0, 0.0}) {
        SequenceSpace space{2, pv == 0.0 ? Exponent::inf() : Exponent(pv)};
        CHECK(distance_to_subspace(y, Nm, space).value <= 1e-12);
    }
}

TEST_CASE("distance duals certify optimality") {
    GaussianStream g(31);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 3 + trial % 5;
        int k = 1 + trial % 3;
        Mat N = random_mat(m, k, 100 + static_cast<std::uint64_t>(trial));
        Vec y(m);
        for (int i = 0; i < m; ++i) y[i] = g.next();
        for (double pv : {1.0, 0.0, 2.0}) {
            SequenceSpace space{m, pv == 0.0 ? Exponent::inf() : Exponent(pv)};
            SubspaceDistance d = distance_to_subspace(y, N, space);
            double scale = 1.0 + y.cwiseAbs().maxCoeff();
            CHECK(d.exact);
            CHECK(d.gap <= 1e-9 * scale);
            CHECK((N.transpose() * d.dual).cwiseAbs().maxCoeff() <= 1e-9 * scale);
            if (d.value > 1e-12) {
                CHECK(vector_norm(space.dual(), d.dual) <= 1.0 + 1e-12);
                CHECK(y.dot(d.dual) == doctest::Approx(d.value).epsilon(1e-9));
            }
            // primal feasibility: the nearest point lies in span(N)
            Mat Q = orthonormal_basis(N);
            CHECK((d.nearest - Q * (Q.transpose() * d.nearest)).norm() <= 1e-9 * scale);
        }
    }
}

TEST_CASE("distance rejects shape mismatches") {
    Mat N(3, 1);
    N << 1, 0, 0;
    Vec y(2);
    y << 1, 1;
    CHECK_THROWS_AS(distance_to_subspace(y, N, {2, Exponent(2.0)}), InputError);
}

#include "snum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "snum/errors.hpp"
#include "snum/simplex.hpp"

namespace snum {

namespace {

bool all_finite(const Mat& M) { return M.allFinite(); }

bool is_upper_triangular(const Mat& M) {
    for (int i = 1; i < M.rows(); ++i)
        for (int j = 0; j < std::min<int>(i, static_cast<int>(M.cols())); ++j)
            if (M(i, j) != 0.0) return false;
    return true;
}

bool is_lower_triangular(const Mat& M) {
    for (int i = 0; i < M.rows(); ++i)
        for (int j = i + 1; j < M.cols(); ++j)
            if (M(i, j) != 0.0) return false;
    return true;
}

double rank_threshold(const Mat& M, double sigma_max) {
    double dim = static_cast<double>(std::max(M.rows(), M.cols()));
    return std::max(dim * std::numeric_limits<double>::epsilon() * sigma_max, 1e-13);
}

}  // namespace

SvdResult svd(const Mat& M) {
    if (!all_finite(M)) throw InputError("matrix has non-finite entries");
    Eigen::JacobiSVD<Mat> dec(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Eigen::VectorXcd eigenvalues(const Mat& M) {
    if (M.rows() != M.cols()) throw InputError("eigenvalues need a square matrix");
    if (!all_finite(M)) throw InputError("matrix has non-finite entries");
    Eigen::EigenSolver<Mat> dec(M, /*computeEigenvectors=*/false);
    if (dec.info() != Eigen::Success) throw NumericalFailure("eigenvalue iteration did not converge");
    Eigen::VectorXcd ev = dec.eigenvalues();
    std::vector<std::complex<double>> vals(ev.data(), ev.data() + ev.size());
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    for (int i = 0; i < ev.size(); ++i) ev[i] = vals[static_cast<std::size_t>(i)];
    return ev;
}

double determinant(const Mat& M) {
    if (M.rows() != M.cols()) throw InputError("determinant needs a square matrix");
    if (M.rows() == 0) return 1.0;
    if (is_upper_triangular(M) || is_lower_triangular(M)) {
        double d = 1.0;
        for (int i = 0; i < M.rows(); ++i) d *= M(i, i);
        return d;
    }
    return Eigen::PartialPivLU<Mat>(M).determinant();
}

int numerical_rank(const Mat& M) {
    if (M.size() == 0) return 0;
    Vec s = svd(M).sigma;
    if (s.size() == 0) return 0;
    double thr = rank_threshold(M, s[0]);
    int r = 0;
    while (r < s.size() && s[r] > thr) ++r;
    return r;
}

Mat orthonormal_basis(const Mat& A) {
    if (A.cols() == 0 || A.size() == 0) return Mat(A.rows(), 0);
    SvdResult dec = svd(A);
    double thr = rank_threshold(A, dec.sigma.size() ? dec.sigma[0] : 0.0);
    int r = 0;
    while (r < dec.sigma.size() && dec.sigma[r] > thr) ++r;
    return dec.U.leftCols(r);
}

Mat null_space_basis(const Mat& F) {
    const int ambient = static_cast<int>(F.cols());
    if (F.rows() == 0) return Mat::Identity(ambient, ambient);
    Eigen::JacobiSVD<Mat> dec(F, Eigen::ComputeFullV);
    Vec s = dec.singularValues();
    double thr = rank_threshold(F, s.size() ? s[0] : 0.0);
    int r = 0;
    while (r < s.size() && s[r] > thr) ++r;
    return dec.matrixV().rightCols(ambient - r);
}

namespace {

// Clean an LP dual certificate: make it vanish on span(Q) to machine
// precision and pull it inside the dual unit ball, so downstream chain
// invariants hold at 1e-12 rather than at LP tolerance.
void polish_dual(Vec& u, const Mat& Q, const Exponent& dual_p) {
    if (u.size() == 0) return;
    u -= Q * (Q.transpose() * u);
    double n = exponent_norm(dual_p, u);
    if (n > 1.0) u /= n;
}

// min_c ||y - Qc||_inf as an LP; Q has orthonormal columns.
SubspaceDistance distance_linf(const Vec& y, const Mat& Q) {
    const int m = static_cast<int>(y.size());
    const int k = static_cast<int>(Q.cols());
    // variables: c+ (k), c- (k), t, s1 (m), s2 (m)
    const int n = 2 * k + 1 + 2 * m;
    Mat A = Mat::Zero(2 * m, n);
    Vec b(2 * m), c = Vec::Zero(n);
    A.block(0, 0, m, k) = Q;
    A.block(0, k, m, k) = -Q;
    A.block(m, 0, m, k) = Q;
    A.block(m, k, m, k) = -Q;
    for (int i = 0; i < m; ++i) {
        A(i, 2 * k) = 1.0;
        A(m + i, 2 * k) = -1.0;
        A(i, 2 * k + 1 + i) = -1.0;
        A(m + i, 2 * k + 1 + m + i) = 1.0;
    }
    b.head(m) = y;
    b.tail(m) = y;
    c[2 * k] = 1.0;

    LpSolution lp = solve_lp(A, b, c);
    SubspaceDistance out;
    Vec coeff = lp.x.head(k) - lp.x.segment(k, k);
    out.nearest = Q * coeff;
    out.value = (y - out.nearest).lpNorm<Eigen::Infinity>();
    out.dual = lp.dual.head(m) + lp.dual.tail(m);
    polish_dual(out.dual, Q, Exponent(1.0));
    out.gap = std::abs(out.value - y.dot(out.dual));
    return out;
}

// min_c ||y - Qc||_1 as an LP.
SubspaceDistance distance_l1(const Vec& y, const Mat& Q) {
    const int m = static_cast<int>(y.size());
    const int k = static_cast<int>(Q.cols());
    // variables: c+ (k), c- (k), e+ (m), e- (m)
    const int n = 2 * k + 2 * m;
    Mat A = Mat::Zero(m, n);
    Vec c = Vec::Zero(n);
    A.block(0, 0, m, k) = Q;
    A.block(0, k, m, k) = -Q;
    A.block(0, 2 * k, m, m) = Mat::Identity(m, m);
    A.block(0, 2 * k + m, m, m) = -Mat::Identity(m, m);
    c.tail(2 * m).setOnes();

    LpSolution lp = solve_lp(A, y, c);
    SubspaceDistance out;
    Vec coeff = lp.x.head(k) - lp.x.segment(k, k);
    out.nearest = Q * coeff;
    out.value = (y - out.nearest).lpNorm<1>();
    out.dual = lp.dual;
    polish_dual(out.dual, Q, Exponent::inf());
    out.gap = std::abs(out.value - y.dot(out.dual));
    return out;
}

// General finite p: convex descent from the least-squares start. Reported
// as inexact; the dual is the norming functional of the residual.
SubspaceDistance distance_general(const Vec& y, const Mat& Q, const SequenceSpace& space) {
    const int k = static_cast<int>(Q.cols());
    Vec coeff = Q.transpose() * y;  // least-squares start
    auto fval = [&](const Vec& cc) { return exponent_norm(space.p, y - Q * cc); };
    double f = fval(coeff);
    double step = 1.0;
    for (int it = 0; it < 400; ++it) {
        Vec r = y - Q * coeff;
        double nr = exponent_norm(space.p, r);
        if (nr < 1e-14) break;
        Vec g = norming_functional(space, r);  // subgradient of the norm at r
        Vec grad = -Q.transpose() * g;
        double gn = grad.norm();
        if (gn < 1e-13) break;
        bool improved = false;
        while (step > 1e-14) {
            Vec trial = coeff - step * grad;
            double ft = fval(trial);
            if (ft < f - 1e-15) {
                coeff = trial;
                f = ft;
                improved = true;
                step *= 1.5;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    SubspaceDistance out;
    out.nearest = Q * coeff;
    out.value = f;
    Vec r = y - out.nearest;
    out.exact = false;
    if (exponent_norm(space.p, r) > 1e-14) {
        out.dual = norming_functional(space, r);
        out.gap = (Q.transpose() * out.dual).lpNorm<Eigen::Infinity>();
    } else {
        out.dual = Vec::Zero(y.size());
        out.gap = 0.0;
    }
    (void)k;
    return out;
}

}  // namespace

SubspaceDistance distance_to_subspace(const Vec& y, const Mat& N, const SequenceSpace& space) {
    if (y.size() != space.dim) throw InputError("vector length does not match space dimension");
    if (N.size() > 0 && N.rows() != space.dim) throw InputError("subspace basis rows must match space dimension");

    Mat Q = (N.cols() > 0) ? orthonormal_basis(N) : Mat(space.dim, 0);

    if (Q.cols() == 0) {
        SubspaceDistance out;
        out.value = vector_norm(space, y);
        out.nearest = Vec::Zero(space.dim);
        out.dual = (out.value > 0.0) ? norming_functional(space, y) : Vec::Zero(space.dim);
        return out;
    }

    if (space.p.is_two()) {
        SubspaceDistance out;
        out.nearest = Q * (Q.transpose() * y);
        Vec r = y - out.nearest;
        out.value = r.norm();
        out.dual = (out.value > 1e-300) ? Vec(r / out.value) : Vec(Vec::Zero(space.dim));
        return out;
    }
    if (space.p.is_inf()) return distance_linf(y, Q);
    if (space.p.is_one()) return distance_l1(y, Q);
    return distance_general(y, Q, space);
}

}  // namespace snum

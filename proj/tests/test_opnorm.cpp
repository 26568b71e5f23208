#include "doctest.h"

#include "snum/errors.hpp"
#include "snum/generators.hpp"
#include "snum/linalg.hpp"
#include "snum/opnorm.hpp"
#include "snum/rng.hpp"

using namespace snum;

namespace {

OperatorInstance random_op(int rows, int cols, std::uint64_t seed, Exponent dp, Exponent cp) {
    return make_gaussian(rows, cols, seed, dp, cp);
}

// independent oracle: max of ||Sx||_Y over the domain ball's extreme points
double enumeration_oracle(const OperatorInstance& S) {
    double best = 0.0;
    for (const Vec& x : ball_extreme_points(S.domain)) best = std::max(best, apply_norm(S, x));
    return best;
}

}  // namespace

TEST_CASE("operator norm exact paths") {
    CHECK(operator_norm(make_identity_embedding(3, Exponent(1.0), Exponent::inf())).value.lower ==
          doctest::Approx(1.0));
    CHECK(operator_norm(make_diagonal({3, 2, 1}, Exponent(2.0), Exponent(2.0))).value.lower ==
          doctest::Approx(3.0));
}

TEST_CASE("operator norm on the sign-enumeration path matches the oracle") {
    Mat M(2, 2);
    M << 1, 1, 1, -1;
    OperatorInstance S{M, {2, Exponent::inf()}, {2, Exponent(1.0)}};
    double oracle = enumeration_oracle(S);
    CHECK(oracle == doctest::Approx(2.0));  // frozen from the oracle
    NormResult r = operator_norm(S);
    CHECK(r.value.status() == Status::exact);
    CHECK(r.value.lower == doctest::Approx(oracle));
    CHECK(apply_norm(S, r.maximizer) == doctest::Approx(oracle));
}

TEST_CASE("operator norm maximizers are feasible and attaining") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto pick = [&](int i) {
            return i == 0 ? Exponent(1.0) : (i == 1 ? Exponent(2.0) : Exponent::inf());
        };
        OperatorInstance S = random_op(4, 5, 40 + seed, pick(seed % 3), pick((seed / 2) % 3));
        NormResult r = operator_norm(S);
        CHECK(vector_norm(S.domain, r.maximizer) <= 1.0 + 1e-12);
        CHECK(apply_norm(S, r.maximizer) == doctest::Approx(r.value.lower).epsilon(1e-12));
        if (r.value.has_certified_upper()) CHECK(r.value.lower <= *r.value.upper + 1e-12);
    }
}

TEST_CASE("interval path for general exponents stays consistent") {
    OperatorInstance S = random_op(4, 4, 77, Exponent(3.0), Exponent(1.5));
    NormResult r = operator_norm(S);
    CHECK(r.value.lower_certified);
    CHECK(r.value.has_certified_upper());
    CHECK(r.value.lower <= *r.value.upper + 1e-12);
    CHECK(r.value.lower > 0.0);
}

TEST_CASE("restricted norm exact paths") {
    {
        OperatorInstance S = make_diagonal({1, 2}, Exponent(2.0), Exponent::inf());
        Mat M(2, 1);
        M << 1, 0;
        CHECK(restricted_norm(S, M).value.lower == doctest::Approx(1.0));
    }
    {
        OperatorInstance S = random_op(3, 3, 5, Exponent(1.0), Exponent::inf());
        Mat full = Mat::Identity(3, 3);
        CHECK(restricted_norm(S, full).value.lower ==
              doctest::Approx(operator_norm(S).value.lower));
    }
    {
        OperatorInstance S = random_op(4, 4, 21, Exponent(2.0), Exponent(2.0));
        SvdResult dec = svd(S.matrix);
        Mat M = dec.V.leftCols(2);
        CHECK(restricted_norm(S, M).value.lower == doctest::Approx(dec.sigma[0]).epsilon(1e-12));
    }
}

TEST_CASE("restricted norm l1-vertex path dominates dense sampling") {
    GaussianStream g(3);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        OperatorInstance S = random_op(4, 4, 300 + seed, Exponent(1.0), Exponent::inf());
        Mat M(4, 2);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) M(i, j) = g.next();
        NormResult r = restricted_norm(S, M);
        CHECK(r.value.status() == Status::exact);
        CHECK(vector_norm(S.domain, r.maximizer) <= 1.0 + 1e-12);
        CHECK(apply_norm(S, r.maximizer) == doctest::Approx(r.value.lower).epsilon(1e-12));
        Mat Q = orthonormal_basis(M);
        double sampled = 0.0;
        for (int s = 0; s < 5000; ++s) {
            Vec c(2);
            c << g.next(), g.next();
            Vec x = Q * c;
            double n = vector_norm(S.domain, x);
            if (n > 0.0) sampled = std::max(sampled, apply_norm(S, x / n));
        }
        CHECK(r.value.lower >= sampled - 1e-9);
    }
}

TEST_CASE("restricted norm rejects degenerate bases") {
    OperatorInstance S = random_op(3, 3, 5, Exponent(2.0), Exponent(2.0));
    Mat M(3, 2);
    M << 1, 2, 1, 2, 1, 2;  // rank 1
    CHECK_THROWS_AS(restricted_norm(S, M), InputError);
}

TEST_CASE("quotient norm closed cases") {
    {
        OperatorInstance S = make_identity_embedding(2, Exponent(1.0), Exponent(2.0));
        Mat N(2, 1);
        N << 1, 0;
        CHECK(quotient_norm(S, N).value.lower == doctest::Approx(1.0));
    }
    {
        OperatorInstance S = random_op(3, 3, 8, Exponent(1.0), Exponent(2.0));
        CHECK(quotient_norm(S, Mat::Identity(3, 3)).value.lower == doctest::Approx(0.0));
        CHECK(quotient_norm(S, Mat(3, 0)).value.lower ==
              doctest::Approx(operator_norm(S).value.lower));
    }
}

TEST_CASE("restriction and quotient never exceed the operator norm") {
    GaussianStream g(17);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto pick = [&](int i) {
            return i == 0 ? Exponent(1.0) : (i == 1 ? Exponent(2.0) : Exponent::inf());
        };
        OperatorInstance S = random_op(4, 4, 600 + seed, pick(seed % 3), pick((seed / 3) % 3));
        double op_upper = *operator_norm(S).value.upper;
        Mat M(4, 2), N(4, 2);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) {
                M(i, j) = g.next();
                N(i, j) = g.next();
            }
        NormResult rr = restricted_norm(S, M);
        NormResult qr = quotient_norm(S, N);
        CHECK(rr.value.lower <= op_upper * (1.0 + 1e-9) + 1e-12);
        CHECK(qr.value.lower <= op_upper * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("all three agree with the SVD on Hilbert pairs") {
    OperatorInstance S = random_op(5, 5, 99, Exponent(2.0), Exponent(2.0));
    SvdResult dec = svd(S.matrix);
    CHECK(operator_norm(S).value.lower == doctest::Approx(dec.sigma[0]).epsilon(1e-9));
    Mat M = dec.V.leftCols(3);
    CHECK(restricted_norm(S, M).value.lower == doctest::Approx(dec.sigma[0]).epsilon(1e-9));
    Mat N = dec.U.leftCols(2);
    CHECK(quotient_norm(S, N).value.lower == doctest::Approx(dec.sigma[2]).epsilon(1e-9));
}

TEST_CASE("factor norm helpers are certified uppers") {
    GaussianStream g(13);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Mat A(4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) A(i, j) = g.next();
        for (double pv : {1.0, 2.0, 0.0}) {
            SequenceSpace target{4, pv == 0.0 ? Exponent::inf() : Exponent(pv)};
            Config cfg;
            double upper = l2_to_space_norm_upper(A, target, cfg);
            // dense sampling of ||A xi||_p over the Euclidean sphere
            double sampled = 0.0;
            for (int s = 0; s < 4000; ++s) {
                Vec xi(3);
                xi << g.next(), g.next(), g.next();
                if (xi.norm() > 0.0) sampled = std::max(sampled, vector_norm(target, A * (xi / xi.norm())));
            }
            CHECK(sampled <= upper * (1.0 + 1e-9));
        }
    }
}

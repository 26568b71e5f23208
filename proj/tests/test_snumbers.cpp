#include "doctest.h"

#include "snum/errors.hpp"
#include "snum/generators.hpp"
#include "snum/linalg.hpp"
#include "snum/rng.hpp"
#include "snum/snumbers.hpp"

using namespace snum;

namespace {

void check_all_kinds_equal(const ProfileBundle& b, const Vec& expect, double tol) {
    for (SNumberKind k : kAllKinds) {
        for (int n = 1; n <= b.nmax; ++n) {
            double want = (n <= expect.size()) ? expect[n - 1] : 0.0;
            INFO(kind_name(k), " n=", n);
            CHECK(b.get(k).at(n).lower == doctest::Approx(want).epsilon(tol));
            REQUIRE(b.get(k).at(n).upper.has_value());
            CHECK(*b.get(k).at(n).upper == doctest::Approx(want).epsilon(tol));
        }
    }
}

}  // namespace

TEST_CASE("profile on Hilbert pairs reproduces singular values") {
    Vec expect(3);
    expect << 3, 2, 1;
    ProfileBundle b = profile(make_diagonal({3, 2, 1}, Exponent(2.0), Exponent(2.0)));
    check_all_kinds_equal(b, expect, 1e-9);
}

TEST_CASE("profile of the identity and the zero matrix") {
    {
        ProfileBundle b = profile(make_identity_embedding(3, Exponent(2.0), Exponent(2.0)));
        Vec ones = Vec::Ones(3);
        check_all_kinds_equal(b, ones, 1e-9);
    }
    {
        OperatorInstance Z{Mat::Zero(3, 3), {3, Exponent(1.0)}, {3, Exponent::inf()}};
        ProfileBundle b = profile(Z);
        for (SNumberKind k : kAllKinds)
            for (int n = 1; n <= 3; ++n) {
                CHECK(b.get(k).at(n).lower == 0.0);
                CHECK(*b.get(k).at(n).upper == 0.0);
            }
    }
}

TEST_CASE("profile of the shift-with-corner matrix") {
    ProfileBundle b = profile(make_t_matrix(4, 0.5));
    Vec expect(4);
    expect << 1, 1, 1, 0.5;
    check_all_kinds_equal(b, expect, 1e-9);
}

TEST_CASE("rank-one operators vanish from the second index on") {
    for (auto [dp, cp] : {std::pair{Exponent(2.0), Exponent(2.0)},
                          std::pair{Exponent(1.0), Exponent::inf()}}) {
        OperatorInstance S = make_rank_deficient(3, 1, 5, dp, cp);
        ProfileBundle b = profile(S);
        for (SNumberKind k : kAllKinds) {
            CHECK(b.get(k).at(2).lower == 0.0);
            CHECK(*b.get(k).at(2).upper == 0.0);
            CHECK(b.get(k).at(2).status() == Status::exact);
        }
    }
}

TEST_CASE("grid oracle pins a_2 of the identity from l_1^2 to l_inf^2") {
    // independent oracle: rank-1 approximants L = u v^T on a grid; the
    // optimum max|I - uv^T| = 0.5 is attained at the constant-1/2 matrix
    double grid_best = 1e9;
    for (double u1 = -2.0; u1 <= 2.0 + 1e-9; u1 += 0.1) {
        for (double u2 = -2.0; u2 <= 2.0 + 1e-9; u2 += 0.1) {
            for (double v1 = -2.0; v1 <= 2.0 + 1e-9; v1 += 0.1) {
                for (double v2 = -2.0; v2 <= 2.0 + 1e-9; v2 += 0.1) {
                    double m = std::max(std::max(std::abs(1 - u1 * v1), std::abs(u1 * v2)),
                                        std::max(std::abs(u2 * v1), std::abs(1 - u2 * v2)));
                    grid_best = std::min(grid_best, m);
                }
            }
        }
    }
    CHECK(grid_best == doctest::Approx(0.5).epsilon(1e-12));

    OperatorInstance I2 = make_identity_embedding(2, Exponent(1.0), Exponent::inf());
    SNumberReport rep = approximation_numbers(I2, 2);
    REQUIRE(rep.at(2).has_certified_upper());
    CHECK(*rep.at(2).upper == doctest::Approx(0.5).epsilon(1e-6));
    // the witness approximant must realize its bound
    REQUIRE(rep.witnesses[1].approximant.has_value());
    Mat L = *rep.witnesses[1].approximant;
    CHECK((I2.matrix - L).cwiseAbs().maxCoeff() == doctest::Approx(*rep.at(2).upper).epsilon(1e-9));
}

TEST_CASE("gelfand and kolmogorov at n=1 equal the operator norm") {
    OperatorInstance S = make_gaussian(4, 4, 31, Exponent(1.0), Exponent::inf());
    double norm = operator_norm(S).value.lower;
    CHECK(gelfand_numbers(S, 4).at(1).lower == doctest::Approx(norm));
    CHECK(kolmogorov_numbers(S, 4).at(1).lower == doctest::Approx(norm));
    CHECK(bernstein_numbers(S, 4).at(1).lower == doctest::Approx(norm));
}

TEST_CASE("kolmogorov candidates find the symmetric direction for the l_1 identity") {
    // d_2(I: l_1^2 -> l_2^2): the optimal one-dimensional span is the
    // diagonal, giving max_j dist(e_j, N) = 1/sqrt(2)
    OperatorInstance I2 = make_identity_embedding(2, Exponent(1.0), Exponent(2.0));
    Mat N(2, 1);
    N << 1, 1;
    NormResult q = quotient_norm(I2, N);
    CHECK(q.value.lower == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    SNumberReport rep = kolmogorov_numbers(I2, 2);
    REQUIRE(rep.at(2).has_certified_upper());
    CHECK(*rep.at(2).upper <= 1.0 / std::sqrt(2.0) + 1e-3);
    CHECK(*rep.at(2).upper >= 1.0 / std::sqrt(2.0) - 1e-9);
}

TEST_CASE("bernstein mesh lower bounds never exceed the dense-sample estimate") {
    GaussianStream g(9);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        OperatorInstance S = make_gaussian(4, 4, 800 + seed, Exponent(1.0), Exponent::inf());
        SNumberReport rep = bernstein_numbers(S, 3);
        for (int n = 2; n <= 3; ++n) {
            const CertifiedValue& v = rep.at(n);
            if (!v.lower_certified || v.lower == 0.0) continue;
            REQUIRE(rep.witnesses[static_cast<std::size_t>(n - 1)].subspace.has_value());
            Mat Q = *rep.witnesses[static_cast<std::size_t>(n - 1)].subspace;
            double sampled = 1e300;
            for (int s = 0; s < 20000; ++s) {
                Vec c(Q.cols());
                for (int i = 0; i < c.size(); ++i) c[i] = g.next();
                Vec x = Q * c;
                double dn = vector_norm(S.domain, x);
                if (dn > 1e-12) sampled = std::min(sampled, apply_norm(S, x) / dn);
            }
            CHECK(v.lower <= sampled + 1e-9);
        }
    }
}

TEST_CASE("weyl and hilbert achieve the norm at n=1 via rank-one factors") {
    OperatorInstance S = make_gaussian(4, 4, 77, Exponent(1.0), Exponent::inf());
    double norm = operator_norm(S).value.lower;
    SNumberReport x = weyl_numbers(S, 4);
    CHECK(x.at(1).lower == doctest::Approx(norm).epsilon(1e-9));
    SNumberReport h = hilbert_numbers(S, 4);
    CHECK(h.at(1).lower == doctest::Approx(norm).epsilon(1e-9));
}

TEST_CASE("hilbert lower bounds are genuine factorization values") {
    OperatorInstance S = make_gaussian(5, 5, 123, Exponent(1.0), Exponent(2.0));
    SNumberReport h = hilbert_numbers(S, 5);
    Config cfg;
    for (int n = 1; n <= 5; ++n) {
        if (!h.witnesses[static_cast<std::size_t>(n - 1)].factor_a.has_value()) continue;
        Mat A = *h.witnesses[static_cast<std::size_t>(n - 1)].factor_a;
        Mat B = *h.witnesses[static_cast<std::size_t>(n - 1)].factor_b;
        Vec s = svd(Mat(B * S.matrix * A)).sigma;
        if (n > s.size()) continue;
        double na = l2_to_space_norm_upper(A, S.domain, cfg);
        double nb = space_to_l2_norm_upper(B, S.codomain, cfg);
        CHECK(h.at(n).lower >= s[n - 1] / (na * nb) - 1e-9);
    }
}

TEST_CASE("lattice propagation: flows, smoothing and faults") {
    auto blank_bundle = [](int nmax) {
        ProfileBundle b;
        b.nmax = nmax;
        b.rank = nmax;
        int i = 0;
        for (SNumberKind k : kAllKinds) {
            b.reports[static_cast<std::size_t>(i)].kind = k;
            b.reports[static_cast<std::size_t>(i)].values.resize(static_cast<std::size_t>(nmax));
            b.reports[static_cast<std::size_t>(i)].witnesses.resize(static_cast<std::size_t>(nmax));
            ++i;
        }
        return b;
    };

    SUBCASE("running-minimum smoothing of uppers") {
        ProfileBundle b = blank_bundle(3);
        auto& a = b.get(SNumberKind::approximation);
        a.at(1).merge_upper(1.0, true, "t");
        a.at(2).merge_upper(1.2, true, "t");
        a.at(3).merge_upper(0.9, true, "t");
        propagate_lattice(b);
        CHECK(*a.at(1).upper == doctest::Approx(1.0));
        CHECK(*a.at(2).upper == doctest::Approx(1.0));
        CHECK(*a.at(3).upper == doctest::Approx(0.9));
    }

    SUBCASE("uppers flow downward to the hilbert report") {
        ProfileBundle b = blank_bundle(2);
        b.get(SNumberKind::gelfand).at(1).merge_upper(1.0, true, "t");
        propagate_lattice(b);
        REQUIRE(b.get(SNumberKind::hilbert).at(1).has_certified_upper());
        CHECK(*b.get(SNumberKind::hilbert).at(1).upper <= 1.0);
    }

    SUBCASE("lowers flow upward to the approximation report") {
        ProfileBundle b = blank_bundle(2);
        b.get(SNumberKind::hilbert).at(1).merge_lower(0.7, true, "t");
        propagate_lattice(b);
        CHECK(b.get(SNumberKind::approximation).at(1).lower >= 0.7);
    }

    SUBCASE("bernstein uppers are capped by min(c, d)") {
        ProfileBundle b = blank_bundle(2);
        b.get(SNumberKind::gelfand).at(1).merge_upper(0.6, true, "t");
        b.get(SNumberKind::kolmogorov).at(1).merge_upper(0.8, true, "t");
        propagate_lattice(b);
        CHECK(*b.get(SNumberKind::bernstein).at(1).upper == doctest::Approx(0.6));
    }

    SUBCASE("contradicting certified bounds raise the fault") {
        ProfileBundle b = blank_bundle(2);
        b.get(SNumberKind::hilbert).at(1).merge_lower(0.5, true, "t");
        b.get(SNumberKind::approximation).at(1).merge_upper(0.4, true, "t");
        CHECK_THROWS_AS(propagate_lattice(b), CertifiedViolation);
    }
}

TEST_CASE("nmax validation") {
    OperatorInstance S = make_diagonal({1, 1}, Exponent(2.0), Exponent(2.0));
    CHECK(resolve_nmax(S, 0) == 2);
    CHECK(resolve_nmax(S, 3) == 3);  // min(dim)+1 allowed
    CHECK_THROWS_AS(resolve_nmax(S, 4), InputError);
    SNumberReport rep = approximation_numbers(S, 3);
    CHECK(*rep.at(3).upper == 0.0);  // beyond the rank
}

TEST_CASE("smoothed profiles are monotone on awkward pairs") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        OperatorInstance S = make_gaussian(5, 5, 500 + seed,
                                           seed % 2 ? Exponent(1.0) : Exponent(2.0),
                                           seed < 2 ? Exponent::inf() : Exponent(2.0));
        ProfileBundle b = profile(S);
        for (SNumberKind k : kAllKinds) {
            const SNumberReport& rep = b.get(k);
            for (int n = 2; n <= b.nmax; ++n) {
                if (rep.at(n).has_certified_upper() && rep.at(n - 1).has_certified_upper()) {
                    CHECK(*rep.at(n).upper <= *rep.at(n - 1).upper + 1e-12);
                }
                if (rep.at(n).lower_certified && rep.at(n - 1).lower_certified) {
                    CHECK(rep.at(n).lower <= rep.at(n - 1).lower + 1e-12);
                }
            }
        }
    }
}

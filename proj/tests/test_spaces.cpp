#include "doctest.h"

#include "snum/errors.hpp"
#include "snum/rng.hpp"
#include "snum/spaces.hpp"

using namespace snum;

namespace {

Vec make_vec(std::initializer_list<double> vals) {
    Vec v(static_cast<int>(vals.size()));
    int i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

Vec random_vec(int dim, GaussianStream& g) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = g.next();
    return v;
}

}  // namespace

TEST_CASE("vector_norm closed forms") {
    CHECK(vector_norm({2, Exponent(1.0)}, make_vec({1, -2})) == doctest::Approx(3.0));
    CHECK(vector_norm({2, Exponent(2.0)}, make_vec({3, 4})) == doctest::Approx(5.0));
    CHECK(vector_norm({2, Exponent::inf()}, make_vec({1, -2})) == doctest::Approx(2.0));
    CHECK_THROWS_AS(vector_norm({3, Exponent(1.0)}, make_vec({1, 2})), InputError);
}

TEST_CASE("dual exponents") {
    CHECK(Exponent(1.0).dual().is_inf());
    CHECK(Exponent(2.0).dual().is_two());
    CHECK(Exponent::inf().dual().is_one());
    CHECK(Exponent(3.0).dual().value() == doctest::Approx(1.5));
    CHECK_THROWS_AS(Exponent(0.5), InputError);
}

TEST_CASE("norming functionals per exponent") {
    {
        Vec b = norming_functional({2, Exponent(2.0)}, make_vec({3, 4}));
        CHECK(b[0] == doctest::Approx(0.6));
        CHECK(b[1] == doctest::Approx(0.8));
        CHECK(b.dot(make_vec({3, 4})) == doctest::Approx(5.0));
    }
    {
        Vec b = norming_functional({2, Exponent(1.0)}, make_vec({1, -2}));
        CHECK(b[0] == doctest::Approx(1.0));
        CHECK(b[1] == doctest::Approx(-1.0));
    }
    {
        Vec b = norming_functional({2, Exponent::inf()}, make_vec({2, -5}));
        CHECK(b[0] == doctest::Approx(0.0));
        CHECK(b[1] == doctest::Approx(-1.0));
        CHECK(b.dot(make_vec({2, -5})) == doctest::Approx(5.0));
    }
    CHECK_THROWS_AS(norming_functional({2, Exponent(2.0)}, make_vec({0, 0})), InputError);
}

TEST_CASE("norming functional ties break at the lowest index") {
    Vec b = norming_functional({3, Exponent::inf()}, make_vec({-2, 2, 2}));
    CHECK(b[0] == doctest::Approx(-1.0));
    CHECK(b[1] == doctest::Approx(0.0));
    CHECK(b[2] == doctest::Approx(0.0));
}

TEST_CASE("norm axioms hold on random vectors") {
    GaussianStream g(7);
    for (double pv : {1.0, 2.0, 3.0, 0.0 /* inf marker */}) {
        Exponent p = (pv == 0.0) ? Exponent::inf() : Exponent(pv);
        SequenceSpace space{5, p};
        for (int trial = 0; trial < 50; ++trial) {
            Vec v = random_vec(5, g), w = random_vec(5, g);
            double a = g.next();
            CHECK(vector_norm(space, v + w) <= vector_norm(space, v) + vector_norm(space, w) + 1e-12);
            CHECK(vector_norm(space, a * v) == doctest::Approx(std::abs(a) * vector_norm(space, v)));
        }
    }
}

TEST_CASE("norming functional attains the norm within 1e-12") {
    GaussianStream g(11);
    for (double pv : {1.0, 1.7, 2.0, 4.0, 0.0}) {
        Exponent p = (pv == 0.0) ? Exponent::inf() : Exponent(pv);
        SequenceSpace space{6, p};
        SequenceSpace dual = space.dual();
        for (int trial = 0; trial < 40; ++trial) {
            Vec y = random_vec(6, g);
            Vec b = norming_functional(space, y);
            double ny = vector_norm(space, y);
            CHECK(std::abs(b.dot(y) - ny) <= 1e-12 * (1.0 + ny));
            CHECK(vector_norm(dual, b) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("ball extreme points") {
    auto p1 = ball_extreme_points({2, Exponent(1.0)});
    CHECK(p1.size() == 4);
    auto pinf = ball_extreme_points({2, Exponent::inf()});
    CHECK(pinf.size() == 4);
    for (const Vec& v : pinf) CHECK(v.cwiseAbs().minCoeff() == doctest::Approx(1.0));
    CHECK_THROWS_AS(ball_extreme_points({2, Exponent(2.0)}), CapabilityError);
    CHECK_THROWS_AS(ball_extreme_points({25, Exponent::inf()}), CapabilityError);
}

TEST_CASE("extreme points dominate dense ball sampling for convex functions") {
    GaussianStream g(23);
    for (double pv : {1.0, 0.0}) {
        Exponent p = (pv == 0.0) ? Exponent::inf() : Exponent(pv);
        SequenceSpace space{4, p};
        Mat A(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) A(i, j) = g.next();
        auto f = [&](const Vec& x) { return (A * x).lpNorm<1>(); };

        double best_extreme = 0.0;
        for (const Vec& v : ball_extreme_points(space)) best_extreme = std::max(best_extreme, f(v));

        double best_sampled = 0.0;
        for (int s = 0; s < 20000; ++s) {
            Vec x = random_vec(4, g);
            double n = vector_norm(space, x);
            if (n > 0.0) best_sampled = std::max(best_sampled, f(x / n));
        }
        CHECK(best_extreme >= best_sampled - 1e-9);
    }
}

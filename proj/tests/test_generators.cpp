#include "doctest.h"

#include "snum/errors.hpp"
#include "snum/generators.hpp"
#include "snum/linalg.hpp"

using namespace snum;

TEST_CASE("shift-with-corner matrix layout") {
    OperatorInstance T = make_t_matrix(3, 0.5);
    Mat expect(3, 3);
    expect << 0, 1, 0, 0, 0, 1, 0.5, 0, 0;
    CHECK((T.matrix - expect).cwiseAbs().maxCoeff() == 0.0);

    // one nonzero per column
    Vec col_norms(3);
    for (int j = 0; j < 3; ++j) col_norms[j] = T.matrix.col(j).lpNorm<1>();
    CHECK(col_norms[0] == doctest::Approx(0.5));
    CHECK(col_norms[1] == doctest::Approx(1.0));
    CHECK(col_norms[2] == doctest::Approx(1.0));

    Mat cube = T.matrix * T.matrix * T.matrix;
    CHECK((cube - 0.5 * Mat::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-15);

    CHECK_THROWS_AS(make_t_matrix(3, 1.0), InputError);
    CHECK_THROWS_AS(make_t_matrix(3, 0.0), InputError);
    CHECK_THROWS_AS(make_t_matrix(1, 0.5), InputError);
}

TEST_CASE("corpus regeneration is bit-identical") {
    CorpusSpec spec = default_verification_corpus(7);
    spec.count = 10;
    auto a = make_corpus(spec);
    auto b = make_corpus(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].matrix.rows() == b[i].matrix.rows());
        CHECK((a[i].matrix - b[i].matrix).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("corpus instances satisfy shape invariants") {
    CorpusSpec spec = default_verification_corpus(3);
    spec.count = 12;
    for (const OperatorInstance& op : make_corpus(spec)) {
        CHECK(op.matrix.cols() == op.domain.dim);
        CHECK(op.matrix.rows() == op.codomain.dim);
        CHECK(op.domain.dim >= spec.dim_min);
        CHECK(op.domain.dim <= spec.dim_max);
        CHECK(op.matrix.allFinite());
    }
}

TEST_CASE("identity embedding and rank-deficient generators") {
    OperatorInstance I = make_identity_embedding(4, Exponent(1.0), Exponent::inf());
    CHECK(I.domain.p.is_one());
    CHECK(I.codomain.p.is_inf());
    CHECK((I.matrix - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    OperatorInstance R = make_rank_deficient(5, 2, 11, Exponent(2.0), Exponent(2.0));
    Vec s = svd(R.matrix).sigma;
    CHECK(s[0] > 1e-8);
    CHECK(s[1] > 1e-8);
    CHECK(s[2] <= 1e-10 * (1.0 + s[0]));
    CHECK(numerical_rank(R.matrix) == 2);
}

TEST_CASE("corpus validation errors") {
    CorpusSpec bad = default_verification_corpus(1);
    bad.count = 0;
    CHECK_THROWS_AS(make_corpus(bad), InputError);
    CorpusSpec bad2 = default_verification_corpus(1);
    bad2.dim_min = 1;
    CHECK_THROWS_AS(make_corpus(bad2), InputError);
}

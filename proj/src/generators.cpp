#include "snum/generators.hpp"

#include "snum/errors.hpp"
#include "snum/rng.hpp"

namespace snum {

namespace {

Mat gaussian_matrix(int rows, int cols, std::uint64_t seed) {
    GaussianStream g(seed);
    Mat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = g.next();
    return M;
}

}  // namespace

OperatorInstance make_t_matrix(int n, double sigma) {
    if (n < 2) throw InputError("T_n needs n >= 2");
    if (!(sigma > 0.0 && sigma < 1.0)) throw InputError("T_n needs 0 < sigma < 1");
    Mat T = Mat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) T(i, i + 1) = 1.0;
    T(n - 1, 0) = sigma;
    return {T, SequenceSpace(n, Exponent(2.0)), SequenceSpace(n, Exponent(2.0))};
}

OperatorInstance make_identity_embedding(int m, Exponent domain_p, Exponent codomain_p) {
    return {Mat::Identity(m, m), SequenceSpace(m, domain_p), SequenceSpace(m, codomain_p)};
}

OperatorInstance make_diagonal(const std::vector<double>& diag, Exponent domain_p, Exponent codomain_p) {
    const int m = static_cast<int>(diag.size());
    Mat D = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i) D(i, i) = diag[static_cast<std::size_t>(i)];
    return {D, SequenceSpace(m, domain_p), SequenceSpace(m, codomain_p)};
}

OperatorInstance make_rank_deficient(int m, int r, std::uint64_t seed, Exponent domain_p,
                                     Exponent codomain_p) {
    if (r < 0 || r > m) throw InputError("rank must lie in [0, m]");
    Mat M = gaussian_matrix(m, r, derive_seed(seed, "rank-left", 0)) *
            gaussian_matrix(r, m, derive_seed(seed, "rank-right", 0));
    if (r == 0) M = Mat::Zero(m, m);
    return {M, SequenceSpace(m, domain_p), SequenceSpace(m, codomain_p)};
}

OperatorInstance make_gaussian(int rows, int cols, std::uint64_t seed, Exponent domain_p,
                               Exponent codomain_p) {
    return {gaussian_matrix(rows, cols, seed), SequenceSpace(cols, domain_p),
            SequenceSpace(rows, codomain_p)};
}

std::vector<OperatorInstance> make_corpus(const CorpusSpec& spec) {
    if (spec.count < 1) throw InputError("corpus count must be >= 1");
    if (spec.dim_min < 2 || spec.dim_max < spec.dim_min) throw InputError("corpus dims must be >= 2");
    if (spec.pairs.empty()) throw InputError("corpus needs at least one space pair");

    std::vector<OperatorInstance> ops;
    ops.reserve(static_cast<std::size_t>(spec.count));
    const int dim_span = spec.dim_max - spec.dim_min + 1;
    for (int i = 0; i < spec.count; ++i) {
        std::uint64_t op_seed = derive_seed(spec.seed, "op", static_cast<std::uint64_t>(i));
        GaussianStream g(derive_seed(op_seed, "shape", 0));
        int dim = spec.dim_min + static_cast<int>(g.uniform() * dim_span) % dim_span;
        auto [dp, cp] = spec.pairs[static_cast<std::size_t>(i) % spec.pairs.size()];
        if (spec.distribution == "mixed") {
            switch (i % 4) {
                case 0: ops.push_back(make_gaussian(dim, dim, op_seed, dp, cp)); break;
                case 1: ops.push_back(make_identity_embedding(dim, dp, cp)); break;
                case 2: {
                    std::vector<double> diag(static_cast<std::size_t>(dim));
                    for (int k = 0; k < dim; ++k) diag[static_cast<std::size_t>(k)] = 1.0 / (k + 1.0);
                    ops.push_back(make_diagonal(diag, dp, cp));
                    break;
                }
                default:
                    ops.push_back(make_rank_deficient(dim, std::max(1, dim / 2), op_seed, dp, cp));
            }
        } else {
            ops.push_back(make_gaussian(dim, dim, op_seed, dp, cp));
        }
    }
    return ops;
}

CorpusSpec default_verification_corpus(std::uint64_t seed) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.count = 100;
    spec.dim_min = 4;
    spec.dim_max = 8;
    spec.pairs = {{Exponent(2.0), Exponent(2.0)},
                  {Exponent(1.0), Exponent::inf()},
                  {Exponent(2.0), Exponent::inf()},
                  {Exponent(1.0), Exponent(2.0)}};
    return spec;
}

}  // namespace snum

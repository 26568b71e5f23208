#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snum/operators.hpp"

namespace snum {

// Shift-with-corner matrix on l_2^n: ones on the superdiagonal, sigma in the
// bottom-left corner. Singular values are (1,...,1,sigma) and all eigenvalue
// moduli equal sigma^{1/n}.
OperatorInstance make_t_matrix(int n, double sigma);

OperatorInstance make_identity_embedding(int m, Exponent domain_p, Exponent codomain_p);

OperatorInstance make_diagonal(const std::vector<double>& diag, Exponent domain_p, Exponent codomain_p);

// Exact rank r by construction: product of two Gaussian factors.
OperatorInstance make_rank_deficient(int m, int r, std::uint64_t seed, Exponent domain_p,
                                     Exponent codomain_p);

OperatorInstance make_gaussian(int rows, int cols, std::uint64_t seed, Exponent domain_p,
                               Exponent codomain_p);

struct CorpusSpec {
    std::uint64_t seed = 1;
    int count = 100;
    int dim_min = 4;
    int dim_max = 8;
    std::vector<std::pair<Exponent, Exponent>> pairs;  // cycled over instances
    std::string distribution = "gaussian";             // "gaussian" | "mixed"
};

// Deterministic for a fixed spec: regenerating yields bit-identical matrices.
std::vector<OperatorInstance> make_corpus(const CorpusSpec& spec);

// The corpus every verification suite runs on by default: 100 Gaussian
// operators, dims 4..8, pairs (2,2), (1,inf), (2,inf), (1,2).
CorpusSpec default_verification_corpus(std::uint64_t seed);

}  // namespace snum

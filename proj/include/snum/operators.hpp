#pragma once

#include "snum/spaces.hpp"

namespace snum {

// A real matrix acting between two l_p^m spaces.
struct OperatorInstance {
    Mat matrix;
    SequenceSpace domain;
    SequenceSpace codomain;

    OperatorInstance(Mat m, SequenceSpace dom, SequenceSpace cod);

    bool hilbert_pair() const { return domain.p.is_two() && codomain.p.is_two(); }
    int min_dim() const { return std::min(domain.dim, codomain.dim); }
};

// Norm of Sx in the codomain.
double apply_norm(const OperatorInstance& op, const Vec& x);

}  // namespace snum

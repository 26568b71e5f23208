#include "snum/operators.hpp"

#include "snum/errors.hpp"

namespace snum {

OperatorInstance::OperatorInstance(Mat m, SequenceSpace dom, SequenceSpace cod)
    : matrix(std::move(m)), domain(dom), codomain(cod) {
    if (matrix.cols() != domain.dim || matrix.rows() != codomain.dim) {
        throw InputError("operator shape does not match its spaces");
    }
    if (!matrix.allFinite()) throw InputError("operator matrix has non-finite entries");
}

double apply_norm(const OperatorInstance& op, const Vec& x) {
    return exponent_norm(op.codomain.p, op.matrix * x);
}

}  // namespace snum

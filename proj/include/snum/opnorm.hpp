#pragma once

#include "snum/certified.hpp"
#include "snum/config.hpp"
#include "snum/operators.hpp"

namespace snum {

struct NormResult {
    CertifiedValue value;
    Vec maximizer;  // feasible point achieving value.lower (domain coordinates)
};

// kappa(p,q,m_in,m_out): valid factor with ||S||_{p->q} <= kappa * sigma_1(S).
double kappa_bridge(const SequenceSpace& domain, const SequenceSpace& codomain);

// ||S: X -> Y||. Exact for domain p=1, codomain p=inf, the (2,2) pair, and
// domain p=inf within the enumeration cap; otherwise a certified interval
// from multi-start ascent (lower) and the kappa bridge (upper).
NormResult operator_norm(const OperatorInstance& S, const Config& cfg = {});

// ||S J_M||: the norm of S restricted to the subspace spanned by M's columns.
NormResult restricted_norm(const OperatorInstance& S, const Mat& M, const Config& cfg = {},
                           bool want_lower = true);

// ||Q_N S||: composition with the quotient map by span(N) in the codomain.
NormResult quotient_norm(const OperatorInstance& S, const Mat& N, const Config& cfg = {},
                         bool want_lower = true);

// Certified upper bound of ||A: l_2^k -> target|| (exact where a closed form
// exists; enumeration or bridge otherwise). Sets *exact accordingly.
double l2_to_space_norm_upper(const Mat& A, const SequenceSpace& target, const Config& cfg,
                              bool* exact = nullptr);

// Certified upper bound of ||B: source -> l_2^k||, via duality with the above.
double space_to_l2_norm_upper(const Mat& B, const SequenceSpace& source, const Config& cfg,
                              bool* exact = nullptr);

}  // namespace snum

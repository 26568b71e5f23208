#pragma once

#include <string>
#include <vector>

#include "snum/config.hpp"
#include "snum/operators.hpp"
#include "snum/reports.hpp"

namespace snum {

enum class ChainVariant { gelfand, kolmogorov };

const char* chain_variant_name(ChainVariant v);

struct ChainLink {
    Vec x;               // domain vector, ||x||_X <= 1
    Vec b;               // dual vector, dual norm <= 1
    double value = 0.0;  // v_k = <S x_k, b_k>
    bool exact = true;   // inner maximization used an exact path
};

// Executable trace of the determinant argument: vectors x_k, functionals
// b_k, the factor maps A (l_2^n -> X) and B (Y -> l_2^n), the triangular
// matrix S_n = B S A and the Hilbert-number lower bounds it certifies.
struct WitnessChain {
    ChainVariant variant = ChainVariant::gelfand;
    double epsilon = 0.0;
    std::vector<ChainLink> links;
    Mat A;               // columns x_k
    Mat B;               // rows b_k
    Mat Sn;              // B * S * A
    double normA = 0.0;  // certified uppers, <= sqrt(n)
    double normB = 0.0;
    double det = 0.0;    // det(Sn)
    std::vector<double> hk_lowers;  // sigma_k(Sn) / (normA * normB)
    bool truncated = false;
    std::string truncation_note;

    int length() const { return static_cast<int>(links.size()); }
};

WitnessChain gelfand_chain(const OperatorInstance& S, int n, double epsilon, const Config& cfg = {});
WitnessChain kolmogorov_chain(const OperatorInstance& S, int n, double epsilon, const Config& cfg = {});

// The WitnessChain type invariants as pass/fail records (triangularity,
// feasibility of x_k and b_k, factor norms, determinant identities).
std::vector<CheckRecord> validate_chain(const WitnessChain& chain, const OperatorInstance& S);

// Interval form of the product bound at index nn: fails only when the
// certified lower of max(c_nn, d_nn) exceeds the certified upper of
// nn * (prod_{k<=nn} h_k)^{1/nn}.
CheckRecord product_bound_record(const ProfileBundle& bundle, int nn);

// Builds both chains, registers their Hilbert lower bounds into the bundle,
// re-propagates, and emits the determinant-chain identities plus the
// falsification test of the product bound.
std::vector<CheckRecord> theorem_check(const OperatorInstance& S, int n, double epsilon,
                                       ProfileBundle& bundle, const Config& cfg = {});

}  // namespace snum

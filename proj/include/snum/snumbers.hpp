#pragma once

#include "snum/config.hpp"
#include "snum/operators.hpp"
#include "snum/reports.hpp"

namespace snum {

// The six s-number sequences as certified intervals. Hilbert pairs short-
// circuit to singular values where the theory makes that exact; elsewhere
// upper bounds come from explicit certificates (low-rank approximants,
// subspaces) and lower bounds from explicit factorizations, with the
// Proposition-1 lattice tightening both sides afterwards.

SNumberReport approximation_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});
SNumberReport gelfand_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});
SNumberReport kolmogorov_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});
SNumberReport bernstein_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});
SNumberReport weyl_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});
SNumberReport hilbert_numbers(const OperatorInstance& S, int nmax, const Config& cfg = {});

// Lower bounds flow h -> {b,c,d,x} -> a, upper bounds a -> {b,c,d,x} -> h,
// b uppers are capped by min(c,d); then monotone smoothing in n. Throws
// CertifiedViolation if certified bounds contradict each other.
void propagate_lattice(ProfileBundle& bundle, double fault_tol = 1e-9);

// All six kinds plus witness-chain registration and lattice propagation.
ProfileBundle profile(const OperatorInstance& S, int nmax = 0, const Config& cfg = {});

// Shared helper: resolves/validates nmax (0 picks min(dims)).
int resolve_nmax(const OperatorInstance& S, int nmax);

}  // namespace snum

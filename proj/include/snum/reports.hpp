#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "snum/certified.hpp"
#include "snum/opnorm.hpp"

namespace snum {

enum class SNumberKind { approximation, bernstein, gelfand, kolmogorov, weyl, hilbert };

inline constexpr std::array<SNumberKind, 6> kAllKinds = {
    SNumberKind::approximation, SNumberKind::bernstein, SNumberKind::gelfand,
    SNumberKind::kolmogorov,    SNumberKind::weyl,      SNumberKind::hilbert};

const char* kind_name(SNumberKind k);
std::optional<SNumberKind> kind_from_name(const std::string& name);

// Optional per-index certificate: the object realizing the best bound.
struct IndexWitness {
    std::optional<Mat> subspace;     // Gelfand M / Kolmogorov N / Bernstein M
    std::optional<Mat> approximant;  // low-rank L for approximation numbers
    std::optional<Mat> factor_a;     // Weyl/Hilbert left factor
    std::optional<Mat> factor_b;     // Hilbert right factor
};

struct SNumberReport {
    SNumberKind kind = SNumberKind::approximation;
    std::vector<CertifiedValue> values;    // index 0 holds n = 1
    std::vector<IndexWitness> witnesses;

    int nmax() const { return static_cast<int>(values.size()); }
    CertifiedValue& at(int n) { return values[static_cast<std::size_t>(n - 1)]; }
    const CertifiedValue& at(int n) const { return values[static_cast<std::size_t>(n - 1)]; }
};

struct ProfileBundle {
    std::array<SNumberReport, 6> reports;
    NormResult norm;  // ||S||, shared by several suites
    int rank = 0;
    int nmax = 0;

    SNumberReport& get(SNumberKind k) { return reports[static_cast<std::size_t>(k)]; }
    const SNumberReport& get(SNumberKind k) const { return reports[static_cast<std::size_t>(k)]; }
};

enum class CheckStatus { pass, fail, skipped_uncertified };

const char* check_status_name(CheckStatus s);

// One verified (or skipped) inequality instance with the numbers compared.
struct CheckRecord {
    std::string id;
    std::vector<double> operands;
    double margin = 0.0;
    CheckStatus status = CheckStatus::pass;
};

}  // namespace snum

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace snum {

enum class Status { exact, certified_interval, lower_only, heuristic };

const char* status_name(Status s);

// One-sided-certificate discipline: a bound may be consumed by verification
// only if its side is certified. Heuristic estimates are carried for
// reporting but quarantined from every inequality check.
struct CertifiedValue {
    double lower = 0.0;
    std::optional<double> upper{};
    bool lower_certified = true;  // lower = 0 is always a valid certificate
    bool upper_certified = false;
    std::vector<std::string> methods{};

    static CertifiedValue exact_value(double v, const std::string& tag);

    bool has_certified_upper() const { return upper.has_value() && upper_certified; }

    // Keep the better bound; tags record where it came from.
    void merge_lower(double v, bool certified, const std::string& tag);
    void merge_upper(double v, bool certified, const std::string& tag);

    // Enforce lower <= upper for uncertified lowers; certified conflicts are
    // the caller's (lattice's) job to detect.
    void normalize();

    bool tight(double tol) const {
        return has_certified_upper() && lower_certified && (*upper - lower) <= tol * (1.0 + std::abs(*upper));
    }

    Status status(double tol_exact = 1e-9) const;
};

}  // namespace snum

#include "snum/certified.hpp"

#include <algorithm>
#include <cmath>

namespace snum {

const char* status_name(Status s) {
    switch (s) {
        case Status::exact: return "exact";
        case Status::certified_interval: return "certified-interval";
        case Status::lower_only: return "lower-only";
        case Status::heuristic: return "heuristic";
    }
    return "?";
}

CertifiedValue CertifiedValue::exact_value(double v, const std::string& tag) {
    CertifiedValue cv;
    cv.lower = v;
    cv.upper = v;
    cv.lower_certified = true;
    cv.upper_certified = true;
    cv.methods.push_back(tag);
    return cv;
}

void CertifiedValue::merge_lower(double v, bool certified, const std::string& tag) {
    if (certified && !lower_certified) {
        // a certified bound replaces any heuristic estimate
        lower = v;
        lower_certified = true;
        methods.push_back(tag);
        return;
    }
    if (certified == lower_certified && v > lower) {
        lower = v;
        methods.push_back(tag);
    }
}

void CertifiedValue::merge_upper(double v, bool certified, const std::string& tag) {
    if (certified && !(upper.has_value() && upper_certified)) {
        upper = v;
        upper_certified = true;
        methods.push_back(tag);
        return;
    }
    bool comparable = upper.has_value() && (certified == upper_certified);
    if (comparable && v < *upper) {
        upper = v;
        methods.push_back(tag);
    } else if (!upper.has_value()) {
        upper = v;
        upper_certified = certified;
        methods.push_back(tag);
    }
}

void CertifiedValue::normalize() {
    if (upper.has_value() && upper_certified && !lower_certified && lower > *upper) {
        lower = *upper;
        methods.push_back("clamped-to-upper");
    }
    if (lower < 0.0 && lower > -1e-12) lower = 0.0;
    if (upper.has_value() && *upper < 0.0 && *upper > -1e-12) upper = 0.0;
}

Status CertifiedValue::status(double tol_exact) const {
    if (!lower_certified) return Status::heuristic;
    if (has_certified_upper()) {
        return tight(tol_exact) ? Status::exact : Status::certified_interval;
    }
    return Status::lower_only;
}

}  // namespace snum

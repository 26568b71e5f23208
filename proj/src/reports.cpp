#include "snum/reports.hpp"

namespace snum {

const char* kind_name(SNumberKind k) {
    switch (k) {
        case SNumberKind::approximation: return "approximation";
        case SNumberKind::bernstein: return "bernstein";
        case SNumberKind::gelfand: return "gelfand";
        case SNumberKind::kolmogorov: return "kolmogorov";
        case SNumberKind::weyl: return "weyl";
        case SNumberKind::hilbert: return "hilbert";
    }
    return "?";
}

std::optional<SNumberKind> kind_from_name(const std::string& name) {
    for (SNumberKind k : kAllKinds) {
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped_uncertified: return "skipped-uncertified";
    }
    return "?";
}

}  // namespace snum

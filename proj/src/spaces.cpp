#include "snum/spaces.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "snum/errors.hpp"

namespace snum {

Exponent::Exponent(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0) throw InputError("exponent must satisfy p >= 1");
}

Exponent Exponent::inf() { return Exponent(std::numeric_limits<double>::infinity()); }

bool Exponent::is_inf() const { return std::isinf(p_); }

Exponent Exponent::dual() const {
    if (is_one()) return Exponent::inf();
    if (is_inf()) return Exponent(1.0);
    return Exponent(p_ / (p_ - 1.0));
}

std::string Exponent::str() const {
    if (is_inf()) return "inf";
    if (p_ == static_cast<double>(static_cast<long long>(p_))) {
        return std::to_string(static_cast<long long>(p_));
    }
    std::ostringstream os;
    os << p_;
    return os.str();
}

SequenceSpace::SequenceSpace(int dim_, Exponent p_) : dim(dim_), p(p_) {
    if (dim < 1) throw InputError("space dimension must be >= 1");
}

double exponent_norm(const Exponent& p, const Vec& v) {
    if (p.is_one()) return v.lpNorm<1>();
    if (p.is_two()) return v.norm();
    if (p.is_inf()) return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p.value());
    return std::pow(s, 1.0 / p.value());
}

double vector_norm(const SequenceSpace& space, const Vec& v) {
    if (v.size() != space.dim) throw InputError("vector length does not match space dimension");
    return exponent_norm(space.p, v);
}

Vec norming_functional(const SequenceSpace& space, const Vec& y) {
    if (y.size() != space.dim) throw InputError("vector length does not match space dimension");
    const double ny = exponent_norm(space.p, y);
    if (ny == 0.0) throw InputError("norming functional of the zero vector is degenerate");

    Vec b = Vec::Zero(space.dim);
    if (space.p.is_one()) {
        for (int i = 0; i < space.dim; ++i) b[i] = (y[i] > 0.0) ? 1.0 : (y[i] < 0.0 ? -1.0 : 0.0);
    } else if (space.p.is_inf()) {
        int j = 0;
        double best = -1.0;
        for (int i = 0; i < space.dim; ++i) {
            if (std::abs(y[i]) > best) {
                best = std::abs(y[i]);
                j = i;
            }
        }
        b[j] = (y[j] >= 0.0) ? 1.0 : -1.0;
    } else {
        const double p = space.p.value();
        for (int i = 0; i < space.dim; ++i) {
            double m = std::pow(std::abs(y[i]), p - 1.0);
            b[i] = (y[i] >= 0.0 ? m : -m);
        }
        b /= std::pow(ny, p - 1.0);
    }
    return b;
}

std::vector<Vec> ball_extreme_points(const SequenceSpace& space, int enum_cap) {
    std::vector<Vec> pts;
    if (space.p.is_one()) {
        pts.reserve(2 * space.dim);
        for (int i = 0; i < space.dim; ++i) {
            Vec e = Vec::Zero(space.dim);
            e[i] = 1.0;
            pts.push_back(e);
            pts.push_back(-e);
        }
        return pts;
    }
    if (space.p.is_inf()) {
        if (space.dim > enum_cap) {
            throw CapabilityError("sign-vector enumeration cap exceeded (dim " +
                                  std::to_string(space.dim) + " > " + std::to_string(enum_cap) + ")");
        }
        const std::size_t count = std::size_t{1} << space.dim;
        pts.reserve(count);
        for (std::size_t mask = 0; mask < count; ++mask) {
            Vec s(space.dim);
            for (int i = 0; i < space.dim; ++i) s[i] = (mask >> i) & 1 ? 1.0 : -1.0;
            pts.push_back(s);
        }
        return pts;
    }
    throw CapabilityError("unit ball of l_" + space.p.str() + " has no finite extreme-point set");
}

double p_to_l2_factor(const Exponent& p, int m) {
    if (p.is_inf()) return std::sqrt(static_cast<double>(m));
    if (p.value() <= 2.0) return 1.0;
    return std::pow(static_cast<double>(m), 0.5 - 1.0 / p.value());
}

double l2_to_p_factor(const Exponent& p, int m) {
    if (p.is_inf() || p.value() >= 2.0) return 1.0;
    return std::pow(static_cast<double>(m), 1.0 / p.value() - 0.5);
}

}  // namespace snum

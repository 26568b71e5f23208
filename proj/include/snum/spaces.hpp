#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace snum {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Norm exponent of an l_p space. Infinity is a first-class value; exponents
// outside {1, 2, inf} are accepted but only reach the heuristic paths.
class Exponent {
public:
    explicit Exponent(double p);
    static Exponent inf();

    double value() const { return p_; }
    bool is_inf() const;
    bool is_one() const { return p_ == 1.0; }
    bool is_two() const { return p_ == 2.0; }
    bool exact_catalog() const { return is_one() || is_two() || is_inf(); }

    Exponent dual() const;
    std::string str() const;  // "1", "2", "inf", "2.5"

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.p_ == b.p_; }

private:
    double p_;
};

// Finite-dimensional l_p^m sequence space.
struct SequenceSpace {
    int dim;
    Exponent p;

    SequenceSpace(int dim_, Exponent p_);
    SequenceSpace dual() const { return {dim, p.dual()}; }
};

double vector_norm(const SequenceSpace& space, const Vec& v);
double exponent_norm(const Exponent& p, const Vec& v);

// Hahn-Banach witness: b in the dual unit ball with <y,b> = ||y||, closed
// form per exponent. Ties for p=inf break at the lowest index.
Vec norming_functional(const SequenceSpace& space, const Vec& y);

// Extreme points of the unit ball: ±e_i for p=1, the 2^m sign vectors for
// p=inf (capped). Euclidean and general-p balls have no finite extreme set.
std::vector<Vec> ball_extreme_points(const SequenceSpace& space, int enum_cap = 20);

// sup{||x||_2 : ||x||_p <= 1} and sup{||x||_p : ||x||_2 <= 1} in dimension m.
double p_to_l2_factor(const Exponent& p, int m);
double l2_to_p_factor(const Exponent& p, int m);

}  // namespace snum

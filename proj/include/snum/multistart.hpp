#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "snum/config.hpp"
#include "snum/spaces.hpp"

namespace snum {

// Maximize num(x) / ||x||_X over x != 0 where num is convex, nonnegative and
// positively homogeneous. Subgradient ascent on the normalized iterate with
// backtracking; restarts run in parallel and reduce deterministically
// (best value, ties to the lowest start index).
struct RatioProblem {
    int dim = 0;
    SequenceSpace domain{1, Exponent(2.0)};
    std::function<double(const Vec&)> num_value;
    std::function<Vec(const Vec&)> num_subgrad;
};

struct AscentResult {
    double value = 0.0;
    Vec argmax;
};

AscentResult multistart_ascent(const RatioProblem& prob, const std::vector<Vec>& canonical_starts,
                               std::uint64_t seed, const Config& cfg);

}  // namespace snum

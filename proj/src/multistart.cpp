#include "snum/multistart.hpp"

#include <cmath>

#include "snum/parallel.hpp"
#include "snum/rng.hpp"

namespace snum {

namespace {

// Single ascent run from x0; returns the best normalized iterate.
AscentResult ascend(const RatioProblem& prob, Vec x, const Config& cfg) {
    auto normalize = [&](Vec& v) {
        double n = exponent_norm(prob.domain.p, v);
        if (n > 0.0) v /= n;
        return n;
    };
    if (normalize(x) == 0.0) return {0.0, x};

    double f = prob.num_value(x);
    double step = 0.5;
    for (int it = 0; it < cfg.ascent_iters; ++it) {
        Vec gnum = prob.num_subgrad(x);
        // d/dx [num/den] with den(x) = 1 after normalization
        Vec gden = norming_functional(prob.domain, x);
        Vec grad = gnum - f * gden;
        double gn = grad.norm();
        if (gn < 1e-14) break;

        bool improved = false;
        while (step > 1e-13) {
            Vec trial = x + step * grad;
            if (normalize(trial) == 0.0) break;
            double ft = prob.num_value(trial);
            if (ft > f * (1.0 + 1e-12) || (f == 0.0 && ft > 0.0)) {
                double rel = (ft - f) / (1.0 + ft);
                x = trial;
                f = ft;
                improved = true;
                step *= 2.0;
                if (rel < 1e-10 && it > 2) return {f, x};
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return {f, x};
}

}  // namespace

AscentResult multistart_ascent(const RatioProblem& prob, const std::vector<Vec>& canonical_starts,
                               std::uint64_t seed, const Config& cfg) {
    const int n_canonical = static_cast<int>(canonical_starts.size());
    const int total = n_canonical + std::max(0, cfg.restarts);
    if (total == 0 || prob.dim == 0) return {0.0, Vec::Zero(prob.dim)};

    std::vector<AscentResult> results(total);
    parallel::for_index(total, [&](int r) {
        Vec x0;
        if (r < n_canonical) {
            x0 = canonical_starts[static_cast<std::size_t>(r)];
        } else {
            GaussianStream g(derive_seed(seed, "restart", static_cast<std::uint64_t>(r - n_canonical)));
            x0 = Vec(prob.dim);
            for (int i = 0; i < prob.dim; ++i) x0[i] = g.next();
        }
        results[static_cast<std::size_t>(r)] = ascend(prob, x0, cfg);
    });

    int best = 0;
    for (int r = 1; r < total; ++r) {
        if (results[static_cast<std::size_t>(r)].value > results[static_cast<std::size_t>(best)].value) best = r;
    }
    return results[static_cast<std::size_t>(best)];
}

}  // namespace snum

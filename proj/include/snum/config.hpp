#pragma once

#include <cstdint>

namespace snum {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kPrngName = "mt19937-64/box-muller";

// Knobs shared by the optimization and certification paths. Defaults are
// echoed into every report so runs are reproducible from the report alone.
struct Config {
    std::uint64_t seed = 1;
    int restarts = 64;          // multi-start ascent restarts
    int ascent_iters = 200;     // max iterations per restart
    double tol_exact = 1e-9;    // tightness threshold for "exact" status
    double tol_opt = 1e-6;      // optimization-level comparisons
    double epsilon = 1e-3;      // witness-chain slack parameter
    int enum_cap = 20;          // max dim for 2^m sign-vector enumeration
    int vertex_cap = 6;         // max dim for l1-ball/subspace vertex enumeration
    int mesh_cap = 4;           // max subspace dim for mesh-certified inner minima
    int mesh_steps = 48;        // angular steps per mesh axis
    bool run_ascent = true;     // allow disabling the ascent lower-bound pass
};

}  // namespace snum

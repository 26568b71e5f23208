// Compares the serial reference path against the OpenMP path on the two
// hot kernels: multi-start ascent inside operator norms, and whole-corpus
// profile computation. Both must produce identical numbers; only time may
// differ.
#include <chrono>
#include <cstdio>
#include <vector>

#include "snum/generators.hpp"
#include "snum/parallel.hpp"
#include "snum/snumbers.hpp"
#include "snum/verify.hpp"

using namespace snum;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double bench_ascent(parallel::Mode mode, double* checksum) {
    parallel::set_mode(mode);
    Config cfg;
    cfg.restarts = 256;
    OperatorInstance S = make_gaussian(24, 24, 42, Exponent(3.0), Exponent(1.5));
    auto t0 = Clock::now();
    NormResult r = operator_norm(S, cfg);
    double dt = seconds_since(t0);
    *checksum = r.value.lower;
    return dt;
}

double bench_corpus(parallel::Mode mode, double* checksum) {
    parallel::set_mode(mode);
    Config cfg;
    CorpusSpec spec = default_verification_corpus(7);
    spec.count = 12;
    auto t0 = Clock::now();
    CorpusProfiles profiles = compute_corpus_profiles(spec, cfg);
    double dt = seconds_since(t0);
    double sum = 0.0;
    for (const ProfileBundle& b : profiles.bundles) {
        for (SNumberKind k : kAllKinds)
            for (int n = 1; n <= b.nmax; ++n) sum += b.get(k).at(n).lower;
    }
    *checksum = sum;
    return dt;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", parallel::thread_count());
    std::printf("%-28s %10s %10s %8s  %s\n", "kernel", "serial[s]", "openmp[s]", "speedup", "identical");

    struct Case {
        const char* name;
        double (*fn)(parallel::Mode, double*);
    };
    for (const Case& c : {Case{"multistart operator norm", bench_ascent},
                          Case{"corpus profiles (12 ops)", bench_corpus}}) {
        double sum_serial = 0.0, sum_parallel = 0.0;
        double t_serial = c.fn(parallel::Mode::serial, &sum_serial);
        double t_parallel = c.fn(parallel::Mode::openmp, &sum_parallel);
        std::printf("%-28s %10.3f %10.3f %8.2fx  %s\n", c.name, t_serial, t_parallel,
                    t_serial / t_parallel, sum_serial == sum_parallel ? "yes" : "NO");
    }
    return 0;
}

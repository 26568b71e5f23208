#pragma once

#include <string>
#include <vector>

#include "snum/config.hpp"
#include "snum/generators.hpp"
#include "snum/reports.hpp"

namespace snum {

struct CorpusDescriptor {
    std::uint64_t seed = 0;
    int count = 0;
    int dim_min = 0;
    int dim_max = 0;
    std::vector<std::string> pairs;
    std::string distribution;
};

CorpusDescriptor describe(const CorpusSpec& spec);

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    CorpusDescriptor corpus;
    std::string toolkit_version = kToolkitVersion;

    int count(CheckStatus s) const;
    int failures() const { return count(CheckStatus::fail); }
};

// Profiles for a whole corpus, computed once and shared between suites.
// The per-operator loop is the data-parallel kernel here.
struct CorpusProfiles {
    std::vector<OperatorInstance> ops;
    std::vector<ProfileBundle> bundles;
    std::vector<std::string> faults;  // lattice-fault note per op, empty if clean
};

CorpusProfiles compute_corpus_profiles(const CorpusSpec& spec, const Config& cfg);

struct SuiteOptions {
    bool negative_control = false;     // corrupt a fixture to prove the suite can fail
    std::vector<double> alphas = {0.5, 1.0, 2.0};
    int lemma_nmax = 50;
    int tn_nmax = 8;
    std::vector<double> tn_sigmas = {0.1, 0.5, 0.9};
};

VerificationReport axiom_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                               const Config& cfg, const SuiteOptions& opt = {});
VerificationReport prop1_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                               const Config& cfg, const SuiteOptions& opt = {});
VerificationReport theorem_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                 const Config& cfg, const SuiteOptions& opt = {});
VerificationReport corollary_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                   const Config& cfg, const SuiteOptions& opt = {});
VerificationReport classical_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                   const Config& cfg, const SuiteOptions& opt = {});
VerificationReport tn_suite(const Config& cfg, const SuiteOptions& opt = {});

// Convenience: run one suite by name ("axioms", "prop1", "theorem",
// "corollary", "classical", "tn") or all of them sharing one corpus.
std::vector<VerificationReport> run_suites(const std::string& which, const CorpusSpec& spec,
                                           const Config& cfg, const SuiteOptions& opt = {});

}  // namespace snum

#pragma once

#include <string>
#include <vector>

#include "snum/config.hpp"
#include "snum/operators.hpp"
#include "snum/reports.hpp"
#include "snum/verify.hpp"
#include "snum/witness.hpp"

namespace snum {

// Matrix file format: {"rows": R, "cols": C, "data": [row-major doubles],
// "domain_p": 1|2|number|"inf", "codomain_p": ...}; the exponents default
// to 2. Round-trips are bit-exact for finite doubles.
OperatorInstance read_matrix(const std::string& path);
void write_matrix(const OperatorInstance& op, const std::string& path);
std::string matrix_to_json(const OperatorInstance& op);
OperatorInstance matrix_from_json(const std::string& text);

// Corpus files hold {"operators": [matrix objects...]}.
std::vector<OperatorInstance> read_corpus(const std::string& path);
void write_corpus(const std::vector<OperatorInstance>& ops, const std::string& path);

// Every report carries the schema version, toolkit version and a full echo
// of the run configuration, so a report identifies its run.
std::string config_echo_json(const Config& cfg);

std::string profile_report_json(const ProfileBundle& bundle, const OperatorInstance& op,
                                const Config& cfg);
std::string profile_report_csv(const ProfileBundle& bundle);
std::string witness_report_json(const WitnessChain& chain, const OperatorInstance& op,
                                const Config& cfg);
std::string verification_report_json(const std::vector<VerificationReport>& suites, const Config& cfg);

void write_text(const std::string& text, const std::string& path);
std::string read_text(const std::string& path);

}  // namespace snum

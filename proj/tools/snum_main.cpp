#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "snum/errors.hpp"
#include "snum/generators.hpp"
#include "snum/io.hpp"
#include "snum/parallel.hpp"
#include "snum/snumbers.hpp"
#include "snum/verify.hpp"
#include "snum/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        snum::write_text(text, output);
    }
}

struct GlobalOpts {
    snum::Config cfg;
    std::string output;
    std::string format = "json";
    int threads = -1;  // -1: keep environment setting
};

void add_global_options(CLI::App& cmd, GlobalOpts& g) {
    cmd.add_option("--seed", g.cfg.seed, "PRNG seed (env SNUM_SEED)");
    cmd.add_option("--restarts", g.cfg.restarts, "multi-start ascent restarts")->check(CLI::PositiveNumber);
    cmd.add_option("--epsilon", g.cfg.epsilon, "witness-chain slack")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-exact", g.cfg.tol_exact, "exactness tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--tol-opt", g.cfg.tol_opt, "optimization tolerance")->check(CLI::PositiveNumber);
    cmd.add_option("--enum-cap", g.cfg.enum_cap, "sign-vector enumeration cap");
    cmd.add_option("--threads", g.threads, "thread count (1 = serial; env SNUM_THREADS)");
    cmd.add_option("-o,--output", g.output, "output path (default: stdout)");
    cmd.add_option("--format", g.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

void apply_threads(const GlobalOpts& g) {
    if (g.threads >= 0) snum::parallel::set_threads(g.threads);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace snum;

    CLI::App app{"snum-lab: certified bounds for the six s-number sequences of finite matrices"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env_seed = std::getenv("SNUM_SEED")) g.cfg.seed = std::strtoull(env_seed, nullptr, 10);
    parallel::init_from_env();

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "s-number profile of one operator");
    std::string in_path, kind = "all";
    int nmax = 0;
    add_global_options(*compute, g);
    compute->add_option("-i,--input", in_path, "matrix file")->required();
    compute->add_option("--kind", kind,
                        "all|approximation|bernstein|gelfand|kolmogorov|weyl|hilbert");
    compute->add_option("--nmax", nmax, "indices to compute (0 = min dim)");

    // ---- witness ----
    auto* witness = app.add_subcommand("witness", "build a proof-trace chain");
    std::string variant = "gelfand";
    int chain_n = 0;
    add_global_options(*witness, g);
    witness->add_option("-i,--input", in_path, "matrix file")->required();
    witness->add_option("--variant", variant, "gelfand|kolmogorov")
        ->check(CLI::IsMember({"gelfand", "kolmogorov"}));
    witness->add_option("-n,--n", chain_n, "chain length (0 = min dim)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run inequality verification suites");
    std::string suite;
    int corpus_count = 0;
    std::string corpus_path;
    add_global_options(*verify, g);
    verify->add_option("--suite", suite, "axioms|prop1|theorem|corollary|classical|tn|all")
        ->required()
        ->check(CLI::IsMember({"axioms", "prop1", "theorem", "corollary", "classical", "tn", "all"}));
    verify->add_option("--count", corpus_count, "corpus size override");
    verify->add_option("--corpus", corpus_path, "reuse a corpus file instead of generating");

    // ---- example ----
    auto* example = app.add_subcommand("example", "emit benchmark operators");
    auto* ex_tn = example->add_subcommand("tn", "shift-with-corner matrix on l_2^n");
    int tn_n = 4;
    double tn_sigma = 0.5;
    add_global_options(*ex_tn, g);
    ex_tn->add_option("-n,--n", tn_n, "dimension")->required();
    ex_tn->add_option("--sigma", tn_sigma, "corner value in (0,1)")->required();
    auto* ex_corpus = example->add_subcommand("corpus", "seeded operator corpus");
    int c_count = 100, c_dim_min = 4, c_dim_max = 8;
    std::string c_pairs = "2:2,1:inf,2:inf,1:2", c_dist = "gaussian";
    add_global_options(*ex_corpus, g);
    ex_corpus->add_option("--count", c_count, "number of operators");
    ex_corpus->add_option("--dim-min", c_dim_min, "minimum dimension");
    ex_corpus->add_option("--dim-max", c_dim_max, "maximum dimension");
    ex_corpus->add_option("--pairs", c_pairs, "comma list of domain:codomain exponents");
    ex_corpus->add_option("--distribution", c_dist, "gaussian|mixed");
    example->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        apply_threads(g);

        if (compute->parsed()) {
            OperatorInstance op = read_matrix(in_path);
            ProfileBundle bundle = profile(op, nmax, g.cfg);
            if (g.format == "csv") {
                std::string csv = profile_report_csv(bundle);
                if (kind != "all") {
                    std::istringstream is(csv);
                    std::ostringstream os;
                    std::string line;
                    std::getline(is, line);
                    os << line << '\n';
                    while (std::getline(is, line)) {
                        if (line.rfind(kind + ",", 0) == 0) os << line << '\n';
                    }
                    csv = os.str();
                }
                emit(csv, g.output);
            } else {
                std::string text = profile_report_json(bundle, op, g.cfg);
                if (kind != "all") {
                    if (!kind_from_name(kind)) throw InputError("unknown kind: " + kind);
                    auto j = nlohmann::ordered_json::parse(text);
                    nlohmann::ordered_json kept;
                    kept[kind] = j["kinds"][kind];
                    j["kinds"] = kept;
                    text = j.dump(2) + "\n";
                }
                emit(text, g.output);
            }
            return kExitOk;
        }

        if (witness->parsed()) {
            OperatorInstance op = read_matrix(in_path);
            int n = (chain_n == 0) ? op.min_dim() : chain_n;
            WitnessChain chain = (variant == "gelfand") ? gelfand_chain(op, n, g.cfg.epsilon, g.cfg)
                                                        : kolmogorov_chain(op, n, g.cfg.epsilon, g.cfg);
            emit(witness_report_json(chain, op, g.cfg), g.output);
            for (const CheckRecord& c : validate_chain(chain, op)) {
                if (c.status == CheckStatus::fail) return kExitViolation;
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            CorpusSpec spec = default_verification_corpus(g.cfg.seed);
            if (corpus_count > 0) spec.count = corpus_count;
            SuiteOptions opt;
            std::vector<VerificationReport> reports;
            if (!corpus_path.empty() && suite != "tn") {
                CorpusProfiles corpus;
                corpus.ops = read_corpus(corpus_path);
                spec.count = static_cast<int>(corpus.ops.size());
                corpus.bundles.resize(corpus.ops.size());
                corpus.faults.resize(corpus.ops.size());
                parallel::for_index(static_cast<int>(corpus.ops.size()), [&](int i) {
                    try {
                        corpus.bundles[static_cast<std::size_t>(i)] =
                            profile(corpus.ops[static_cast<std::size_t>(i)], 0, g.cfg);
                    } catch (const std::exception& e) {
                        corpus.faults[static_cast<std::size_t>(i)] = e.what();
                    }
                });
                auto want = [&](const char* name) { return suite == "all" || suite == name; };
                if (want("axioms")) reports.push_back(axiom_suite(corpus, spec, g.cfg, opt));
                if (want("prop1")) reports.push_back(prop1_suite(corpus, spec, g.cfg, opt));
                if (want("theorem")) reports.push_back(theorem_suite(corpus, spec, g.cfg, opt));
                if (want("corollary")) reports.push_back(corollary_suite(corpus, spec, g.cfg, opt));
                if (want("classical")) reports.push_back(classical_suite(corpus, spec, g.cfg, opt));
                if (suite == "all") reports.push_back(tn_suite(g.cfg, opt));
            } else {
                reports = run_suites(suite, spec, g.cfg, opt);
            }
            emit(verification_report_json(reports, g.cfg), g.output);
            int failures = 0;
            for (const VerificationReport& r : reports) failures += r.failures();
            return failures > 0 ? kExitViolation : kExitOk;
        }

        if (ex_tn->parsed()) {
            emit(matrix_to_json(make_t_matrix(tn_n, tn_sigma)), g.output);
            return kExitOk;
        }
        if (ex_corpus->parsed()) {
            CorpusSpec spec;
            spec.seed = g.cfg.seed;
            spec.count = c_count;
            spec.dim_min = c_dim_min;
            spec.dim_max = c_dim_max;
            spec.distribution = c_dist;
            std::istringstream ps(c_pairs);
            std::string tok;
            auto parse_exp = [](const std::string& s) {
                if (s == "inf") return Exponent::inf();
                return Exponent(std::stod(s));
            };
            while (std::getline(ps, tok, ',')) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) throw InputError("pairs must look like 2:2,1:inf");
                spec.pairs.emplace_back(parse_exp(tok.substr(0, colon)), parse_exp(tok.substr(colon + 1)));
            }
            if (g.output.empty()) throw InputError("example corpus needs --output");
            write_corpus(make_corpus(spec), g.output);
            return kExitOk;
        }
        return kExitUsage;
    } catch (const CertifiedViolation& e) {
        std::cerr << "certified violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

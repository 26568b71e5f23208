#include "doctest.h"

#include "snum/verify.hpp"

using namespace snum;

namespace {

// small shared corpus so the whole file stays fast
const CorpusProfiles& small_corpus() {
    static CorpusSpec spec = [] {
        CorpusSpec s = default_verification_corpus(7);
        s.count = 8;
        s.dim_max = 5;
        return s;
    }();
    static CorpusProfiles corpus = compute_corpus_profiles(spec, Config{});
    return corpus;
}

CorpusSpec small_spec() {
    CorpusSpec s = default_verification_corpus(7);
    s.count = 8;
    s.dim_max = 5;
    return s;
}

}  // namespace

TEST_CASE("corpus profiles compute without faults") {
    const CorpusProfiles& corpus = small_corpus();
    for (const std::string& fault : corpus.faults) CHECK(fault.empty());
}

TEST_CASE("axiom suite passes on the default corpus") {
    VerificationReport rep = axiom_suite(small_corpus(), small_spec(), Config{});
    CHECK(rep.failures() == 0);
    CHECK(rep.count(CheckStatus::pass) > 0);
}

TEST_CASE("prop1 suite passes and sees Hilbert equality") {
    VerificationReport rep = prop1_suite(small_corpus(), small_spec(), Config{});
    CHECK(rep.failures() == 0);
    bool saw_equality = false;
    for (const CheckRecord& c : rep.checks) {
        if (c.id.rfind("prop1:hilbert-equality", 0) == 0) saw_equality = true;
    }
    CHECK(saw_equality);
}

TEST_CASE("theorem suite records product bounds with zero violations") {
    VerificationReport rep = theorem_suite(small_corpus(), small_spec(), Config{});
    CHECK(rep.failures() == 0);
    int product_checks = 0;
    for (const CheckRecord& c : rep.checks) {
        if (c.id.find("theorem:product-bound") != std::string::npos &&
            c.status == CheckStatus::pass) {
            ++product_checks;
        }
    }
    CHECK(product_checks > 0);
}

TEST_CASE("corollary suite verifies both bounds and the lemma") {
    VerificationReport rep = corollary_suite(small_corpus(), small_spec(), Config{});
    CHECK(rep.failures() == 0);
    for (const CheckRecord& c : rep.checks) {
        if (c.id.rfind("corollary:lemma", 0) == 0) {
            CHECK(c.status == CheckStatus::pass);
            CHECK(c.margin > 0.0);
        }
    }
}

TEST_CASE("classical suite passes including the sharpness spots") {
    VerificationReport rep = classical_suite(small_corpus(), small_spec(), Config{});
    CHECK(rep.failures() == 0);
    bool sharp = false;
    for (const CheckRecord& c : rep.checks) {
        if (c.id == "classical:weyl-sharpness:t4") {
            sharp = true;
            CHECK(c.status == CheckStatus::pass);
        }
    }
    CHECK(sharp);
}

TEST_CASE("tn suite pins the paper values") {
    SuiteOptions opt;
    opt.tn_nmax = 6;
    VerificationReport rep = tn_suite(Config{}, opt);
    CHECK(rep.failures() == 0);
    CHECK(rep.count(CheckStatus::pass) > 0);
}

TEST_CASE("negative controls make every suite fail") {
    SuiteOptions control;
    control.negative_control = true;
    CHECK(axiom_suite(small_corpus(), small_spec(), Config{}, control).failures() > 0);
    CHECK(prop1_suite(small_corpus(), small_spec(), Config{}, control).failures() > 0);
    CHECK(theorem_suite(small_corpus(), small_spec(), Config{}, control).failures() > 0);
    CHECK(corollary_suite(small_corpus(), small_spec(), Config{}, control).failures() > 0);
    CHECK(classical_suite(small_corpus(), small_spec(), Config{}, control).failures() > 0);
    SuiteOptions tn_control = control;
    tn_control.tn_nmax = 3;
    CHECK(tn_suite(Config{}, tn_control).failures() > 0);
}

TEST_CASE("lemma margins are positive through n = 50") {
    SuiteOptions opt;
    opt.lemma_nmax = 50;
    VerificationReport rep = corollary_suite(small_corpus(), small_spec(), Config{}, opt);
    int lemmas = 0;
    for (const CheckRecord& c : rep.checks) {
        if (c.id.rfind("corollary:lemma", 0) == 0) {
            ++lemmas;
            CHECK(c.margin > 0.0);
        }
    }
    CHECK(lemmas == 3);
}

TEST_CASE("run_suites dispatches by name") {
    CorpusSpec spec = small_spec();
    spec.count = 2;
    auto reports = run_suites("tn", spec, Config{});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == "tn");
    CHECK_THROWS(run_suites("bogus", spec, Config{}));
}

#include "snum/verify.hpp"

#include <cmath>

#include "snum/errors.hpp"
#include "snum/linalg.hpp"
#include "snum/parallel.hpp"
#include "snum/rng.hpp"
#include "snum/snumbers.hpp"
#include "snum/witness.hpp"

namespace snum {

namespace {

void push_bound(std::vector<CheckRecord>& out, const std::string& id, double lhs, double rhs,
                double tol_rel, double tol_abs = 0.0) {
    bool ok = lhs <= rhs * (1.0 + tol_rel) + tol_abs;
    out.push_back({id, {lhs, rhs}, rhs - lhs, ok ? CheckStatus::pass : CheckStatus::fail});
}

void push_skip(std::vector<CheckRecord>& out, const std::string& id, std::vector<double> ops) {
    out.push_back({id, std::move(ops), 0.0, CheckStatus::skipped_uncertified});
}

Mat gaussian_mat(int rows, int cols, std::uint64_t seed) {
    GaussianStream g(seed);
    Mat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = g.next();
    return M;
}

// worst S1 violation margins for one report: returns max over n of
// upper[n] - upper[n-1] and lower[n] - lower[n-1] on certified sides
std::pair<double, double> monotonicity_slack(const SNumberReport& rep) {
    double up = 0.0, lo = 0.0;
    for (int n = 2; n <= rep.nmax(); ++n) {
        const CertifiedValue& prev = rep.at(n - 1);
        const CertifiedValue& cur = rep.at(n);
        if (prev.has_certified_upper() && cur.has_certified_upper()) {
            up = std::max(up, *cur.upper - *prev.upper);
        }
        if (prev.lower_certified && cur.lower_certified) {
            lo = std::max(lo, cur.lower - prev.lower);
        }
    }
    return {up, lo};
}

}  // namespace

CorpusDescriptor describe(const CorpusSpec& spec) {
    CorpusDescriptor d;
    d.seed = spec.seed;
    d.count = spec.count;
    d.dim_min = spec.dim_min;
    d.dim_max = spec.dim_max;
    d.distribution = spec.distribution;
    for (const auto& [dp, cp] : spec.pairs) d.pairs.push_back(dp.str() + "->" + cp.str());
    return d;
}

int VerificationReport::count(CheckStatus s) const {
    int n = 0;
    for (const CheckRecord& c : checks)
        if (c.status == s) ++n;
    return n;
}

CorpusProfiles compute_corpus_profiles(const CorpusSpec& spec, const Config& cfg) {
    CorpusProfiles out;
    out.ops = make_corpus(spec);
    const int n = static_cast<int>(out.ops.size());
    out.bundles.resize(static_cast<std::size_t>(n));
    out.faults.resize(static_cast<std::size_t>(n));
    parallel::for_index(n, [&](int i) {
        try {
            out.bundles[static_cast<std::size_t>(i)] = profile(out.ops[static_cast<std::size_t>(i)], 0, cfg);
        } catch (const std::exception& e) {
            out.faults[static_cast<std::size_t>(i)] = e.what();
        }
    });
    return out;
}

// ----------------------------------------------------------------- axioms ----

VerificationReport axiom_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                               const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "axioms";
    rep.corpus = describe(spec);
    auto& checks = rep.checks;

    // (S1) monotone smoothed bounds + the norm sits inside every s_1 interval
    for (std::size_t i = 0; i < corpus.ops.size(); ++i) {
        if (!corpus.faults[i].empty()) {
            checks.push_back({"s1:profile-fault:op=" + std::to_string(i), {}, 0.0, CheckStatus::fail});
            continue;
        }
        const ProfileBundle& b = corpus.bundles[i];
        for (SNumberKind k : kAllKinds) {
            auto [up, lo] = monotonicity_slack(b.get(k));
            std::string id = "s1:monotone:op=" + std::to_string(i) + ":" + kind_name(k);
            double slack = std::max(up, lo);
            checks.push_back({id, {slack}, -slack, slack <= 1e-12 ? CheckStatus::pass : CheckStatus::fail});

            const CertifiedValue& s1 = b.get(k).at(1);
            std::string cid = "s1:norm-in-interval:op=" + std::to_string(i) + ":" + kind_name(k);
            if (s1.lower_certified && b.norm.value.has_certified_upper()) {
                push_bound(checks, cid, s1.lower, *b.norm.value.upper, 1e-9);
            } else {
                push_skip(checks, cid, {s1.lower});
            }
        }
    }

    // (S4) the identity on l_2^n scores 1 everywhere
    for (int n : {2, 5, 8}) {
        ProfileBundle b = profile(make_identity_embedding(n, Exponent(2.0), Exponent(2.0)), 0, cfg);
        double dev = 0.0;
        for (SNumberKind k : kAllKinds) {
            for (int j = 1; j <= n; ++j) {
                dev = std::max(dev, std::abs(b.get(k).at(j).lower - 1.0));
                if (b.get(k).at(j).upper) dev = std::max(dev, std::abs(*b.get(k).at(j).upper - 1.0));
            }
        }
        checks.push_back({"s4:identity-l2-" + std::to_string(n), {dev}, 1e-9 - dev,
                          dev <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
    }

    // (S5) exact zeros beyond the rank
    {
        std::vector<std::pair<Exponent, Exponent>> pairs = {{Exponent(2.0), Exponent(2.0)},
                                                            {Exponent(1.0), Exponent::inf()}};
        int idx = 0;
        for (const auto& [dp, cp] : pairs) {
            OperatorInstance S = make_rank_deficient(5, 2, derive_seed(cfg.seed, "s5", static_cast<std::uint64_t>(idx)), dp, cp);
            ProfileBundle b = profile(S, 0, cfg);
            bool ok = true;
            for (SNumberKind k : kAllKinds) {
                for (int j = 3; j <= 5; ++j) {
                    const CertifiedValue& v = b.get(k).at(j);
                    ok = ok && v.lower == 0.0 && v.upper.has_value() && *v.upper == 0.0;
                }
            }
            checks.push_back({"s5:rank2-zeros:" + dp.str() + "->" + cp.str(), {},
                              0.0, ok ? CheckStatus::pass : CheckStatus::fail});
            ++idx;
        }
    }

    // (S2)/(S3) and the Remark-1 strengthenings on Hilbert-exact instances
    for (int t = 0; t < 20; ++t) {
        const int m = 5;
        Mat S = gaussian_mat(m, m, derive_seed(cfg.seed, "s2-s", static_cast<std::uint64_t>(t)));
        Mat T = gaussian_mat(m, m, derive_seed(cfg.seed, "s2-t", static_cast<std::uint64_t>(t)));
        Vec ss = svd(S).sigma, st = svd(T).sigma, ssum = svd(Mat(S + T)).sigma,
            sprod = svd(Mat(S * T)).sigma;

        double worst_s2 = 0.0;
        for (int n = 0; n < m; ++n) worst_s2 = std::max(worst_s2, ssum[n] - (ss[n] + st[0]));
        checks.push_back({"s2:additive-norm:pair=" + std::to_string(t), {worst_s2}, -worst_s2,
                          worst_s2 <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});

        Mat A = gaussian_mat(m, m, derive_seed(cfg.seed, "s3-a", static_cast<std::uint64_t>(t)));
        Mat B = gaussian_mat(m, m, derive_seed(cfg.seed, "s3-b", static_cast<std::uint64_t>(t)));
        Vec scomp = svd(Mat(B * S * A)).sigma;
        double na = svd(A).sigma[0], nb = svd(B).sigma[0];
        double worst_s3 = 0.0;
        for (int n = 0; n < m; ++n) worst_s3 = std::max(worst_s3, scomp[n] - nb * ss[n] * na);
        checks.push_back({"s3:composition:pair=" + std::to_string(t), {worst_s3}, -worst_s3,
                          worst_s3 <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});

        double worst_add = 0.0, worst_mul = 0.0;
        for (int mm = 1; mm <= m; ++mm) {
            for (int nn = 1; mm + nn - 1 <= m; ++nn) {
                int idx = mm + nn - 2;
                worst_add = std::max(worst_add, ssum[idx] - (ss[mm - 1] + st[nn - 1]));
                worst_mul = std::max(worst_mul, sprod[idx] - ss[mm - 1] * st[nn - 1]);
            }
        }
        checks.push_back({"s2p:additivity:pair=" + std::to_string(t), {worst_add}, -worst_add,
                          worst_add <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
        checks.push_back({"s3p:multiplicativity:pair=" + std::to_string(t), {worst_mul}, -worst_mul,
                          worst_mul <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
    }

    if (opt.negative_control && !corpus.bundles.empty() && corpus.faults[0].empty()) {
        // corrupted fixture: an upward step in the smoothed uppers must fail
        SNumberReport bad = corpus.bundles[0].get(SNumberKind::approximation);
        if (bad.nmax() >= 2 && bad.at(1).has_certified_upper()) {
            bad.at(2).upper = *bad.at(1).upper * 2.0 + 1.0;
            bad.at(2).upper_certified = true;
            auto [up, lo] = monotonicity_slack(bad);
            double slack = std::max(up, lo);
            checks.push_back({"s1:negative-control", {slack}, -slack,
                              slack <= 1e-12 ? CheckStatus::pass : CheckStatus::fail});
        }
    }
    return rep;
}

// ------------------------------------------------------------------ prop1 ----

VerificationReport prop1_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                               const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "prop1";
    rep.corpus = describe(spec);
    auto& checks = rep.checks;

    for (std::size_t i = 0; i < corpus.ops.size(); ++i) {
        if (!corpus.faults[i].empty()) {
            checks.push_back({"prop1:profile-fault:op=" + std::to_string(i), {}, 0.0, CheckStatus::fail});
            continue;
        }
        const ProfileBundle& b = corpus.bundles[i];
        const SNumberReport& h = b.get(SNumberKind::hilbert);
        for (int n = 1; n <= b.nmax; ++n) {
            if (!h.at(n).lower_certified) continue;
            double min_upper = std::numeric_limits<double>::infinity();
            for (SNumberKind k : {SNumberKind::approximation, SNumberKind::bernstein,
                                  SNumberKind::gelfand, SNumberKind::kolmogorov, SNumberKind::weyl}) {
                const CertifiedValue& v = b.get(k).at(n);
                if (v.has_certified_upper()) min_upper = std::min(min_upper, *v.upper);
            }
            std::string id = "prop1:no-crossing:op=" + std::to_string(i) + ":n=" + std::to_string(n);
            if (std::isfinite(min_upper)) {
                push_bound(checks, id, h.at(n).lower, min_upper, 0.0, 1e-9);
            } else {
                push_skip(checks, id, {h.at(n).lower});
            }
        }
        if (b.get(SNumberKind::hilbert).nmax() > 0 && corpus.ops[i].hilbert_pair()) {
            Vec sigma = svd(corpus.ops[i].matrix).sigma;
            double dev = 0.0;
            for (SNumberKind k : kAllKinds) {
                for (int n = 1; n <= b.nmax; ++n) {
                    double s = (n <= sigma.size()) ? sigma[n - 1] : 0.0;
                    dev = std::max(dev, std::abs(b.get(k).at(n).lower - s));
                    if (b.get(k).at(n).upper) dev = std::max(dev, std::abs(*b.get(k).at(n).upper - s));
                }
            }
            checks.push_back({"prop1:hilbert-equality:op=" + std::to_string(i), {dev}, 1e-6 - dev,
                              dev <= 1e-6 ? CheckStatus::pass : CheckStatus::fail});
        }
    }

    if (opt.negative_control && !corpus.bundles.empty() && corpus.faults[0].empty()) {
        ProfileBundle bad = corpus.bundles[0];
        auto& hv = bad.get(SNumberKind::hilbert).at(1);
        const auto& av = bad.get(SNumberKind::approximation).at(1);
        hv.lower = (av.upper ? *av.upper : 1.0) * 2.0 + 1.0;
        hv.lower_certified = true;
        double min_upper = av.upper ? *av.upper : 1.0;
        push_bound(checks, "prop1:negative-control", hv.lower, min_upper, 0.0, 1e-9);
    }
    return rep;
}

// ---------------------------------------------------------------- theorem ----

VerificationReport theorem_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                 const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "theorem";
    rep.corpus = describe(spec);
    auto& checks = rep.checks;

    const int n_ops = static_cast<int>(corpus.ops.size());
    std::vector<std::vector<CheckRecord>> per_op(static_cast<std::size_t>(n_ops));
    parallel::for_index(n_ops, [&](int i) {
        auto& local = per_op[static_cast<std::size_t>(i)];
        if (!corpus.faults[static_cast<std::size_t>(i)].empty()) {
            local.push_back({"theorem:profile-fault:op=" + std::to_string(i), {}, 0.0, CheckStatus::fail});
            return;
        }
        const OperatorInstance& S = corpus.ops[static_cast<std::size_t>(i)];
        ProfileBundle bundle = corpus.bundles[static_cast<std::size_t>(i)];
        try {
            std::vector<CheckRecord> recs = theorem_check(S, S.min_dim(), cfg.epsilon, bundle, cfg);
            for (CheckRecord& r : recs) {
                r.id = "op=" + std::to_string(i) + ":" + r.id;
                local.push_back(std::move(r));
            }
        } catch (const CertifiedViolation& e) {
            local.push_back({"theorem:certified-violation:op=" + std::to_string(i), {}, 0.0, CheckStatus::fail});
        }
    });
    for (auto& local : per_op)
        for (CheckRecord& r : local) checks.push_back(std::move(r));

    if (opt.negative_control && !corpus.bundles.empty() && corpus.faults[0].empty()) {
        ProfileBundle bad = corpus.bundles[0];
        auto& cv = bad.get(SNumberKind::gelfand).at(bad.nmax);
        cv.lower = 1e6;
        cv.lower_certified = true;
        CheckRecord rec = product_bound_record(bad, bad.nmax);
        rec.id = "theorem:negative-control";
        checks.push_back(std::move(rec));
    }
    return rep;
}

// --------------------------------------------------------------- corollary ----

VerificationReport corollary_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                   const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "corollary";
    rep.corpus = describe(spec);
    auto& checks = rep.checks;

    for (double alpha : opt.alphas) {
        const double ea = std::exp(alpha);
        for (std::size_t i = 0; i < corpus.ops.size(); ++i) {
            if (!corpus.faults[i].empty()) continue;
            const ProfileBundle& b = corpus.bundles[i];
            const SNumberReport& h = b.get(SNumberKind::hilbert);

            double worst_c = -std::numeric_limits<double>::infinity(), worst_a = worst_c;
            std::vector<double> ops_c, ops_a;
            bool any_skip = false;
            for (int n = 1; n <= b.nmax; ++n) {
                double sup = 0.0;
                bool ok = true;
                for (int k = 1; k <= n; ++k) {
                    if (!h.at(k).has_certified_upper()) {
                        ok = false;
                        break;
                    }
                    sup = std::max(sup, std::pow(k, alpha) * *h.at(k).upper);
                }
                if (!ok) {
                    any_skip = true;
                    continue;
                }
                double rhs_c = ea * std::pow(n, 1.0 - alpha) * sup;
                double rhs_a = 2.0 * ea * std::pow(n, 1.5 - alpha) * sup;
                const CertifiedValue& cv = b.get(SNumberKind::gelfand).at(n);
                const CertifiedValue& av = b.get(SNumberKind::approximation).at(n);
                if (cv.lower_certified && cv.lower - rhs_c > worst_c) {
                    worst_c = cv.lower - rhs_c;
                    ops_c = {cv.lower, rhs_c};
                }
                if (av.lower_certified && av.lower - rhs_a > worst_a) {
                    worst_a = av.lower - rhs_a;
                    ops_a = {av.lower, rhs_a};
                }
            }
            std::string base = ":alpha=" + std::to_string(alpha) + ":op=" + std::to_string(i);
            if (!ops_c.empty()) {
                push_bound(checks, "corollary:c-bound" + base, ops_c[0], ops_c[1], 1e-6);
            } else if (any_skip) {
                push_skip(checks, "corollary:c-bound" + base, {});
            }
            if (!ops_a.empty()) {
                push_bound(checks, "corollary:a-bound" + base, ops_a[0], ops_a[1], 1e-6);
            } else if (any_skip) {
                push_skip(checks, "corollary:a-bound" + base, {});
            }
        }

        // arithmetic lemma n^alpha <= e^alpha (n!)^{alpha/n}
        double min_margin = std::numeric_limits<double>::infinity();
        int arg = 1;
        for (int n = 1; n <= opt.lemma_nmax; ++n) {
            double lhs = std::pow(n, alpha);
            double rhs = std::exp(alpha + alpha / n * std::lgamma(n + 1.0));
            if (rhs - lhs < min_margin) {
                min_margin = rhs - lhs;
                arg = n;
            }
        }
        checks.push_back({"corollary:lemma:alpha=" + std::to_string(alpha),
                          {static_cast<double>(arg), min_margin},
                          min_margin,
                          min_margin > 0.0 ? CheckStatus::pass : CheckStatus::fail});
    }

    if (opt.negative_control && !corpus.bundles.empty() && corpus.faults[0].empty()) {
        push_bound(checks, "corollary:negative-control", 10.0, 1.0, 1e-6);
    }
    return rep;
}

// --------------------------------------------------------------- classical ----

VerificationReport classical_suite(const CorpusProfiles& corpus, const CorpusSpec& spec,
                                   const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "classical";
    rep.corpus = describe(spec);
    auto& checks = rep.checks;

    // a_n <= (1 + sqrt(n)) c_n on certified pairs
    for (std::size_t i = 0; i < corpus.ops.size(); ++i) {
        if (!corpus.faults[i].empty()) continue;
        const ProfileBundle& b = corpus.bundles[i];
        double worst = -std::numeric_limits<double>::infinity();
        std::vector<double> ops;
        for (int n = 1; n <= b.nmax; ++n) {
            const CertifiedValue& av = b.get(SNumberKind::approximation).at(n);
            const CertifiedValue& cv = b.get(SNumberKind::gelfand).at(n);
            if (!av.lower_certified || !cv.has_certified_upper()) continue;
            double rhs = (1.0 + std::sqrt(n)) * *cv.upper;
            if (av.lower - rhs > worst) {
                worst = av.lower - rhs;
                ops = {av.lower, rhs};
            }
        }
        std::string id = "classical:a-vs-c:op=" + std::to_string(i);
        if (!ops.empty()) {
            push_bound(checks, id, ops[0], ops[1], 1e-9);
        } else {
            push_skip(checks, id, {});
        }

        // Mityagin-Henkin: checkable only where both sides are exact
        const CertifiedValue& d1 = b.get(SNumberKind::kolmogorov).at(1);
        if (corpus.ops[i].hilbert_pair()) {
            double worst_mh = 0.0;
            for (int n = 1; n <= b.nmax; ++n) {
                const auto& dv = b.get(SNumberKind::kolmogorov).at(n);
                const auto& bv = b.get(SNumberKind::bernstein).at(n);
                worst_mh = std::max(worst_mh, dv.lower - n * n * (bv.upper ? *bv.upper : 0.0));
            }
            checks.push_back({"classical:mityagin-henkin:op=" + std::to_string(i), {worst_mh}, -worst_mh,
                              worst_mh <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
        } else {
            push_skip(checks, "classical:mityagin-henkin:op=" + std::to_string(i), {d1.lower});
        }
    }

    // Weyl's inequality and its eigenvalue corollary on square l_2 operators
    for (int t = 0; t < 100; ++t) {
        GaussianStream g(derive_seed(cfg.seed, "weyl-dim", static_cast<std::uint64_t>(t)));
        int m = 4 + static_cast<int>(g.uniform() * 5) % 5;
        Mat M = gaussian_mat(m, m, derive_seed(cfg.seed, "weyl-op", static_cast<std::uint64_t>(t)));
        Eigen::VectorXcd lam = eigenvalues(M);
        Vec sig = svd(M).sigma;
        double worst_prod = 0.0, worst_cor = 0.0;
        double lam_prod = 1.0, sig_prod = 1.0;
        for (int n = 0; n < m; ++n) {
            lam_prod *= std::abs(lam[n]);
            sig_prod *= sig[n];
            worst_prod = std::max(worst_prod, lam_prod - sig_prod * (1.0 + 1e-8));
            double rhs = std::pow(sig[0], 1.0 - 1.0 / (n + 1.0)) * std::pow(sig[n], 1.0 / (n + 1.0));
            worst_cor = std::max(worst_cor, std::abs(lam[n]) - rhs * (1.0 + 1e-8));
        }
        checks.push_back({"classical:weyl-product:op=" + std::to_string(t), {worst_prod}, -worst_prod,
                          worst_prod <= 0.0 ? CheckStatus::pass : CheckStatus::fail});
        checks.push_back({"classical:weyl-eigen-corollary:op=" + std::to_string(t), {worst_cor}, -worst_cor,
                          worst_cor <= 0.0 ? CheckStatus::pass : CheckStatus::fail});
    }

    // sharpness: T_4 with sigma = 0.5 attains equality in both
    {
        Mat T = make_t_matrix(4, 0.5).matrix;
        Eigen::VectorXcd lam = eigenvalues(T);
        Vec sig = svd(T).sigma;
        double lam_prod = 1.0, sig_prod = 1.0;
        for (int n = 0; n < 4; ++n) {
            lam_prod *= std::abs(lam[n]);
            sig_prod *= sig[n];
        }
        double dev = std::abs(lam_prod - sig_prod);
        checks.push_back({"classical:weyl-sharpness:t4", {lam_prod, sig_prod}, 1e-9 - dev,
                          dev <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
        double lhs = std::abs(lam[3]);
        double rhs = std::pow(sig[0], 0.75) * std::pow(sig[3], 0.25);
        double dev2 = std::abs(lhs - rhs);
        checks.push_back({"classical:eigen-corollary-sharpness:t4", {lhs, rhs}, 1e-9 - dev2,
                          dev2 <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
    }

    if (opt.negative_control) {
        push_bound(checks, "classical:negative-control", 10.0, 1.0, 1e-9);
    }
    return rep;
}

// --------------------------------------------------------------------- tn ----

VerificationReport tn_suite(const Config& cfg, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "tn";
    auto& checks = rep.checks;

    for (int n = 2; n <= opt.tn_nmax; ++n) {
        for (double sigma : opt.tn_sigmas) {
            Mat T = make_t_matrix(n, sigma).matrix;
            if (opt.negative_control && n == 2) T(0, 0) += 0.05;
            std::string base = ":n=" + std::to_string(n) + ":sigma=" + std::to_string(sigma);

            Vec sig = svd(T).sigma;
            double dev_sig = std::abs(sig[n - 1] - sigma);
            for (int k = 0; k + 1 < n; ++k) dev_sig = std::max(dev_sig, std::abs(sig[k] - 1.0));
            checks.push_back({"tn:singular-values" + base, {dev_sig}, 1e-9 - dev_sig,
                              dev_sig <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});

            Eigen::VectorXcd lam = eigenvalues(T);
            double want = std::pow(sigma, 1.0 / n);
            double dev_lam = 0.0;
            for (int k = 0; k < n; ++k) dev_lam = std::max(dev_lam, std::abs(std::abs(lam[k]) - want));
            checks.push_back({"tn:eigen-moduli" + base, {dev_lam}, 1e-7 - dev_lam,
                              dev_lam <= 1e-7 ? CheckStatus::pass : CheckStatus::fail});

            Mat P = Mat::Identity(n, n);
            for (int k = 0; k < n; ++k) P = P * T;
            double dev_pow = (P - sigma * Mat::Identity(n, n)).cwiseAbs().maxCoeff();
            checks.push_back({"tn:nth-power" + base, {dev_pow}, 1e-10 - dev_pow,
                              dev_pow <= 1e-10 ? CheckStatus::pass : CheckStatus::fail});

            double lam_prod = 1.0, sig_prod = 1.0;
            for (int k = 0; k < n; ++k) {
                lam_prod *= std::abs(lam[k]);
                sig_prod *= sig[k];
            }
            double dev_weyl = std::abs(lam_prod - sig_prod);
            checks.push_back({"tn:weyl-equality" + base, {lam_prod, sig_prod}, 1e-9 - dev_weyl,
                              dev_weyl <= 1e-9 ? CheckStatus::pass : CheckStatus::fail});
        }
    }

    // the domain guard is part of the contract
    bool threw = false;
    try {
        make_t_matrix(3, 1.0);
    } catch (const InputError&) {
        threw = true;
    }
    checks.push_back({"tn:sigma-domain-guard", {}, 0.0, threw ? CheckStatus::pass : CheckStatus::fail});

    (void)cfg;
    return rep;
}

// -------------------------------------------------------------------- all ----

std::vector<VerificationReport> run_suites(const std::string& which, const CorpusSpec& spec,
                                           const Config& cfg, const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    if (which == "tn") {
        out.push_back(tn_suite(cfg, opt));
        return out;
    }

    CorpusProfiles corpus = compute_corpus_profiles(spec, cfg);
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("axioms")) out.push_back(axiom_suite(corpus, spec, cfg, opt));
    if (want("prop1")) out.push_back(prop1_suite(corpus, spec, cfg, opt));
    if (want("theorem")) out.push_back(theorem_suite(corpus, spec, cfg, opt));
    if (want("corollary")) out.push_back(corollary_suite(corpus, spec, cfg, opt));
    if (want("classical")) out.push_back(classical_suite(corpus, spec, cfg, opt));
    if (which == "all") out.push_back(tn_suite(cfg, opt));
    if (out.empty()) throw InputError("unknown suite: " + which);
    return out;
}

}  // namespace snum

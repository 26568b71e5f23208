#include "snum/witness.hpp"

#include <cmath>

#include "snum/errors.hpp"
#include "snum/linalg.hpp"
#include "snum/snumbers.hpp"

namespace snum {

namespace {

constexpr double kTriangTol = 1e-10;
constexpr double kBallTol = 1e-12;
constexpr double kFactorTol = 1e-9;
constexpr double kDetDiagTol = 1e-12;
constexpr double kDetSigmaTol = 1e-8;

// Re-normalize an inner maximizer into the closed unit ball.
Vec into_ball(const SequenceSpace& space, Vec x) {
    double n = exponent_norm(space.p, x);
    if (n > 1.0) x /= n;
    return x;
}

void finalize_chain(WitnessChain& chain, const OperatorInstance& S, const Config& cfg) {
    const int len = chain.length();
    chain.A = Mat(S.domain.dim, len);
    chain.B = Mat(len, S.codomain.dim);
    for (int k = 0; k < len; ++k) {
        chain.A.col(k) = chain.links[static_cast<std::size_t>(k)].x;
        chain.B.row(k) = chain.links[static_cast<std::size_t>(k)].b.transpose();
    }
    chain.Sn = chain.B * S.matrix * chain.A;
    if (len == 0) {
        chain.normA = chain.normB = 0.0;
        chain.det = 1.0;
        return;
    }
    double root_n = std::sqrt(static_cast<double>(len));
    chain.normA = std::min(root_n, l2_to_space_norm_upper(chain.A, S.domain, cfg));
    chain.normB = std::min(root_n, space_to_l2_norm_upper(chain.B, S.codomain, cfg));
    chain.det = determinant(chain.Sn);
    Vec sigma = svd(chain.Sn).sigma;
    chain.hk_lowers.resize(static_cast<std::size_t>(len));
    double denom = chain.normA * chain.normB;
    for (int k = 0; k < len; ++k) {
        chain.hk_lowers[static_cast<std::size_t>(k)] = (denom > 0.0) ? sigma[k] / denom : 0.0;
    }
}

}  // namespace

const char* chain_variant_name(ChainVariant v) {
    return v == ChainVariant::gelfand ? "gelfand" : "kolmogorov";
}

WitnessChain gelfand_chain(const OperatorInstance& S, int n, double epsilon, const Config& cfg) {
    if (n < 1 || n > S.min_dim()) throw InputError("chain length must lie in [1, min(dim)]");
    if (epsilon <= 0.0) throw InputError("epsilon must be positive");

    WitnessChain chain;
    chain.variant = ChainVariant::gelfand;
    chain.epsilon = epsilon;

    double scale = svd(S.matrix).sigma[0];
    for (int k = 1; k <= n; ++k) {
        // M_k = null space of the functionals x -> <Sx, b_j>, j < k
        Mat F(k - 1, S.domain.dim);
        for (int j = 0; j < k - 1; ++j) {
            F.row(j) = (S.matrix.transpose() * chain.links[static_cast<std::size_t>(j)].b).transpose();
        }
        Mat M = null_space_basis(F);
        if (M.cols() == 0) {
            chain.truncated = true;
            chain.truncation_note = "no admissible subspace at step " + std::to_string(k);
            break;
        }
        NormResult r = restricted_norm(S, M, cfg, /*want_lower=*/true);
        Vec x = into_ball(S.domain, r.maximizer);
        Vec y = S.matrix * x;
        double vy = exponent_norm(S.codomain.p, y);
        if (vy <= 1e-13 * (1.0 + scale)) {
            chain.truncated = true;
            chain.truncation_note = "operator vanishes on the admissible subspace at step " + std::to_string(k);
            break;
        }
        Vec b = norming_functional(S.codomain, y);
        chain.links.push_back({x, b, y.dot(b), r.value.status(cfg.tol_exact) == Status::exact});
    }
    finalize_chain(chain, S, cfg);
    return chain;
}

WitnessChain kolmogorov_chain(const OperatorInstance& S, int n, double epsilon, const Config& cfg) {
    if (n < 1 || n > S.min_dim()) throw InputError("chain length must lie in [1, min(dim)]");
    if (epsilon <= 0.0) throw InputError("epsilon must be positive");

    WitnessChain chain;
    chain.variant = ChainVariant::kolmogorov;
    chain.epsilon = epsilon;

    double scale = svd(S.matrix).sigma[0];
    Mat span(S.codomain.dim, 0);
    for (int k = 1; k <= n; ++k) {
        NormResult r = quotient_norm(S, span, cfg, /*want_lower=*/true);
        Vec x = into_ball(S.domain, r.maximizer);
        Vec y = S.matrix * x;
        SubspaceDistance d = distance_to_subspace(y, span, S.codomain);
        if (d.value <= 1e-13 * (1.0 + scale)) {
            chain.truncated = true;
            chain.truncation_note = "image falls into the accumulated span at step " + std::to_string(k);
            break;
        }
        // the LP/projection dual realizes the Hahn-Banach choice: it
        // vanishes on span{Sx_j : j < k} and norms the quotient residual
        Vec b = d.dual;
        bool exact = (r.value.status(cfg.tol_exact) == Status::exact) && d.exact;
        chain.links.push_back({x, b, y.dot(b), exact});
        Mat next(S.codomain.dim, span.cols() + 1);
        next << span, y;
        span = next;
    }
    finalize_chain(chain, S, cfg);
    return chain;
}

std::vector<CheckRecord> validate_chain(const WitnessChain& chain, const OperatorInstance& S) {
    std::vector<CheckRecord> checks;
    const int len = chain.length();
    const std::string prefix = std::string("chain:") + chain_variant_name(chain.variant) + ":";
    auto push = [&](const std::string& id, double lhs, double rhs, bool ok) {
        checks.push_back({prefix + id, {lhs, rhs}, rhs - lhs, ok ? CheckStatus::pass : CheckStatus::fail});
    };
    if (len == 0) return checks;

    // triangularity: the Gelfand chain vanishes above the diagonal of
    // S_n = B S A, the Kolmogorov chain below it
    double off = 0.0;
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < len; ++j) {
            bool must_vanish = (chain.variant == ChainVariant::gelfand) ? (i < j) : (i > j);
            if (must_vanish) off = std::max(off, std::abs(chain.Sn(i, j)));
        }
    }
    double scale = 1.0 + chain.Sn.cwiseAbs().maxCoeff();
    push("triangularity", off, kTriangTol * scale, off <= kTriangTol * scale);

    double worst_x = 0.0, worst_b = 0.0;
    SequenceSpace dual = S.codomain.dual();
    for (const ChainLink& link : chain.links) {
        worst_x = std::max(worst_x, vector_norm(S.domain, link.x));
        worst_b = std::max(worst_b, vector_norm(dual, link.b));
    }
    push("x-in-ball", worst_x, 1.0 + kBallTol, worst_x <= 1.0 + kBallTol);
    push("b-in-dual-ball", worst_b, 1.0 + kBallTol, worst_b <= 1.0 + kBallTol);

    double root_n = std::sqrt(static_cast<double>(len));
    push("normA", chain.normA, root_n * (1.0 + kFactorTol), chain.normA <= root_n * (1.0 + kFactorTol));
    push("normB", chain.normB, root_n * (1.0 + kFactorTol), chain.normB <= root_n * (1.0 + kFactorTol));

    double prod_v = 1.0;
    for (const ChainLink& link : chain.links) prod_v *= link.value;
    double rel_diag = std::abs(chain.det - prod_v) / std::max(1e-300, std::abs(prod_v));
    push("det-vs-diagonal", rel_diag, kDetDiagTol, rel_diag <= kDetDiagTol);

    Vec sigma = svd(chain.Sn).sigma;
    double prod_sigma = 1.0;
    for (int k = 0; k < len; ++k) prod_sigma *= sigma[k];
    double rel_sigma = std::abs(std::abs(chain.det) - prod_sigma) / std::max(1e-300, prod_sigma);
    push("det-vs-singular-product", rel_sigma, kDetSigmaTol, rel_sigma <= kDetSigmaTol);

    return checks;
}

CheckRecord product_bound_record(const ProfileBundle& bundle, int nn) {
    const auto& c = bundle.get(SNumberKind::gelfand);
    const auto& d = bundle.get(SNumberKind::kolmogorov);
    const auto& h = bundle.get(SNumberKind::hilbert);
    std::string id = "theorem:product-bound:n=" + std::to_string(nn);

    double lhs = 0.0;
    bool lhs_cert = false;
    if (c.at(nn).lower_certified) {
        lhs = std::max(lhs, c.at(nn).lower);
        lhs_cert = true;
    }
    if (d.at(nn).lower_certified) {
        lhs = std::max(lhs, d.at(nn).lower);
        lhs_cert = true;
    }
    bool uppers_ok = true;
    double log_prod = 0.0;
    for (int k = 1; k <= nn; ++k) {
        const CertifiedValue& hv = h.at(k);
        if (!hv.has_certified_upper()) {
            uppers_ok = false;
            break;
        }
        log_prod += std::log(std::max(*hv.upper, 1e-300));
    }
    if (!lhs_cert || !uppers_ok) return {id, {lhs}, 0.0, CheckStatus::skipped_uncertified};

    double rhs = static_cast<double>(nn) * std::exp(log_prod / nn);
    bool ok = lhs <= rhs * (1.0 + 1e-6);
    return {id, {lhs, rhs}, rhs - lhs, ok ? CheckStatus::pass : CheckStatus::fail};
}

std::vector<CheckRecord> theorem_check(const OperatorInstance& S, int n, double epsilon,
                                       ProfileBundle& bundle, const Config& cfg) {
    std::vector<CheckRecord> checks;
    auto& hilbert = bundle.get(SNumberKind::hilbert);

    for (ChainVariant variant : {ChainVariant::gelfand, ChainVariant::kolmogorov}) {
        WitnessChain chain = (variant == ChainVariant::gelfand) ? gelfand_chain(S, n, epsilon, cfg)
                                                                : kolmogorov_chain(S, n, epsilon, cfg);
        for (CheckRecord& c : validate_chain(chain, S)) checks.push_back(std::move(c));

        // (i) register the chain's Hilbert lower bounds
        for (int k = 1; k <= chain.length() && k <= bundle.nmax; ++k) {
            hilbert.at(k).merge_lower(chain.hk_lowers[static_cast<std::size_t>(k - 1)], true,
                                      std::string("witness-chain:") + chain_variant_name(variant));
        }

        // (ii) self-consistency: sigma_k(Sn) <= normA * normB * (h_k lower + tol)
        Vec sigma = svd(chain.Sn).sigma;
        for (int k = 1; k <= chain.length() && k <= bundle.nmax; ++k) {
            double lhs = sigma[k - 1];
            double rhs = chain.normA * chain.normB * (hilbert.at(k).lower + 1e-9);
            checks.push_back({std::string("chain:") + chain_variant_name(variant) + ":sigma-vs-hlower:k=" + std::to_string(k),
                              {lhs, rhs},
                              rhs - lhs,
                              lhs <= rhs ? CheckStatus::pass : CheckStatus::fail});
        }
    }

    // registration must not contradict the lattice
    propagate_lattice(bundle);

    // (iii) falsification: max(c_n, d_n) <= n (prod_k h_k)^{1/n} on intervals
    for (int nn = 1; nn <= std::min(n, bundle.nmax); ++nn) {
        CheckRecord rec = product_bound_record(bundle, nn);
        bool failed = rec.status == CheckStatus::fail;
        checks.push_back(std::move(rec));
        if (failed) {
            throw CertifiedViolation("theorem falsified at n=" + std::to_string(nn));
        }
    }

    // (iv) exact-value form on Hilbert pairs: sigma_n <= n (prod sigma_k)^{1/n}
    if (S.hilbert_pair()) {
        Vec sigma = svd(S.matrix).sigma;
        for (int nn = 1; nn <= std::min<int>(n, static_cast<int>(sigma.size())); ++nn) {
            double prod = 1.0;
            for (int k = 0; k < nn; ++k) prod *= sigma[k];
            double rhs = static_cast<double>(nn) * std::pow(prod, 1.0 / nn);
            double lhs = sigma[nn - 1];
            checks.push_back({"theorem:hilbert-exact:n=" + std::to_string(nn),
                              {lhs, rhs},
                              rhs - lhs,
                              lhs <= rhs * (1.0 + 1e-12) ? CheckStatus::pass : CheckStatus::fail});
        }
    }
    return checks;
}

}  // namespace snum

#include "snum/snumbers.hpp"

#include <cmath>
#include <vector>

#include "snum/errors.hpp"
#include "snum/linalg.hpp"
#include "snum/parallel.hpp"
#include "snum/rng.hpp"
#include "snum/witness.hpp"

namespace snum {

namespace {

Config no_ascent(Config cfg) {
    cfg.run_ascent = false;
    return cfg;
}

SNumberReport blank_report(SNumberKind kind, int nmax, int rank) {
    SNumberReport rep;
    rep.kind = kind;
    rep.values.resize(static_cast<std::size_t>(nmax));
    rep.witnesses.resize(static_cast<std::size_t>(nmax));
    for (int n = rank + 1; n <= nmax; ++n) {
        rep.at(n) = CertifiedValue::exact_value(0.0, "rank-shortcircuit");
    }
    return rep;
}

bool rank_zero(int n, int rank) { return n > rank; }

// Exact Hilbert-pair values: every kind equals the singular values.
void fill_hilbert_exact(SNumberReport& rep, const Vec& sigma, int rank, const char* tag) {
    for (int n = 1; n <= rep.nmax(); ++n) {
        if (rank_zero(n, rank)) continue;
        double s = (n <= sigma.size()) ? sigma[n - 1] : 0.0;
        rep.at(n) = CertifiedValue::exact_value(s, tag);
    }
}

Mat random_gaussian(int rows, int cols, std::uint64_t seed) {
    GaussianStream g(seed);
    Mat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = g.next();
    return M;
}

// Seeded stochastic local search over a candidate matrix; keeps strict
// improvements of eval (smaller is better).
template <class EvalFn>
Mat improve_matrix(Mat X, double score, EvalFn&& eval, std::uint64_t seed, int rounds, double amp) {
    for (int r = 0; r < rounds; ++r) {
        Mat trial = X + amp * random_gaussian(static_cast<int>(X.rows()), static_cast<int>(X.cols()),
                                              derive_seed(seed, "improve", static_cast<std::uint64_t>(r)));
        double s = eval(trial);
        if (s < score - 1e-15) {
            X = trial;
            score = s;
            amp *= 1.3;
        } else {
            amp *= 0.75;
        }
    }
    return X;
}

double measured_norm_upper(const Mat& R, const SequenceSpace& dom, const SequenceSpace& cod,
                           const Config& cfg) {
    NormResult r = operator_norm(OperatorInstance(R, dom, cod), no_ascent(cfg));
    return r.value.upper.value_or(std::numeric_limits<double>::infinity());
}

}  // namespace

int resolve_nmax(const OperatorInstance& S, int nmax) {
    if (nmax <= 0) return S.min_dim();
    if (nmax > S.min_dim() + 1) throw InputError("nmax exceeds min(dim)+1");
    return nmax;
}

// ---------------------------------------------------------------- a_n ----

namespace {

// Coordinate descent on the entries of U, V minimizing the certified upper
// of ||S - U V^T||. Golden-section line searches; the objective is convex
// per coordinate.
Mat refine_low_rank(const OperatorInstance& S, Mat U, Mat V, const Config& cfg, int sweeps) {
    auto objective = [&](const Mat& Uc, const Mat& Vc) {
        return measured_norm_upper(S.matrix - Uc * Vc.transpose(), S.domain, S.codomain, cfg);
    };
    const double golden = 0.6180339887498949;
    double scale = 1.0 + S.matrix.cwiseAbs().maxCoeff();
    auto line_min = [&](double& entry, auto reval) {
        double radius = 2.0 * scale + 2.0 * std::abs(entry);
        double a = entry - radius, b = entry + radius;
        double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
        double f1 = reval(x1), f2 = reval(x2);
        for (int it = 0; it < 48; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - golden * (b - a);
                f1 = reval(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + golden * (b - a);
                f2 = reval(x2);
            }
        }
        entry = 0.5 * (a + b);
    };
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < U.rows(); ++i) {
            for (int j = 0; j < U.cols(); ++j) {
                line_min(U(i, j), [&](double t) {
                    Mat Ut = U;
                    Ut(i, j) = t;
                    return objective(Ut, V);
                });
            }
        }
        for (int i = 0; i < V.rows(); ++i) {
            for (int j = 0; j < V.cols(); ++j) {
                line_min(V(i, j), [&](double t) {
                    Mat Vt = V;
                    Vt(i, j) = t;
                    return objective(U, Vt);
                });
            }
        }
    }
    return U * V.transpose();
}

}  // namespace

SNumberReport approximation_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::approximation, nmax, rank);

    SvdResult dec = svd(S.matrix);
    if (S.hilbert_pair()) {
        fill_hilbert_exact(rep, dec.sigma, rank, "exact:svd");
        for (int n = 1; n <= std::min(nmax, rank); ++n) {
            int r = n - 1;
            rep.witnesses[static_cast<std::size_t>(n - 1)].approximant =
                Mat(dec.U.leftCols(r) * dec.sigma.head(r).asDiagonal() * dec.V.leftCols(r).transpose());
        }
        return rep;
    }

    // a_1 = ||S||: the only rank-0 approximant is L = 0.
    NormResult opn = operator_norm(S, cfg);
    if (!rank_zero(1, rank)) {
        rep.at(1).merge_lower(opn.value.lower, opn.value.lower_certified, "a1-is-norm");
        if (opn.value.upper) rep.at(1).merge_upper(*opn.value.upper, opn.value.upper_certified, "a1-is-norm");
        rep.witnesses[0].approximant = Mat(Mat::Zero(S.codomain.dim, S.domain.dim));
    }

    for (int n = 2; n <= nmax; ++n) {
        if (rank_zero(n, rank)) continue;
        const int r = n - 1;
        std::vector<std::pair<Mat, Mat>> starts;
        // truncated SVD warm start
        starts.emplace_back(Mat(dec.U.leftCols(r) * dec.sigma.head(r).asDiagonal()), Mat(dec.V.leftCols(r)));
        // constant-direction start: first component follows the all-ones
        // profile, remaining ones from the SVD
        {
            Mat U0(S.codomain.dim, r), V0(S.domain.dim, r);
            U0.col(0) = S.matrix * Vec::Ones(S.domain.dim) / static_cast<double>(S.domain.dim);
            V0.col(0) = Vec::Ones(S.domain.dim);
            for (int j = 1; j < r; ++j) {
                U0.col(j) = dec.U.col(j - 1) * dec.sigma[j - 1];
                V0.col(j) = dec.V.col(j - 1);
            }
            starts.emplace_back(U0, V0);
        }
        starts.emplace_back(random_gaussian(S.codomain.dim, r, derive_seed(cfg.seed, "lowrank-u", static_cast<std::uint64_t>(n))),
                            random_gaussian(S.domain.dim, r, derive_seed(cfg.seed, "lowrank-v", static_cast<std::uint64_t>(n))));

        double best = std::numeric_limits<double>::infinity();
        Mat best_L;
        for (auto& [U0, V0] : starts) {
            Mat L = refine_low_rank(S, U0, V0, cfg, 2);
            double u = measured_norm_upper(S.matrix - L, S.domain, S.codomain, cfg);
            if (u < best) {
                best = u;
                best_L = L;
            }
        }
        rep.at(n).merge_upper(best, true, "lowrank-candidate");
        rep.witnesses[static_cast<std::size_t>(n - 1)].approximant = best_L;
    }
    return rep;
}

// ------------------------------------------------------------- c_n, d_n ----

SNumberReport gelfand_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::gelfand, nmax, rank);

    SvdResult dec = svd(S.matrix);
    if (S.hilbert_pair()) {
        fill_hilbert_exact(rep, dec.sigma, rank, "exact:svd");
        for (int n = 1; n <= std::min(nmax, rank); ++n) {
            rep.witnesses[static_cast<std::size_t>(n - 1)].subspace =
                null_space_basis(Mat(dec.V.leftCols(n - 1).transpose()));
        }
        return rep;
    }

    NormResult opn = operator_norm(S, cfg);
    if (!rank_zero(1, rank)) {
        // only M = X has codim < 1
        rep.at(1) = opn.value;
        rep.at(1).methods.push_back("c1-is-norm");
        rep.witnesses[0].subspace = Mat(Mat::Identity(S.domain.dim, S.domain.dim));
    }

    Config fast = no_ascent(cfg);
    for (int n = 2; n <= nmax; ++n) {
        if (rank_zero(n, rank)) continue;
        const int codim = n - 1;
        auto eval_functionals = [&](const Mat& F) {
            NormResult r = restricted_norm(S, null_space_basis(F), fast, /*want_lower=*/false);
            return r.value.upper.value_or(std::numeric_limits<double>::infinity());
        };

        std::vector<Mat> candidates;
        candidates.push_back(Mat(dec.V.leftCols(codim).transpose()));
        candidates.push_back(Mat((S.matrix.transpose() * dec.U.leftCols(codim)).transpose()));
        candidates.push_back(random_gaussian(codim, S.domain.dim, derive_seed(cfg.seed, "gelfand-f", static_cast<std::uint64_t>(n))));

        double best = std::numeric_limits<double>::infinity();
        Mat best_F;
        for (const Mat& F : candidates) {
            double u = eval_functionals(F);
            if (u < best) {
                best = u;
                best_F = F;
            }
        }
        best_F = improve_matrix(best_F, best, eval_functionals,
                                derive_seed(cfg.seed, "gelfand-opt", static_cast<std::uint64_t>(n)), 30, 0.3);
        double u = eval_functionals(best_F);
        if (u < best) best = u;

        rep.at(n).merge_upper(best, true, "subspace-candidate");
        if (opn.value.has_certified_upper()) {
            rep.at(n).merge_upper(*opn.value.upper, true, "monotone-norm");
        }
        rep.witnesses[static_cast<std::size_t>(n - 1)].subspace = null_space_basis(best_F);
    }
    return rep;
}

SNumberReport kolmogorov_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::kolmogorov, nmax, rank);

    SvdResult dec = svd(S.matrix);
    if (S.hilbert_pair()) {
        fill_hilbert_exact(rep, dec.sigma, rank, "exact:svd");
        for (int n = 1; n <= std::min(nmax, rank); ++n) {
            rep.witnesses[static_cast<std::size_t>(n - 1)].subspace = Mat(dec.U.leftCols(n - 1));
        }
        return rep;
    }

    NormResult opn = operator_norm(S, cfg);
    if (!rank_zero(1, rank)) {
        rep.at(1) = opn.value;  // N = {0}
        rep.at(1).methods.push_back("d1-is-norm");
        rep.witnesses[0].subspace = Mat(S.codomain.dim, 0);
    }

    // greedy column pursuit mirrors the chain construction
    std::vector<int> greedy;
    {
        Mat span(S.codomain.dim, 0);
        for (int pick = 0; pick < std::min(nmax, S.domain.dim); ++pick) {
            int best_j = -1;
            double best_d = -1.0;
            for (int j = 0; j < S.domain.dim; ++j) {
                Mat Q = orthonormal_basis(span);
                Vec col = S.matrix.col(j);
                double d = (col - Q * (Q.transpose() * col)).norm();
                if (d > best_d) {
                    best_d = d;
                    best_j = j;
                }
            }
            greedy.push_back(best_j);
            Mat next(S.codomain.dim, span.cols() + 1);
            next << span, S.matrix.col(best_j);
            span = next;
        }
    }

    Config fast = no_ascent(cfg);
    for (int n = 2; n <= nmax; ++n) {
        if (rank_zero(n, rank)) continue;
        const int dim = n - 1;
        auto eval_span = [&](const Mat& N) {
            NormResult r = quotient_norm(S, N, fast, /*want_lower=*/false);
            return r.value.upper.value_or(std::numeric_limits<double>::infinity());
        };

        std::vector<Mat> candidates;
        candidates.push_back(Mat(dec.U.leftCols(dim)));
        {
            Mat G(S.codomain.dim, dim);
            for (int j = 0; j < dim; ++j) G.col(j) = S.matrix.col(greedy[static_cast<std::size_t>(j)]);
            candidates.push_back(G);
        }
        candidates.push_back(random_gaussian(S.codomain.dim, dim, derive_seed(cfg.seed, "kolmo-n", static_cast<std::uint64_t>(n))));

        double best = std::numeric_limits<double>::infinity();
        Mat best_N;
        for (const Mat& N : candidates) {
            double u = eval_span(N);
            if (u < best) {
                best = u;
                best_N = N;
            }
        }
        best_N = improve_matrix(best_N, best, eval_span,
                                derive_seed(cfg.seed, "kolmo-opt", static_cast<std::uint64_t>(n)), 30, 0.3);
        double u = eval_span(best_N);
        if (u < best) best = u;

        rep.at(n).merge_upper(best, true, "subspace-candidate");
        if (opn.value.has_certified_upper()) {
            rep.at(n).merge_upper(*opn.value.upper, true, "monotone-norm");
        }
        rep.witnesses[static_cast<std::size_t>(n - 1)].subspace = best_N;
    }
    return rep;
}

// ----------------------------------------------------------------- b_n ----

namespace {

Vec spherical_point(const std::vector<double>& phi) {
    const int k = static_cast<int>(phi.size()) + 1;
    Vec c(k);
    double prod = 1.0;
    for (int i = 0; i < k - 1; ++i) {
        c[i] = prod * std::cos(phi[static_cast<std::size_t>(i)]);
        prod *= std::sin(phi[static_cast<std::size_t>(i)]);
    }
    c[k - 1] = prod;
    return c;
}

// Certified lower bound of inf_{x in span(Q)\{0}} ||Sx||_Y / ||x||_X via a
// full angular mesh and a Lipschitz gap. Exact for one-dimensional spans.
double mesh_certified_inner_min(const OperatorInstance& S, const Mat& Q, const Config& cfg) {
    const int k = static_cast<int>(Q.cols());
    const int m = S.domain.dim;
    if (k == 1) {
        Vec x = Q.col(0);
        double dn = vector_norm(S.domain, x);
        return (dn > 0.0) ? apply_norm(S, x) / dn : 0.0;
    }

    Mat SQ = S.matrix * Q;
    double sigma1 = svd(SQ).sigma[0];
    double n_max = l2_to_p_factor(S.codomain.p, S.codomain.dim) * sigma1;
    double lip_num = n_max;
    double d_min = 1.0 / p_to_l2_factor(S.domain.p, m);
    double lip_den = l2_to_p_factor(S.domain.p, m);
    double lip = lip_num / d_min + n_max * lip_den / (d_min * d_min);

    int steps = (k == 2) ? 256 : (k == 3 ? cfg.mesh_steps : std::max(8, cfg.mesh_steps * 5 / 12));
    const double h = M_PI / steps;
    // axes 0..k-3 run over [0,pi], the last one over [0,2pi)
    std::vector<int> sizes(static_cast<std::size_t>(k - 1), steps + 1);
    sizes.back() = 2 * steps;
    long total = 1;
    for (int s : sizes) total *= s;

    std::vector<double> vals(static_cast<std::size_t>(total));
    parallel::for_index(static_cast<int>(total), [&](int idx) {
        std::vector<double> phi(static_cast<std::size_t>(k - 1));
        int rest = idx;
        for (int a = 0; a < k - 1; ++a) {
            int sz = sizes[static_cast<std::size_t>(a)];
            phi[static_cast<std::size_t>(a)] = h * (rest % sz);
            rest /= sz;
        }
        Vec x = Q * spherical_point(phi);
        double dn = exponent_norm(S.domain.p, x);
        vals[static_cast<std::size_t>(idx)] =
            (dn > 1e-300) ? exponent_norm(S.codomain.p, S.matrix * x) / dn : 0.0;
    });
    double grid_min = vals.empty() ? 0.0 : vals[0];
    for (double v : vals) grid_min = std::min(grid_min, v);

    double covering = static_cast<double>(k - 1) * h / 2.0;
    return std::max(0.0, grid_min - lip * covering);
}

double sampled_inner_min(const OperatorInstance& S, const Mat& Q, std::uint64_t seed, int samples) {
    GaussianStream g(seed);
    const int k = static_cast<int>(Q.cols());
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        Vec c(k);
        for (int i = 0; i < k; ++i) c[i] = g.next();
        Vec x = Q * c;
        double dn = exponent_norm(S.domain.p, x);
        if (dn > 1e-300) best = std::min(best, exponent_norm(S.codomain.p, S.matrix * x) / dn);
    }
    return std::isfinite(best) ? best : 0.0;
}

}  // namespace

SNumberReport bernstein_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::bernstein, nmax, rank);

    SvdResult dec = svd(S.matrix);
    if (S.hilbert_pair()) {
        fill_hilbert_exact(rep, dec.sigma, rank, "exact:svd");
        for (int n = 1; n <= std::min(nmax, rank); ++n) {
            rep.witnesses[static_cast<std::size_t>(n - 1)].subspace = Mat(dec.V.leftCols(n));
        }
        return rep;
    }

    NormResult opn = operator_norm(S, cfg);
    if (!rank_zero(1, rank)) {
        // the best one-dimensional subspace is the norm-attaining direction
        rep.at(1) = opn.value;
        rep.at(1).methods.push_back("b1-is-norm");
        if (opn.maximizer.size() == S.domain.dim) {
            rep.witnesses[0].subspace = Mat(opn.maximizer);
        }
    }

    for (int n = 2; n <= nmax && n <= S.domain.dim; ++n) {
        if (rank_zero(n, rank)) continue;
        std::vector<Mat> candidates;
        candidates.push_back(Mat(dec.V.leftCols(n)));
        candidates.push_back(random_gaussian(S.domain.dim, n, derive_seed(cfg.seed, "bernstein-m", static_cast<std::uint64_t>(n))));

        double best_cert = -1.0, best_heur = -1.0;
        Mat best_M;
        for (const Mat& M : candidates) {
            Mat Q = orthonormal_basis(M);
            if (Q.cols() < n) continue;
            if (n <= cfg.mesh_cap) {
                double v = mesh_certified_inner_min(S, Q, cfg);
                if (v > best_cert) {
                    best_cert = v;
                    best_M = Q;
                }
            } else {
                double v = sampled_inner_min(S, Q, derive_seed(cfg.seed, "bernstein-s", static_cast<std::uint64_t>(n)), 500);
                if (v > best_heur) {
                    best_heur = v;
                    best_M = Q;
                }
            }
        }
        if (best_cert >= 0.0) {
            rep.at(n).merge_lower(best_cert, true, "mesh-lipschitz");
        } else if (best_heur >= 0.0) {
            rep.at(n).merge_lower(best_heur, false, "heuristic:sampled-min");
        }
        if (best_M.size() > 0) rep.witnesses[static_cast<std::size_t>(n - 1)].subspace = best_M;
    }
    return rep;
}

// ------------------------------------------------------------ x_n, h_n ----

namespace {

struct FactorCandidate {
    Mat A;          // l_2^k -> X
    double normA;   // certified upper
    std::string tag;
};

std::vector<FactorCandidate> weyl_factors(const OperatorInstance& S, const NormResult& opn, const Config& cfg) {
    std::vector<FactorCandidate> out;
    auto add = [&](Mat A, const std::string& tag) {
        if (A.cols() == 0) return;
        double na = l2_to_space_norm_upper(A, S.domain, cfg);
        if (na <= 1e-300) return;
        out.push_back({std::move(A), na, tag});
    };
    add(Mat::Identity(S.domain.dim, S.domain.dim), "identity");
    add(svd(S.matrix).V, "right-singular");
    if (opn.maximizer.size() == S.domain.dim && opn.maximizer.norm() > 0.0) {
        add(Mat(opn.maximizer), "rank-one-attaining");
    }
    add(random_gaussian(S.domain.dim, S.domain.dim, derive_seed(cfg.seed, "weyl-a", 0)), "random");
    return out;
}

// Certified lower bounds for a_n of the composite C: l_2^k -> Y, divided by
// the factor-norm upper(s).
void register_composite_lowers(SNumberReport& rep, const Mat& C, const SequenceSpace& codomain,
                               double denom, const std::string& tag, const Config& cfg) {
    const int k = static_cast<int>(C.cols());
    if (codomain.p.is_two()) {
        Vec s = svd(C).sigma;
        for (int n = 1; n <= rep.nmax() && n <= s.size(); ++n) {
            rep.at(n).merge_lower(s[n - 1] / denom, true, tag + ":sigma");
        }
        return;
    }
    if (k == 1) {
        double v = exponent_norm(codomain.p, C.col(0));
        rep.at(1).merge_lower(v / denom, true, tag + ":column");
        return;
    }
    // factor through l_2 on the codomain side as well
    SvdResult dec = svd(C);
    Mat B = dec.U.transpose();
    bool exact = false;
    double nb = space_to_l2_norm_upper(B, codomain, cfg, &exact);
    if (nb <= 1e-300) return;
    Vec s = dec.sigma;  // sigma(B C) = sigma(C) for orthonormal U
    for (int n = 1; n <= rep.nmax() && n <= s.size(); ++n) {
        rep.at(n).merge_lower(s[n - 1] / (denom * nb), true, tag + ":two-sided");
    }
}

}  // namespace

SNumberReport weyl_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::weyl, nmax, rank);

    NormResult opn = operator_norm(S, cfg);
    for (const FactorCandidate& f : weyl_factors(S, opn, cfg)) {
        Mat C = S.matrix * f.A;
        register_composite_lowers(rep, C, S.codomain, f.normA, "weyl:" + f.tag, cfg);
    }
    for (int n = 1; n <= nmax; ++n) {
        if (rank_zero(n, rank)) rep.at(n) = CertifiedValue::exact_value(0.0, "rank-shortcircuit");
    }
    return rep;
}

namespace {

struct PairCandidate {
    Mat A;  // l_2^k -> X
    Mat B;  // Y -> l_2^j
    std::string tag;
};

double pair_value(const OperatorInstance& S, const Mat& A, const Mat& B, int n, const Config& cfg,
                  double* denom_out = nullptr) {
    Mat C = B * S.matrix * A;
    Vec s = svd(C).sigma;
    if (n > s.size()) return 0.0;
    double na = l2_to_space_norm_upper(A, S.domain, cfg);
    double nb = space_to_l2_norm_upper(B, S.codomain, cfg);
    if (na <= 1e-300 || nb <= 1e-300) return 0.0;
    if (denom_out) *denom_out = na * nb;
    return s[n - 1] / (na * nb);
}

// Gradient ascent on sigma_n(B S A) / (||A|| ||B||) from a warm start.
PairCandidate refine_pair(const OperatorInstance& S, PairCandidate p, int n, const Config& cfg) {
    double f = pair_value(S, p.A, p.B, n, cfg);
    double step = 0.25;
    for (int it = 0; it < 30 && f > 0.0; ++it) {
        Mat C = p.B * S.matrix * p.A;
        SvdResult dec = svd(C);
        if (n > dec.sigma.size()) break;
        Vec u = dec.U.col(n - 1), v = dec.V.col(n - 1);
        Mat gA = (p.B * S.matrix).transpose() * u * v.transpose();
        Mat gB = u * (S.matrix * p.A * v).transpose();
        bool improved = false;
        while (step > 1e-10) {
            Mat At = p.A + step * gA / std::max(1.0, gA.norm());
            Mat Bt = p.B + step * gB / std::max(1.0, gB.norm());
            double ft = pair_value(S, At, Bt, n, cfg);
            if (ft > f * (1.0 + 1e-12)) {
                p.A = At;
                p.B = Bt;
                f = ft;
                improved = true;
                step *= 1.5;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return p;
}

}  // namespace

SNumberReport hilbert_numbers(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    const int rank = numerical_rank(S.matrix);
    SNumberReport rep = blank_report(SNumberKind::hilbert, nmax, rank);

    NormResult opn = operator_norm(S, cfg);
    SvdResult dec = svd(S.matrix);

    std::vector<PairCandidate> pairs;
    pairs.push_back({Mat::Identity(S.domain.dim, S.domain.dim),
                     Mat::Identity(S.codomain.dim, S.codomain.dim), "identity"});
    pairs.push_back({dec.V, Mat(dec.U.transpose()), "singular"});
    if (opn.maximizer.size() == S.domain.dim && opn.maximizer.norm() > 0.0) {
        Vec y = S.matrix * opn.maximizer;
        if (exponent_norm(S.codomain.p, y) > 0.0) {
            Vec b = norming_functional(S.codomain, y);
            pairs.push_back({Mat(opn.maximizer), Mat(b.transpose()), "rank-one-attaining"});
        }
    }
    pairs.push_back({random_gaussian(S.domain.dim, S.domain.dim, derive_seed(cfg.seed, "hilbert-a", 0)),
                     random_gaussian(S.codomain.dim, S.codomain.dim, derive_seed(cfg.seed, "hilbert-b", 0)),
                     "random"});

    for (const PairCandidate& p : pairs) {
        Mat C = p.B * S.matrix * p.A;
        Vec s = svd(C).sigma;
        double na = l2_to_space_norm_upper(p.A, S.domain, cfg);
        double nb = space_to_l2_norm_upper(p.B, S.codomain, cfg);
        if (na <= 1e-300 || nb <= 1e-300) continue;
        for (int n = 1; n <= nmax && n <= s.size(); ++n) {
            if (rank_zero(n, rank)) continue;
            double before = rep.at(n).lower;
            rep.at(n).merge_lower(s[n - 1] / (na * nb), true, "hilbert:" + p.tag);
            auto& w = rep.witnesses[static_cast<std::size_t>(n - 1)];
            if (!w.factor_a.has_value() || rep.at(n).lower > before) {
                w.factor_a = p.A;
                w.factor_b = p.B;
            }
        }
    }

    // alternating refinement, only worthwhile off the Hilbert-exact pair
    if (!S.hilbert_pair()) {
        for (int n = 1; n <= std::min(nmax, rank); ++n) {
            PairCandidate seed_pair = pairs[1];
            PairCandidate refined = refine_pair(S, seed_pair, n, cfg);
            double v = pair_value(S, refined.A, refined.B, n, cfg);
            if (v > rep.at(n).lower) {
                rep.at(n).merge_lower(v, true, "hilbert:alternating");
                auto& w = rep.witnesses[static_cast<std::size_t>(n - 1)];
                w.factor_a = refined.A;
                w.factor_b = refined.B;
            }
        }
    }

    for (int n = 1; n <= nmax; ++n) {
        if (rank_zero(n, rank)) rep.at(n) = CertifiedValue::exact_value(0.0, "rank-shortcircuit");
    }
    return rep;
}

// --------------------------------------------------------------- lattice ----

void propagate_lattice(ProfileBundle& bundle, double fault_tol) {
    const int nmax = bundle.nmax;
    auto& a = bundle.get(SNumberKind::approximation);
    auto& h = bundle.get(SNumberKind::hilbert);
    const std::array<SNumberKind, 4> mids = {SNumberKind::bernstein, SNumberKind::gelfand,
                                             SNumberKind::kolmogorov, SNumberKind::weyl};

    // lowers flow upward: h -> middles -> a
    for (int n = 1; n <= nmax; ++n) {
        const CertifiedValue& hv = h.at(n);
        if (hv.lower_certified && hv.lower > 0.0) {
            for (SNumberKind k : mids) {
                bundle.get(k).at(n).merge_lower(hv.lower, true, "prop:h-lower");
            }
        }
        double mid_best = 0.0;
        bool have = false;
        for (SNumberKind k : mids) {
            const CertifiedValue& mv = bundle.get(k).at(n);
            if (mv.lower_certified && (!have || mv.lower > mid_best)) {
                mid_best = mv.lower;
                have = true;
            }
        }
        if (have) a.at(n).merge_lower(mid_best, true, "prop:mid-lower");
    }

    // uppers flow downward: a -> middles, b <= min(c,d), middles -> h
    for (int n = 1; n <= nmax; ++n) {
        const CertifiedValue& av = a.at(n);
        if (av.has_certified_upper()) {
            for (SNumberKind k : mids) {
                bundle.get(k).at(n).merge_upper(*av.upper, true, "prop:a-upper");
            }
        }
        auto& b = bundle.get(SNumberKind::bernstein).at(n);
        for (SNumberKind k : {SNumberKind::gelfand, SNumberKind::kolmogorov}) {
            const CertifiedValue& v = bundle.get(k).at(n);
            if (v.has_certified_upper()) b.merge_upper(*v.upper, true, "prop:min-cd");
        }
        double mid_min = std::numeric_limits<double>::infinity();
        for (SNumberKind k : mids) {
            const CertifiedValue& mv = bundle.get(k).at(n);
            if (mv.has_certified_upper()) mid_min = std::min(mid_min, *mv.upper);
        }
        if (std::isfinite(mid_min)) h.at(n).merge_upper(mid_min, true, "prop:mid-upper");
    }

    // monotone smoothing per kind: uppers by running minimum, lowers by
    // running maximum from larger n backward
    for (SNumberReport& rep : bundle.reports) {
        double run_upper = std::numeric_limits<double>::infinity();
        bool have_upper = false;
        for (int n = 1; n <= nmax; ++n) {
            CertifiedValue& v = rep.at(n);
            if (v.has_certified_upper()) {
                run_upper = std::min(run_upper, *v.upper);
                have_upper = true;
            }
            if (have_upper && (!v.has_certified_upper() || *v.upper > run_upper)) {
                v.merge_upper(run_upper, true, "smooth:running-min");
            }
        }
        double run_lower = 0.0;
        for (int n = nmax; n >= 1; --n) {
            CertifiedValue& v = rep.at(n);
            if (v.lower_certified) run_lower = std::max(run_lower, v.lower);
            if (v.lower_certified && v.lower < run_lower) {
                v.merge_lower(run_lower, true, "smooth:running-max");
            }
        }
    }

    // consistency scan over certified sides
    for (SNumberReport& rep : bundle.reports) {
        for (int n = 1; n <= nmax; ++n) {
            CertifiedValue& v = rep.at(n);
            v.normalize();
            if (v.lower_certified && v.has_certified_upper() && v.lower > *v.upper + fault_tol) {
                throw CertifiedViolation(std::string("lattice fault: ") + kind_name(rep.kind) + " n=" +
                                         std::to_string(n) + " lower " + std::to_string(v.lower) +
                                         " exceeds upper " + std::to_string(*v.upper));
            }
        }
    }
}

// --------------------------------------------------------------- profile ----

ProfileBundle profile(const OperatorInstance& S, int nmax, const Config& cfg) {
    nmax = resolve_nmax(S, nmax);
    ProfileBundle bundle;
    bundle.nmax = nmax;
    bundle.rank = numerical_rank(S.matrix);
    bundle.norm = operator_norm(S, cfg);

    bundle.get(SNumberKind::approximation) = approximation_numbers(S, nmax, cfg);
    bundle.get(SNumberKind::bernstein) = bernstein_numbers(S, nmax, cfg);
    bundle.get(SNumberKind::gelfand) = gelfand_numbers(S, nmax, cfg);
    bundle.get(SNumberKind::kolmogorov) = kolmogorov_numbers(S, nmax, cfg);
    bundle.get(SNumberKind::weyl) = weyl_numbers(S, nmax, cfg);
    bundle.get(SNumberKind::hilbert) = hilbert_numbers(S, nmax, cfg);

    // witness chains supply additional certified Hilbert lowers
    if (bundle.rank > 0) {
        int n_chain = std::min(nmax, S.min_dim());
        for (ChainVariant variant : {ChainVariant::gelfand, ChainVariant::kolmogorov}) {
            WitnessChain chain = (variant == ChainVariant::gelfand)
                                     ? gelfand_chain(S, n_chain, cfg.epsilon, cfg)
                                     : kolmogorov_chain(S, n_chain, cfg.epsilon, cfg);
            auto& h = bundle.get(SNumberKind::hilbert);
            for (int k = 1; k <= chain.length() && k <= nmax; ++k) {
                h.at(k).merge_lower(chain.hk_lowers[static_cast<std::size_t>(k - 1)], true,
                                    std::string("witness-chain:") + chain_variant_name(variant));
            }
        }
    }

    propagate_lattice(bundle);
    return bundle;
}

}  // namespace snum

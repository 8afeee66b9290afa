#include "ifba/inversion.hpp"

#include <algorithm>
#include <cmath>

#include "ifba/errors.hpp"

namespace ifba {

namespace {

constexpr int kDecayWindow = 8; // consecutive non-decreasing term norms => diverged

void require_unital(const AlgebraModel& model, const char* what) {
    if (!model.unital)
        throw UnsupportedOperationError(std::string(what) + " requires a unital model, got " +
                                        model.spec_string());
}

// Core summation of e + x + x^2 + ...; the caller owns interpretation of the
// result (plain, shifted, or resolvent form).
NeumannResult sum_neumann_series(const IFNormModel& model, const AlgebraElement& x, double tol,
                                 std::int64_t max_terms, std::optional<BallParams> ball) {
    require_unital(x.model(), "neumann_inverse");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");

    const double norm_x = crisp_norm(x);
    const bool contractive = norm_x < 1.0;
    const double threshold = contractive ? tol * (1.0 - norm_x) : 0.0;

    auto sum = AlgebraElement::unit(x.model());
    auto term = x;
    std::int64_t terms_used = 1;
    std::vector<double> term_norms;
    int non_decaying = 0;
    double prev_norm = crisp_norm(term);

    while (true) {
        const double tn = crisp_norm(term);
        term_norms.push_back(tn);
        if (tn < threshold || tn == 0.0) break;
        if (terms_used >= max_terms) break;
        if (!contractive) {
            if (tn >= prev_norm && term_norms.size() > 1) {
                if (++non_decaying >= kDecayWindow)
                    throw DivergedError(
                        "series terms are not decaying (||x|| = " + std::to_string(norm_x) + ")",
                        term_norms);
            } else {
                non_decaying = 0;
            }
        }
        prev_norm = tn;
        sum = add(sum, term);
        ++terms_used;
        term = mul(term, x);
    }

    NeumannResult result{std::move(sum), terms_used, 0.0, {norm_x, contractive}, std::nullopt};
    const auto e = AlgebraElement::unit(x.model());
    result.residual = crisp_norm(sub(mul(sub(e, x), result.approx_inverse), e));
    if (ball) {
        BallSpec spec{AlgebraElement::zero(x.model()), ball->r, ball->t};
        result.fuzzy_certificate =
            FuzzyCertificate{ball->r, ball->t, in_open_ball(model, spec, x)};
    }
    return result;
}

} // namespace

NeumannResult neumann_inverse(const IFNormModel& model, const AlgebraElement& x, double tol,
                              std::int64_t max_terms, std::optional<BallParams> ball) {
    return sum_neumann_series(model, x, tol, max_terms, ball);
}

NeumannResult inverse_via_neumann(const IFNormModel& model, const AlgebraElement& x, double tol,
                                  std::int64_t max_terms, std::optional<BallParams> ball) {
    require_unital(x.model(), "inverse_via_neumann");
    const auto e = AlgebraElement::unit(x.model());
    auto result = sum_neumann_series(model, sub(e, x), tol, max_terms, ball);
    result.residual = crisp_norm(sub(mul(x, result.approx_inverse), e));
    return result;
}

NeumannResult resolvent_inverse(const IFNormModel& model, const AlgebraElement& x, double lambda,
                                double tol, std::int64_t max_terms,
                                std::optional<BallParams> ball) {
    require_unital(x.model(), "resolvent_inverse");
    if (lambda == 0.0) throw DomainError("lambda must be nonzero");
    const auto w = scale(1.0 / lambda, x);
    auto result = sum_neumann_series(model, w, tol, max_terms, ball);
    result.approx_inverse = scale(1.0 / lambda, result.approx_inverse);
    const auto e = AlgebraElement::unit(x.model());
    const auto lhs = sub(scale(lambda, e), x);
    result.residual = crisp_norm(sub(mul(lhs, result.approx_inverse), e));
    return result;
}

InvertibleBallProbeReport invertible_ball_probe(const IFNormModel& model,
                                                const AlgebraElement& x0, double t,
                                                std::int64_t sample_count, std::uint64_t seed,
                                                std::optional<double> r_override) {
    require_unital(x0.model(), "invertible_ball_probe");
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");

    const auto inv0 = direct_inverse(x0);
    if (!inv0) throw DomainError("x0 is not invertible per the direct oracle");

    const auto p = membership(model, *inv0, t);
    double r_star = std::min(p.mu, 1.0 - p.nu);
    r_star = std::clamp(r_star, 1e-12, 1.0 - 1e-12);

    double r = r_override ? *r_override : 0.95 * r_star;
    if (!(r > 0.0 && r < 1.0)) throw DomainError("probe radius r must lie in (0,1)");

    InvertibleBallProbeReport report;
    report.model = x0.model().spec_string();
    report.x0 = x0;
    report.t = t;
    report.r_star = r_star;
    report.r = r;
    report.bound_exceeded = r >= r_star;
    report.crisp_radius = crisp_ball_radius(BallSpec{x0, r, t});
    report.samples = sample_count;
    report.seed = seed;
    report.sample_law =
        "gaussian direction normalized to crisp norm 1, radius = rho * u^(1/dim), u uniform";

    Rng rng(seed);
    const double dim = static_cast<double>(x0.model().payload_size());
    for (std::int64_t i = 0; i < sample_count; ++i) {
        const auto dir = random_direction(x0.model(), rng);
        const double radius = report.crisp_radius * std::pow(rng.uniform01(), 1.0 / dim);
        const auto delta = scale(radius, dir);
        const auto sample = add(x0, delta);

        if (direct_inverse(sample)) {
            ++report.invertible_count;
        } else {
            ++report.noninvertible_count;
            if (!report.first_noninvertible)
                report.first_noninvertible = ProbeCounterexample{sample, "oracle_noninvertible", i};
        }
        // x = x0(e - z) with z = -x0^{-1} delta is series-invertible when
        // ||z|| < 1; record samples that violate that premise.
        if (!(crisp_norm(mul(*inv0, delta)) < 1.0)) {
            ++report.uncertified_count;
            if (!report.first_uncertified)
                report.first_uncertified =
                    ProbeCounterexample{sample, "neumann_premise_violated", i};
        }
    }
    return report;
}

ClosedSetCheckReport closed_noninvertible_check(const IFNormModel& model,
                                                std::int64_t sample_count, std::uint64_t seed) {
    const auto& algebra = model.algebra;
    require_unital(algebra, "closed_noninvertible_check");
    if (algebra.kind != AlgebraKind::matrix)
        throw UnsupportedOperationError(
            "closed_noninvertible_check is implemented for matrix models only");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");

    const int n = algebra.dim;
    Rng rng(seed);
    ClosedSetCheckReport report;
    report.model = algebra.spec_string();
    report.sequences = sample_count;
    report.seed = seed;

    // Rank-deficient z with a known unit kernel direction: z = R(I - vv^T).
    auto singular_with_kernel = [&](const std::vector<double>& v) {
        const auto R = random_element(algebra, rng, -1.0, 1.0);
        std::vector<double> proj(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                proj[static_cast<std::size_t>(i) * n + j] =
                    (i == j ? 1.0 : 0.0) - v[static_cast<std::size_t>(i)] *
                                               v[static_cast<std::size_t>(j)];
        return mul(R, AlgebraElement(algebra, std::move(proj)));
    };

    constexpr std::int64_t kTermsPerSequence = 24;
    for (std::int64_t s = 0; s < sample_count; ++s) {
        SingularFamilyResult res;
        res.generator_ok = true;
        const int family = static_cast<int>(s % 3);

        AlgebraElement z_limit = AlgebraElement::zero(algebra);
        AlgebraElement step = AlgebraElement::zero(algebra);
        if (family == 0) {
            // Constant singular sequence.
            res.family = "constant_singular";
            const auto v = rng.unit_sphere(static_cast<std::size_t>(n));
            z_limit = singular_with_kernel(v);
        } else if (family == 1) {
            // Shared-kernel perturbation: z + Q/n, both killing the same v.
            res.family = "shared_kernel_perturbation";
            const auto v = rng.unit_sphere(static_cast<std::size_t>(n));
            z_limit = singular_with_kernel(v);
            step = singular_with_kernel(v);
        } else {
            // Zero-row family: perturbations confined to the nonzero rows.
            res.family = "zero_row_perturbation";
            auto base = random_element(algebra, rng, -1.0, 1.0);
            auto pert = random_element(algebra, rng, -1.0, 1.0);
            std::vector<double> zdata(base.data().begin(), base.data().end());
            std::vector<double> pdata(pert.data().begin(), pert.data().end());
            const int dead_row = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
            for (int j = 0; j < n; ++j) {
                zdata[static_cast<std::size_t>(dead_row) * n + j] = 0.0;
                pdata[static_cast<std::size_t>(dead_row) * n + j] = 0.0;
            }
            z_limit = AlgebraElement(algebra, std::move(zdata));
            step = AlgebraElement(algebra, std::move(pdata));
        }

        for (std::int64_t k = 1; k <= kTermsPerSequence; ++k) {
            const auto zk = add(z_limit, scale(1.0 / static_cast<double>(k), step));
            ++res.terms_checked;
            if (direct_inverse(zk)) {
                res.generator_ok = false;
                break;
            }
        }
        res.limit_noninvertible = !direct_inverse(z_limit).has_value();
        if (!res.generator_ok || !res.limit_noninvertible) ++report.failures;
        report.results.push_back(std::move(res));
    }
    return report;
}

ContinuityPairCheck continuity_pair_check(const IFNormModel& model, const AlgebraElement& x0,
                                          const AlgebraElement& x, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    const auto inv0 = direct_inverse(x0);
    const auto inv = direct_inverse(x);
    if (!inv0) throw DomainError("x0 is not invertible per the direct oracle");
    if (!inv) throw DomainError("x is not invertible per the direct oracle");

    ContinuityPairCheck check;
    check.lhs = membership(model, sub(*inv, *inv0), epsilon);
    check.rhs = membership(model, sub(x, x0), epsilon / 4.0);
    check.holds = check.lhs.mu >= check.rhs.mu && check.lhs.nu <= check.rhs.nu;
    return check;
}

ContinuityProbeReport inversion_continuity_probe(const IFNormModel& model,
                                                 const AlgebraElement& x0, double epsilon,
                                                 std::int64_t sample_count, std::uint64_t seed) {
    require_unital(x0.model(), "inversion_continuity_probe");
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");
    if (!direct_inverse(x0)) throw DomainError("x0 is not invertible per the direct oracle");

    ContinuityProbeReport report;
    report.model = x0.model().spec_string();
    report.x0 = x0;
    report.epsilon = epsilon;
    report.samples = sample_count;
    report.seed = seed;
    report.sample_law = "crisp distance log-uniform in [1e-4,1]*||x0||, gaussian direction";
    report.counterexample_cap = 8;

    const double scale_norm = std::max(crisp_norm(x0), 1e-12);
    Rng rng(seed);
    for (std::int64_t i = 0; i < sample_count; ++i) {
        std::optional<AlgebraElement> sample;
        for (int attempt = 0; attempt < kInvertibleRetryBudget; ++attempt) {
            const auto dir = random_direction(x0.model(), rng);
            const double dist = scale_norm * rng.log_uniform(1e-4, 1.0);
            auto candidate = add(x0, scale(dist, dir));
            if (direct_inverse(candidate)) {
                sample = std::move(candidate);
                break;
            }
        }
        if (!sample)
            throw Error("could not sample an invertible neighbor of x0 within the retry budget");

        const auto check = continuity_pair_check(model, x0, *sample, epsilon);
        if (check.holds) {
            ++report.holds_count;
        } else {
            ++report.fails_count;
            if (static_cast<std::int64_t>(report.counterexamples.size()) <
                report.counterexample_cap)
                report.counterexamples.push_back(
                    ContinuityCounterexample{*sample, check.lhs, check.rhs, i});
        }
    }
    return report;
}

} // namespace ifba

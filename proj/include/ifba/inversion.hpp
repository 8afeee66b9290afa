#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifba/if_norm.hpp"

namespace ifba {

inline constexpr std::int64_t kDefaultMaxTerms = 100000;
inline constexpr int kInvertibleRetryBudget = 32;

struct CrispCertificate {
    double norm_x = 0.0;     // crisp norm of the element whose powers are summed
    bool contractive = false; // norm_x < 1
};

struct FuzzyCertificate {
    double r = 0.0;
    double t = 0.0;
    bool ball_member = false; // series argument inside B(theta, r, t)
};

struct NeumannResult {
    AlgebraElement approx_inverse;
    std::int64_t terms_used = 0; // includes the leading unit term
    double residual = 0.0;
    CrispCertificate crisp_certificate;
    std::optional<FuzzyCertificate> fuzzy_certificate;
};

// Ball parameters for the optional theta-centered membership certificate.
struct BallParams {
    double r = 0.5;
    double t = 1.0;
};

// Partial sums of e + x + x^2 + ... for (e-x)^{-1}. Stops when the next term
// norm drops below tol*(1-||x||) (||x|| < 1) or the term vanishes exactly;
// throws DivergedError when ||x|| >= 1 and term norms stop decaying.
NeumannResult neumann_inverse(const IFNormModel& model, const AlgebraElement& x, double tol,
                              std::int64_t max_terms = kDefaultMaxTerms,
                              std::optional<BallParams> ball = std::nullopt);

// x^{-1} = e + sum (e-x)^n; delegates to neumann_inverse on e-x.
NeumannResult inverse_via_neumann(const IFNormModel& model, const AlgebraElement& x, double tol,
                                  std::int64_t max_terms = kDefaultMaxTerms,
                                  std::optional<BallParams> ball = std::nullopt);

// (lambda*e - x)^{-1} = sum_{n>=1} lambda^{-n} x^{n-1}, summed as the Neumann
// series of x/lambda scaled by 1/lambda.
NeumannResult resolvent_inverse(const IFNormModel& model, const AlgebraElement& x, double lambda,
                                double tol, std::int64_t max_terms = kDefaultMaxTerms,
                                std::optional<BallParams> ball = std::nullopt);

struct ProbeCounterexample {
    AlgebraElement x;
    std::string reason; // "oracle_noninvertible" | "neumann_premise_violated"
    std::int64_t sample_index = 0;
};

struct InvertibleBallProbeReport {
    std::string model;
    AlgebraElement x0;
    double t = 0.0;
    double r_star = 0.0;       // min{mu(x0^{-1},t), 1 - nu(x0^{-1},t)}
    double r = 0.0;            // radius actually probed
    bool bound_exceeded = false; // r >= r_star (caller override above the bound)
    double crisp_radius = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string sample_law;
    std::int64_t invertible_count = 0;
    std::int64_t noninvertible_count = 0;
    std::int64_t uncertified_count = 0; // samples where ||x0^{-1}(x-x0)|| >= 1
    std::optional<ProbeCounterexample> first_noninvertible;
    std::optional<ProbeCounterexample> first_uncertified;
};

// Samples the fuzzy ball B(x0, r, t) (r defaults to 0.95 * r_star) through its
// crisp radius and checks each draw against the inversion oracle.
InvertibleBallProbeReport invertible_ball_probe(const IFNormModel& model,
                                                const AlgebraElement& x0, double t,
                                                std::int64_t sample_count, std::uint64_t seed,
                                                std::optional<double> r_override = std::nullopt);

struct SingularFamilyResult {
    std::string family;
    std::int64_t terms_checked = 0;
    bool generator_ok = false;      // every emitted term oracle-singular
    bool limit_noninvertible = false;
};

struct ClosedSetCheckReport {
    std::string model;
    std::int64_t sequences = 0;
    std::uint64_t seed = 0;
    std::int64_t failures = 0; // generator violations + invertible limits
    std::vector<SingularFamilyResult> results;
};

// Complement view of the openness statement: convergent sequences drawn from
// the non-invertible set must have non-invertible limits. Matrix models only.
ClosedSetCheckReport closed_noninvertible_check(const IFNormModel& model,
                                                std::int64_t sample_count, std::uint64_t seed);

struct ContinuityCounterexample {
    AlgebraElement x;
    FuzzyDegreePair lhs; // membership of x^{-1} - x0^{-1} at epsilon
    FuzzyDegreePair rhs; // membership of x - x0 at epsilon/4
    std::int64_t sample_index = 0;
};

struct ContinuityPairCheck {
    FuzzyDegreePair lhs;
    FuzzyDegreePair rhs;
    bool holds = false; // lhs.mu >= rhs.mu and lhs.nu <= rhs.nu
};

// The inequality chain claimed in the inversion-continuity proof, evaluated
// for one concrete pair (x0, x).
ContinuityPairCheck continuity_pair_check(const IFNormModel& model, const AlgebraElement& x0,
                                          const AlgebraElement& x, double epsilon);

struct ContinuityProbeReport {
    std::string model;
    AlgebraElement x0;
    double epsilon = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string sample_law;
    std::int64_t holds_count = 0;
    std::int64_t fails_count = 0;
    std::int64_t counterexample_cap = 0;
    std::vector<ContinuityCounterexample> counterexamples; // first failures, capped
};

// Satisfaction rate of the continuity inequality near x0. Reported, never
// asserted: the chain leans on multiplicative axioms the induced model can
// violate.
ContinuityProbeReport inversion_continuity_probe(const IFNormModel& model,
                                                 const AlgebraElement& x0, double epsilon,
                                                 std::int64_t sample_count, std::uint64_t seed);

} // namespace ifba

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifba/algebra.hpp"
#include "ifba/triangular.hpp"

namespace ifba {

// Membership / non-membership degrees at one (element, t).
struct FuzzyDegreePair {
    double mu = 0.0;
    double nu = 0.0;
};

// Intuitionistic fuzzy norm over a carrier algebra. The only construction is
// the lift of the crisp norm: mu(x,t) = t/(t+||x||), nu(x,t) = ||x||/(t+||x||).
struct IFNormModel {
    AlgebraModel algebra;
    TriangularNorm tnorm{TNormKind::minimum, std::nullopt};
    TriangularConorm tconorm{TConormKind::maximum, std::nullopt};

    static IFNormModel induced(const AlgebraModel& algebra);
};

FuzzyDegreePair membership(const IFNormModel& model, const AlgebraElement& x, double t);

struct BallSpec {
    AlgebraElement center;
    double r = 0.5; // in (0,1)
    double t = 1.0; // > 0
};

// y is inside B(center, r, t) iff mu(center-y, t) > 1-r and nu(center-y, t) < r.
bool in_open_ball(const IFNormModel& model, const BallSpec& ball, const AlgebraElement& y);

// The crisp radius rho = t*r/(1-r): under the induced norm, ball membership
// is exactly ||y - center|| < rho.
double crisp_ball_radius(const BallSpec& ball);

enum class AxiomStatus { pass, fail, vacuous };
std::string to_string(AxiomStatus status);

struct IfnaWitness {
    std::optional<AlgebraElement> x;
    std::optional<AlgebraElement> y;
    std::optional<double> c;
    std::optional<double> s;
    std::optional<double> t;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation; // e.g. "max{mu(x,s),mu(y,t)} <= mu(xy,s+t)"
    std::string source;   // "random[i]" or "targeted[i]"
};

struct IfnaAxiomRecord {
    std::string id; // roman numeral "i".."xiv"
    AxiomStatus status = AxiomStatus::pass;
    std::int64_t samples_used = 0;
    std::optional<IfnaWitness> witness;
};

struct IfnaAxiomReport {
    std::string model;
    std::string tnorm;
    std::string tconorm;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    std::vector<double> t_ladder;  // base ladder for monotone-trend checks
    std::string element_law;       // sampling law echoed for reproducibility
    std::string time_law;
    std::string scalar_law;
    std::string limit_gate;        // how the t->0 / t->inf gates are evaluated
    std::vector<IfnaAxiomRecord> axioms;

    const IfnaAxiomRecord& record(const std::string& id) const;
};

// Evaluates every axiom on seeded random tuples plus a targeted unbalanced-
// norm search for the multiplicative axioms. Witnesses replay: recomputing
// lhs/rhs from a stored witness reproduces the violation.
IfnaAxiomReport check_ifna_axioms(const IFNormModel& model, std::int64_t sample_count,
                                  std::uint64_t seed);

// Fixed 13-point geometric ladder 1e-3 .. 1e3.
std::vector<double> default_t_ladder();

} // namespace ifba

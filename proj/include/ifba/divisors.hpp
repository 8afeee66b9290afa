#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifba/if_norm.hpp"

namespace ifba {

enum class TdzSide { left, right }; // left: z * z_n, right: z_n * z
std::string to_string(TdzSide side);

struct TdzTracePoint {
    std::int64_t n = 0;
    double mu = 0.0;
    double nu = 0.0;
};

// Evidence that z is a topological divisor of zero: a constant unit-norm
// sequence z_n outside B(theta, r, t) whose product with z is annihilated.
struct TDZWitness {
    AlgebraElement z;
    AlgebraElement zn;
    TdzSide side = TdzSide::left;
    std::string sequence_rule; // "kernel_outer_product" | "constant_unit_scalar"
    double r = 0.0;
    double t = 0.0;
    double annihilation_norm = 0.0; // ||z*zn|| (left) or ||zn*z|| (right)
    double separation_mu = 0.0;     // mu(zn, t)
    double separation_nu = 0.0;
    std::vector<TdzTracePoint> decay_trace;      // (n, mu(product,t), nu(product,t))
    std::vector<TdzTracePoint> separation_trace; // (n, mu(zn,t), nu(zn,t))
    // Ball-complement convention: mu(zn,t) <= 1-r or nu(zn,t) >= r. The
    // definition's parenthetical uses strict inequalities; the complement of
    // the open ball is the non-strict form used here.
    std::string separation_convention;
};

struct TdzSearchResult {
    std::optional<TDZWitness> witness;
    std::string not_found_reason; // set when witness is empty
    bool found() const { return witness.has_value(); }
};

// Constructive witness search: kernel-based for singular matrices, the
// constant 1 sequence for the zero scalar. Invertible z (per the direct
// oracle) yields NotFound.
TdzSearchResult find_tdz_witness(const IFNormModel& model, const AlgebraElement& z, double r,
                                 double t, std::int64_t horizon, TdzSide side = TdzSide::left);

struct TdzPopulationReport {
    std::string model;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double r = 0.0;
    double t = 0.0;
    std::int64_t witness_count = 0;
    std::int64_t oracle_noninvertible_count = 0;
    std::int64_t constructed_singular_count = 0;
    std::int64_t violation_count = 0; // witness found for an oracle-invertible element
    std::optional<AlgebraElement> first_violation;
    bool consistent = false; // no violations and witness count == oracle-noninvertible count
};

// Mixed population check of "every topological divisor of zero is
// non-invertible": random dense draws interleaved with constructed
// rank-deficient products. A violation is a hard failure.
TdzPopulationReport verify_tdz_subset_singular(const IFNormModel& model,
                                               std::int64_t sample_count, std::uint64_t seed,
                                               double r = 0.4, double t = 1.0);

} // namespace ifba

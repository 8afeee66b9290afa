#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ifba/if_norm.hpp"

namespace ifba {

enum class SequenceFamily { constant, perturbation, geometric, partial_sum, alternating, explicit_list };

std::string to_string(SequenceFamily family);
SequenceFamily sequence_family_from_string(const std::string& name);

// A deterministic rule n -> x_n (n starting at 1):
//   constant:      x_n = base
//   perturbation:  x_n = base + (1/n) * perturbation
//   geometric:     x_n = base^n
//   partial_sum:   x_n = sum_{k=1..n} base^k
//   alternating:   x_n = (-1)^n * base
//   explicit_list: x_n = list[n-1]
struct SequenceSpec {
    SequenceFamily family = SequenceFamily::constant;
    AlgebraElement base;
    std::optional<AlgebraElement> perturbation;
    std::vector<AlgebraElement> list;
    std::int64_t horizon = 0;

    std::string describe() const;
    void validate() const;
};

// O(1) amortized generation along increasing n.
class SequenceCursor {
public:
    explicit SequenceCursor(const SequenceSpec& spec);
    std::int64_t index() const { return n_; }
    const AlgebraElement& value() const { return current_; }
    void advance();

private:
    const SequenceSpec* spec_;
    std::int64_t n_;
    AlgebraElement current_;
    AlgebraElement power_; // running base^n for geometric / partial_sum
    void compute();
};

enum class VerdictStatus { converged, not_within_horizon };
std::string to_string(VerdictStatus status);

struct TracePoint {
    std::int64_t n = 0;
    double mu = 0.0;
    double nu = 0.0;
};

struct ConvergenceVerdict {
    VerdictStatus status = VerdictStatus::not_within_horizon;
    std::int64_t n0 = 0; // valid when converged
    double r = 0.0;
    double t = 0.0;
    std::int64_t horizon = 0;
    std::optional<std::int64_t> p_max;
    std::vector<TracePoint> trace;

    bool converged() const { return status == VerdictStatus::converged; }
};

// Least n0 <= horizon with mu(x_n - x, t) > 1-r and nu(x_n - x, t) < r for
// every n in [n0, horizon].
ConvergenceVerdict fuzzy_converges(const IFNormModel& model, const SequenceSpec& seq,
                                   const AlgebraElement& limit, double r, double t);

struct LimitTrendRecord {
    double t = 0.0;
    bool monotone_tail = false;   // mu nondecreasing / nu nonincreasing on the tail half
    double final_mu = 0.0;
    double final_nu = 0.0;
    bool trend_ok = false;        // monotone tail and final values within 0.01 of (1,0)
    std::vector<std::pair<double, VerdictStatus>> verdicts; // (r, status) cross-checks
};

struct LimitCheckResult {
    bool passed = false; // trend ok for every t and no cross-check disagreement
    std::vector<LimitTrendRecord> records;
    std::vector<TracePoint> trace; // trace at the first t
};

// Empirical surrogate for the limit formulation of convergence: the trend of
// mu/nu toward (1,0) plus agreement with fuzzy_converges at r in {0.5,0.1,0.01}.
LimitCheckResult limit_formulation_check(const IFNormModel& model, const SequenceSpec& seq,
                                         const AlgebraElement& limit,
                                         const std::vector<double>& t_set);

// Cauchy verdict: least n0 such that all gaps x_{n+p} - x_n with n in
// [n0, horizon - p_max] and p in [1, p_max] stay inside the (r,t) ball.
ConvergenceVerdict fuzzy_cauchy(const IFNormModel& model, const SequenceSpec& seq, double r,
                                double t, std::int64_t p_max);

struct ProductConvergenceReport {
    ConvergenceVerdict x_verdict;
    ConvergenceVerdict y_verdict;
    std::optional<ConvergenceVerdict> product_verdict; // set when both factors converge
    bool consistent = true; // false only on both-converged-product-diverged
};

ProductConvergenceReport product_convergence_check(const IFNormModel& model,
                                                   const SequenceSpec& seq_x,
                                                   const AlgebraElement& x,
                                                   const SequenceSpec& seq_y,
                                                   const AlgebraElement& y, double r, double t);

// 1e4 for scalar/series models, 1e3 for matrix models.
std::int64_t default_horizon(const AlgebraModel& model);

// One element per row, payload layout as in algebra CSV I/O.
std::vector<AlgebraElement> load_sequence_csv(const AlgebraModel& model,
                                              const std::filesystem::path& path);

} // namespace ifba

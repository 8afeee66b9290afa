#include "ifba/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ifba/csv.hpp"
#include "ifba/errors.hpp"

namespace ifba {

namespace {

constexpr double kTrendGap = 0.01;   // final distance to the limit pair
constexpr double kMonotoneSlack = 1e-12;

void require_rt(double r, double t) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0,1)");
    if (!(t > 0.0)) throw DomainError("t must be positive");
}

// Log-spaced index set over [1, horizon] including both ends; used to keep
// report traces small.
std::set<std::int64_t> trace_indices(std::int64_t horizon, std::size_t max_points = 48) {
    std::set<std::int64_t> idx;
    idx.insert(1);
    idx.insert(horizon);
    const double lo = 0.0, hi = std::log(static_cast<double>(horizon));
    for (std::size_t k = 0; k < max_points; ++k) {
        const double f = lo + (hi - lo) * static_cast<double>(k) / (max_points - 1);
        auto n = static_cast<std::int64_t>(std::llround(std::exp(f)));
        idx.insert(std::clamp<std::int64_t>(n, 1, horizon));
    }
    return idx;
}

} // namespace

std::string to_string(SequenceFamily family) {
    switch (family) {
        case SequenceFamily::constant: return "constant";
        case SequenceFamily::perturbation: return "perturbation";
        case SequenceFamily::geometric: return "geometric";
        case SequenceFamily::partial_sum: return "partial_sum";
        case SequenceFamily::alternating: return "alternating";
        case SequenceFamily::explicit_list: return "explicit_list";
    }
    return "unknown";
}

SequenceFamily sequence_family_from_string(const std::string& name) {
    if (name == "constant") return SequenceFamily::constant;
    if (name == "perturbation") return SequenceFamily::perturbation;
    if (name == "geometric") return SequenceFamily::geometric;
    if (name == "partial_sum" || name == "partial-sum") return SequenceFamily::partial_sum;
    if (name == "alternating") return SequenceFamily::alternating;
    if (name == "explicit_list" || name == "csv") return SequenceFamily::explicit_list;
    throw ConfigError("unknown sequence family: " + name);
}

std::string SequenceSpec::describe() const {
    return to_string(family) + ", horizon " + std::to_string(horizon);
}

void SequenceSpec::validate() const {
    if (horizon < 1) throw DomainError("sequence horizon must be >= 1");
    if (family == SequenceFamily::perturbation) {
        if (!perturbation) throw ConfigError("perturbation family needs a perturbation element");
        if (!(perturbation->model() == base.model()))
            throw ModelMismatchError("perturbation element model differs from the base model");
    }
    if (family == SequenceFamily::explicit_list) {
        if (list.empty()) throw ConfigError("explicit sequence has no elements");
        if (static_cast<std::size_t>(horizon) > list.size())
            throw ConfigError("horizon exceeds explicit sequence length");
        for (const auto& e : list)
            if (!(e.model() == base.model()))
                throw ModelMismatchError("explicit sequence elements span multiple models");
    }
}

SequenceCursor::SequenceCursor(const SequenceSpec& spec)
    : spec_(&spec), n_(1), current_(spec.base), power_(spec.base) {
    spec.validate();
    compute();
}

void SequenceCursor::compute() {
    const auto& s = *spec_;
    switch (s.family) {
        case SequenceFamily::constant:
            current_ = s.base;
            break;
        case SequenceFamily::perturbation:
            current_ = add(s.base, scale(1.0 / static_cast<double>(n_), *s.perturbation));
            break;
        case SequenceFamily::geometric:
            current_ = power_;
            break;
        case SequenceFamily::partial_sum:
            if (n_ == 1) current_ = power_;
            break; // advance() accumulates
        case SequenceFamily::alternating:
            current_ = (n_ % 2 == 0) ? s.base : scale(-1.0, s.base);
            break;
        case SequenceFamily::explicit_list: {
            // Scans advance once past the horizon; hold the last element.
            const auto last = static_cast<std::int64_t>(s.list.size());
            current_ = s.list[static_cast<std::size_t>(std::min(n_, last) - 1)];
            break;
        }
    }
}

void SequenceCursor::advance() {
    ++n_;
    const auto& s = *spec_;
    if (s.family == SequenceFamily::geometric || s.family == SequenceFamily::partial_sum) {
        power_ = mul(power_, s.base);
        if (s.family == SequenceFamily::partial_sum) {
            current_ = add(current_, power_);
            return;
        }
    }
    compute();
}

std::string to_string(VerdictStatus status) {
    return status == VerdictStatus::converged ? "converged" : "not_within_horizon";
}

ConvergenceVerdict fuzzy_converges(const IFNormModel& model, const SequenceSpec& seq,
                                   const AlgebraElement& limit, double r, double t) {
    require_rt(r, t);
    if (!(limit.model() == seq.base.model()))
        throw ModelMismatchError("limit element model differs from the sequence model");

    ConvergenceVerdict verdict;
    verdict.r = r;
    verdict.t = t;
    verdict.horizon = seq.horizon;

    const auto sampled = trace_indices(seq.horizon);
    std::int64_t last_failure = 0;
    SequenceCursor cursor(seq);
    for (std::int64_t n = 1; n <= seq.horizon; ++n, cursor.advance()) {
        const auto p = membership(model, sub(cursor.value(), limit), t);
        const bool holds = p.mu > 1.0 - r && p.nu < r;
        if (!holds) last_failure = n;
        if (sampled.count(n)) verdict.trace.push_back({n, p.mu, p.nu});
    }
    if (last_failure < seq.horizon) {
        verdict.status = VerdictStatus::converged;
        verdict.n0 = last_failure + 1;
    } else {
        verdict.status = VerdictStatus::not_within_horizon;
    }
    return verdict;
}

LimitCheckResult limit_formulation_check(const IFNormModel& model, const SequenceSpec& seq,
                                         const AlgebraElement& limit,
                                         const std::vector<double>& t_set) {
    if (t_set.empty()) throw DomainError("t_set must be nonempty");
    seq.validate();

    LimitCheckResult result;
    result.passed = true;
    const std::vector<double> cross_r = {0.5, 0.1, 0.01};

    bool first = true;
    for (double t : t_set) {
        if (!(t > 0.0)) throw DomainError("t values must be positive");
        LimitTrendRecord rec;
        rec.t = t;

        const std::int64_t tail_start = std::max<std::int64_t>(1, seq.horizon / 2);
        bool monotone = true;
        double prev_mu = -1.0, prev_nu = 2.0;
        double final_mu = 0.0, final_nu = 1.0;
        const auto sampled = trace_indices(seq.horizon);
        SequenceCursor cursor(seq);
        for (std::int64_t n = 1; n <= seq.horizon; ++n, cursor.advance()) {
            const auto p = membership(model, sub(cursor.value(), limit), t);
            if (n >= tail_start) {
                if (p.mu < prev_mu - kMonotoneSlack || p.nu > prev_nu + kMonotoneSlack)
                    monotone = false;
                prev_mu = p.mu;
                prev_nu = p.nu;
            }
            if (n == seq.horizon) {
                final_mu = p.mu;
                final_nu = p.nu;
            }
            if (first && sampled.count(n)) result.trace.push_back({n, p.mu, p.nu});
        }
        rec.monotone_tail = monotone;
        rec.final_mu = final_mu;
        rec.final_nu = final_nu;
        rec.trend_ok = monotone && (1.0 - final_mu < kTrendGap) && (final_nu < kTrendGap);

        for (double r : cross_r) {
            const auto v = fuzzy_converges(model, seq, limit, r, t);
            rec.verdicts.emplace_back(r, v.status);
            // Thm-3.3-style consistency: a passing trend must be confirmed by
            // the ball-based verdict at every probed r.
            if (rec.trend_ok && v.status != VerdictStatus::converged) result.passed = false;
        }
        if (!rec.trend_ok) result.passed = false;
        result.records.push_back(std::move(rec));
        first = false;
    }
    return result;
}

ConvergenceVerdict fuzzy_cauchy(const IFNormModel& model, const SequenceSpec& seq, double r,
                                double t, std::int64_t p_max) {
    require_rt(r, t);
    if (p_max < 1) throw DomainError("p_max must be >= 1");
    if (p_max >= seq.horizon) throw DomainError("p_max must be smaller than the horizon");

    ConvergenceVerdict verdict;
    verdict.r = r;
    verdict.t = t;
    verdict.horizon = seq.horizon;
    verdict.p_max = p_max;

    // Sliding window of the next p_max elements beyond n.
    std::vector<AlgebraElement> window;
    window.reserve(static_cast<std::size_t>(p_max) + 1);
    SequenceCursor cursor(seq);
    for (std::int64_t k = 0; k <= p_max; ++k) {
        window.push_back(cursor.value());
        cursor.advance();
    }

    const std::int64_t last_n = seq.horizon - p_max;
    const auto sampled = trace_indices(last_n);
    std::int64_t last_failure = 0;
    for (std::int64_t n = 1; n <= last_n; ++n) {
        double worst_mu = 1.0, worst_nu = 0.0;
        bool holds = true;
        for (std::int64_t p = 1; p <= p_max; ++p) {
            const auto pair =
                membership(model, sub(window[static_cast<std::size_t>(p)], window[0]), t);
            worst_mu = std::min(worst_mu, pair.mu);
            worst_nu = std::max(worst_nu, pair.nu);
            if (!(pair.mu > 1.0 - r && pair.nu < r)) holds = false;
        }
        if (!holds) last_failure = n;
        if (sampled.count(n)) verdict.trace.push_back({n, worst_mu, worst_nu});

        if (n < last_n) {
            window.erase(window.begin());
            window.push_back(cursor.value());
            cursor.advance();
        }
    }
    if (last_failure < last_n) {
        verdict.status = VerdictStatus::converged;
        verdict.n0 = last_failure + 1;
    } else {
        verdict.status = VerdictStatus::not_within_horizon;
    }
    return verdict;
}

ProductConvergenceReport product_convergence_check(const IFNormModel& model,
                                                   const SequenceSpec& seq_x,
                                                   const AlgebraElement& x,
                                                   const SequenceSpec& seq_y,
                                                   const AlgebraElement& y, double r, double t) {
    require_rt(r, t);
    if (!(seq_x.base.model() == seq_y.base.model()))
        throw ModelMismatchError("the two sequences use different models");
    if (!seq_x.base.model().unital)
        throw DomainError("product convergence check requires a unital model");

    ProductConvergenceReport report;
    report.x_verdict = fuzzy_converges(model, seq_x, x, r, t);
    report.y_verdict = fuzzy_converges(model, seq_y, y, r, t);
    if (!report.x_verdict.converged() || !report.y_verdict.converged()) return report;

    // Materialize the pointwise product as an explicit sequence.
    const std::int64_t horizon = std::min(seq_x.horizon, seq_y.horizon);
    SequenceSpec prod;
    prod.family = SequenceFamily::explicit_list;
    prod.base = mul(seq_x.base, seq_y.base);
    prod.horizon = horizon;
    prod.list.reserve(static_cast<std::size_t>(horizon));
    SequenceCursor cx(seq_x), cy(seq_y);
    for (std::int64_t n = 1; n <= horizon; ++n) {
        prod.list.push_back(mul(cx.value(), cy.value()));
        cx.advance();
        cy.advance();
    }
    report.product_verdict = fuzzy_converges(model, prod, mul(x, y), r, t);
    report.consistent = report.product_verdict->converged();
    return report;
}

std::int64_t default_horizon(const AlgebraModel& model) {
    return model.kind == AlgebraKind::matrix ? 1000 : 10000;
}

std::vector<AlgebraElement> load_sequence_csv(const AlgebraModel& model,
                                              const std::filesystem::path& path) {
    const auto rows = csv::as_numeric(csv::read_cells(path), "sequence " + path.filename().string());
    if (rows.empty()) throw ConfigError("sequence CSV is empty: " + path.string());
    std::vector<AlgebraElement> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != model.payload_size())
            throw ConfigError("sequence CSV row width " + std::to_string(row.size()) +
                              " does not match model " + model.spec_string());
        out.emplace_back(model, row);
    }
    return out;
}

} // namespace ifba

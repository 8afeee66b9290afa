#include "ifba/if_norm.hpp"

#include <algorithm>
#include <cmath>

#include "ifba/errors.hpp"

namespace ifba {

namespace {

constexpr double kEqTol = 1e-12;
constexpr double kLimitGap = 0.01; // admissible distance to the limit at the ladder ends
constexpr int kIdempotencyGrid = 101;

void require_ball(double r, double t) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("ball radius r must lie in (0,1)");
    if (!(t > 0.0)) throw DomainError("ball parameter t must be positive");
}

} // namespace

IFNormModel IFNormModel::induced(const AlgebraModel& algebra) {
    return IFNormModel{algebra,
                       TriangularNorm{TNormKind::minimum, std::nullopt},
                       TriangularConorm{TConormKind::maximum, std::nullopt}};
}

FuzzyDegreePair membership(const IFNormModel& model, const AlgebraElement& x, double t) {
    if (!(t > 0.0)) throw DomainError("membership requires t > 0");
    if (!(x.model() == model.algebra))
        throw ModelMismatchError("element does not belong to the model's algebra");
    const double n = crisp_norm(x);
    const double mu = t / (t + n);
    // nu = ||x||/(t+||x||) computed as the complement so mu + nu == 1 holds
    // bit-exactly, matching the induced-model contract.
    return {mu, 1.0 - mu};
}

bool in_open_ball(const IFNormModel& model, const BallSpec& ball, const AlgebraElement& y) {
    require_ball(ball.r, ball.t);
    const auto gap = sub(ball.center, y);
    const auto p = membership(model, gap, ball.t);
    return p.mu > 1.0 - ball.r && p.nu < ball.r;
}

double crisp_ball_radius(const BallSpec& ball) {
    require_ball(ball.r, ball.t);
    return ball.t * ball.r / (1.0 - ball.r);
}

std::string to_string(AxiomStatus status) {
    switch (status) {
        case AxiomStatus::pass: return "pass";
        case AxiomStatus::fail: return "fail";
        case AxiomStatus::vacuous: return "vacuous";
    }
    return "unknown";
}

const IfnaAxiomRecord& IfnaAxiomReport::record(const std::string& id) const {
    for (const auto& rec : axioms)
        if (rec.id == id) return rec;
    throw ConfigError("no such axiom record: " + id);
}

std::vector<double> default_t_ladder() {
    std::vector<double> ladder;
    ladder.reserve(13);
    for (int k = 0; k <= 12; ++k) ladder.push_back(std::pow(10.0, -3.0 + 0.5 * k));
    return ladder;
}

namespace {

struct SampleSet {
    std::vector<AlgebraElement> xs;
    std::vector<AlgebraElement> ys;
    std::vector<double> cs;
    std::vector<double> ss;
    std::vector<double> ts;
};

SampleSet draw_samples(const AlgebraModel& algebra, std::int64_t n, Rng& rng) {
    SampleSet set;
    set.xs.reserve(n);
    set.ys.reserve(n);
    set.cs.reserve(n);
    set.ss.reserve(n);
    set.ts.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) {
        set.xs.push_back(random_element(algebra, rng, -10.0, 10.0));
        set.ys.push_back(random_element(algebra, rng, -10.0, 10.0));
        double c = 0.0;
        do {
            c = rng.uniform(-10.0, 10.0);
        } while (std::abs(c) < 1e-3);
        set.cs.push_back(c);
        set.ss.push_back(rng.log_uniform(1e-2, 1e2));
        set.ts.push_back(rng.log_uniform(1e-2, 1e2));
    }
    return set;
}

// Scale pairs for the unbalanced-norm search on the multiplicative axioms;
// the (10, 1e-3) pair is the canonical hit for induced models.
const std::vector<std::pair<double, double>>& targeted_scales() {
    static const std::vector<std::pair<double, double>> pairs = {
        {10.0, 1e-3}, {10.0, 1e-2}, {100.0, 1e-3}, {2.0, 1e-3},   {10.0, 0.1},
        {100.0, 1e-2}, {1000.0, 1e-3}, {5.0, 5e-3}, {50.0, 1e-3},
    };
    return pairs;
}

} // namespace

IfnaAxiomReport check_ifna_axioms(const IFNormModel& model, std::int64_t sample_count,
                                  std::uint64_t seed) {
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");

    Rng rng(seed);
    const auto& algebra = model.algebra;
    const SampleSet smp = draw_samples(algebra, sample_count, rng);
    const auto theta = AlgebraElement::zero(algebra);
    const auto ladder = default_t_ladder();
    const bool is_null_product = algebra.kind == AlgebraKind::null_product;

    IfnaAxiomReport report;
    report.model = algebra.spec_string();
    report.tnorm = to_string(model.tnorm.kind);
    report.tconorm = to_string(model.tconorm.kind);
    report.seed = seed;
    report.samples = sample_count;
    report.t_ladder = ladder;
    report.element_law = "entries uniform in [-10,10]";
    report.time_law = "log-uniform in [1e-2,1e2]";
    report.scalar_law = "uniform in [-10,10], |c| >= 1e-3";
    report.limit_gate =
        "ladder scaled by ||x||; final distance to the limit < 0.01; monotone on the base ladder";

    auto deg = [&](const AlgebraElement& e, double t) { return membership(model, e, t); };

    auto scan = [&](const std::string& id, auto&& check, std::int64_t used,
                    bool vacuous_candidate = false) {
        IfnaAxiomRecord rec;
        rec.id = id;
        rec.samples_used = used;
        auto witness = check();
        if (witness) {
            rec.status = AxiomStatus::fail;
            rec.witness = std::move(witness);
        } else {
            rec.status = vacuous_candidate ? AxiomStatus::vacuous : AxiomStatus::pass;
        }
        report.axioms.push_back(std::move(rec));
    };

    using W = std::optional<IfnaWitness>;

    // (i) mu + nu <= 1
    scan("i", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto p = deg(smp.xs[i], smp.ts[i]);
            if (p.mu + p.nu > 1.0 + kEqTol)
                return IfnaWitness{smp.xs[i], {}, {}, {}, smp.ts[i], p.mu + p.nu, 1.0,
                                   "mu(x,t)+nu(x,t) <= 1", "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (ii) mu > 0
    scan("ii", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto p = deg(smp.xs[i], smp.ts[i]);
            if (!(p.mu > 0.0))
                return IfnaWitness{smp.xs[i], {}, {}, {}, smp.ts[i], p.mu, 0.0,
                                   "mu(x,t) > 0", "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (iii) mu = 1 iff x = theta
    scan("iii", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto pth = deg(theta, smp.ts[i]);
            if (std::abs(pth.mu - 1.0) > kEqTol)
                return IfnaWitness{theta, {}, {}, {}, smp.ts[i], pth.mu, 1.0,
                                   "mu(theta,t) = 1", "random[" + std::to_string(i) + "]"};
            if (!smp.xs[i].is_zero()) {
                const auto p = deg(smp.xs[i], smp.ts[i]);
                if (!(p.mu < 1.0))
                    return IfnaWitness{smp.xs[i], {}, {}, {}, smp.ts[i], p.mu, 1.0,
                                       "mu(x,t) < 1 for x != theta",
                                       "random[" + std::to_string(i) + "]"};
            }
        }
        return std::nullopt;
    }, sample_count);

    // (iv) mu(cx,t) = mu(x,t/|c|)
    scan("iv", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double c = smp.cs[i];
            const double lhs = deg(scale(c, smp.xs[i]), smp.ts[i]).mu;
            const double rhs = deg(smp.xs[i], smp.ts[i] / std::abs(c)).mu;
            if (std::abs(lhs - rhs) > kEqTol)
                return IfnaWitness{smp.xs[i], {}, c, {}, smp.ts[i], lhs, rhs,
                                   "mu(cx,t) = mu(x,t/|c|)", "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (v) mu(x,s) * mu(y,t) <= mu(x+y,s+t)
    scan("v", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double lhs = tnorm_eval(model.tnorm, deg(smp.xs[i], smp.ss[i]).mu,
                                          deg(smp.ys[i], smp.ts[i]).mu);
            const double rhs = deg(add(smp.xs[i], smp.ys[i]), smp.ss[i] + smp.ts[i]).mu;
            if (lhs > rhs + kEqTol)
                return IfnaWitness{smp.xs[i], smp.ys[i], {}, smp.ss[i], smp.ts[i], lhs, rhs,
                                   "mu(x,s)*mu(y,t) <= mu(x+y,s+t)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (vi) max{mu(x,s),mu(y,t)} <= mu(xy,s+t): targeted unbalanced pairs first.
    std::int64_t mult_used = sample_count;
    auto mult_targets = [&]() -> std::vector<std::pair<AlgebraElement, AlgebraElement>> {
        std::vector<std::pair<AlgebraElement, AlgebraElement>> out;
        if (!algebra.unital) return out;
        const auto e = AlgebraElement::unit(algebra);
        for (const auto& [alpha, beta] : targeted_scales())
            out.emplace_back(scale(alpha, e), scale(beta, e));
        return out;
    }();
    mult_used += static_cast<std::int64_t>(mult_targets.size());

    scan("vi", [&]() -> W {
        for (std::size_t k = 0; k < mult_targets.size(); ++k) {
            const auto& [x, y] = mult_targets[k];
            const double lhs = std::max(deg(x, 1.0).mu, deg(y, 1.0).mu);
            const double rhs = deg(mul(x, y), 2.0).mu;
            if (lhs > rhs + kEqTol)
                return IfnaWitness{x, y, {}, 1.0, 1.0, lhs, rhs,
                                   "max{mu(x,s),mu(y,t)} <= mu(xy,s+t)",
                                   "targeted[" + std::to_string(k) + "]"};
        }
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double lhs =
                std::max(deg(smp.xs[i], smp.ss[i]).mu, deg(smp.ys[i], smp.ts[i]).mu);
            const double rhs = deg(mul(smp.xs[i], smp.ys[i]), smp.ss[i] + smp.ts[i]).mu;
            if (lhs > rhs + kEqTol)
                return IfnaWitness{smp.xs[i], smp.ys[i], {}, smp.ss[i], smp.ts[i], lhs, rhs,
                                   "max{mu(x,s),mu(y,t)} <= mu(xy,s+t)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, mult_used, is_null_product);

    // (vii) limits of mu: -> 1 as t -> inf, -> 0 as t -> 0.
    scan("vii", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto& x = smp.xs[i];
            if (x.is_zero()) continue; // t->0 limit is stated for x != theta
            double prev = -1.0;
            for (double t : ladder) {
                const double m = deg(x, t).mu;
                if (m < prev - kEqTol)
                    return IfnaWitness{x, {}, {}, prev, t, m, prev,
                                       "mu(x,.) nondecreasing on the t-ladder",
                                       "random[" + std::to_string(i) + "]"};
                prev = m;
            }
            const double s = crisp_norm(x);
            const double top = deg(x, ladder.back() * s).mu;
            if (1.0 - top >= kLimitGap)
                return IfnaWitness{x, {}, {}, {}, ladder.back() * s, top, 1.0,
                                   "mu(x,t) -> 1 as t -> inf (scaled-ladder gate)",
                                   "random[" + std::to_string(i) + "]"};
            const double bottom = deg(x, ladder.front() * s).mu;
            if (bottom >= kLimitGap)
                return IfnaWitness{x, {}, {}, {}, ladder.front() * s, bottom, 0.0,
                                   "mu(x,t) -> 0 as t -> 0 (scaled-ladder gate)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (viii) nu < 1
    scan("viii", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto p = deg(smp.xs[i], smp.ts[i]);
            if (!(p.nu < 1.0))
                return IfnaWitness{smp.xs[i], {}, {}, {}, smp.ts[i], p.nu, 1.0,
                                   "nu(x,t) < 1", "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (ix) nu = 0 iff x = theta
    scan("ix", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto pth = deg(theta, smp.ts[i]);
            if (std::abs(pth.nu) > kEqTol)
                return IfnaWitness{theta, {}, {}, {}, smp.ts[i], pth.nu, 0.0,
                                   "nu(theta,t) = 0", "random[" + std::to_string(i) + "]"};
            if (!smp.xs[i].is_zero()) {
                const auto p = deg(smp.xs[i], smp.ts[i]);
                if (!(p.nu > 0.0))
                    return IfnaWitness{smp.xs[i], {}, {}, {}, smp.ts[i], p.nu, 0.0,
                                       "nu(x,t) > 0 for x != theta",
                                       "random[" + std::to_string(i) + "]"};
            }
        }
        return std::nullopt;
    }, sample_count);

    // (x) nu(cx,t) = nu(x,t/|c|)
    scan("x", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double c = smp.cs[i];
            const double lhs = deg(scale(c, smp.xs[i]), smp.ts[i]).nu;
            const double rhs = deg(smp.xs[i], smp.ts[i] / std::abs(c)).nu;
            if (std::abs(lhs - rhs) > kEqTol)
                return IfnaWitness{smp.xs[i], {}, c, {}, smp.ts[i], lhs, rhs,
                                   "nu(cx,t) = nu(x,t/|c|)", "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (xi) nu(x,s) <> nu(y,t) >= nu(x+y,s+t)
    scan("xi", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double lhs = tconorm_eval(model.tconorm, deg(smp.xs[i], smp.ss[i]).nu,
                                            deg(smp.ys[i], smp.ts[i]).nu);
            const double rhs = deg(add(smp.xs[i], smp.ys[i]), smp.ss[i] + smp.ts[i]).nu;
            if (lhs < rhs - kEqTol)
                return IfnaWitness{smp.xs[i], smp.ys[i], {}, smp.ss[i], smp.ts[i], lhs, rhs,
                                   "nu(x,s)<>nu(y,t) >= nu(x+y,s+t)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (xii) min{nu(x,s),nu(y,t)} >= nu(xy,s+t)
    scan("xii", [&]() -> W {
        for (std::size_t k = 0; k < mult_targets.size(); ++k) {
            const auto& [x, y] = mult_targets[k];
            const double lhs = std::min(deg(x, 1.0).nu, deg(y, 1.0).nu);
            const double rhs = deg(mul(x, y), 2.0).nu;
            if (lhs < rhs - kEqTol)
                return IfnaWitness{x, y, {}, 1.0, 1.0, lhs, rhs,
                                   "min{nu(x,s),nu(y,t)} >= nu(xy,s+t)",
                                   "targeted[" + std::to_string(k) + "]"};
        }
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const double lhs =
                std::min(deg(smp.xs[i], smp.ss[i]).nu, deg(smp.ys[i], smp.ts[i]).nu);
            const double rhs = deg(mul(smp.xs[i], smp.ys[i]), smp.ss[i] + smp.ts[i]).nu;
            if (lhs < rhs - kEqTol)
                return IfnaWitness{smp.xs[i], smp.ys[i], {}, smp.ss[i], smp.ts[i], lhs, rhs,
                                   "min{nu(x,s),nu(y,t)} >= nu(xy,s+t)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, mult_used, is_null_product);

    // (xiii) limits of nu: -> 0 as t -> inf, -> 1 as t -> 0.
    scan("xiii", [&]() -> W {
        for (std::int64_t i = 0; i < sample_count; ++i) {
            const auto& x = smp.xs[i];
            if (x.is_zero()) continue;
            double prev = 2.0;
            for (double t : ladder) {
                const double m = deg(x, t).nu;
                if (m > prev + kEqTol)
                    return IfnaWitness{x, {}, {}, prev, t, m, prev,
                                       "nu(x,.) nonincreasing on the t-ladder",
                                       "random[" + std::to_string(i) + "]"};
                prev = m;
            }
            const double s = crisp_norm(x);
            const double top = deg(x, ladder.back() * s).nu;
            if (top >= kLimitGap)
                return IfnaWitness{x, {}, {}, {}, ladder.back() * s, top, 0.0,
                                   "nu(x,t) -> 0 as t -> inf (scaled-ladder gate)",
                                   "random[" + std::to_string(i) + "]"};
            const double bottom = deg(x, ladder.front() * s).nu;
            if (1.0 - bottom >= kLimitGap)
                return IfnaWitness{x, {}, {}, {}, ladder.front() * s, bottom, 1.0,
                                   "nu(x,t) -> 1 as t -> 0 (scaled-ladder gate)",
                                   "random[" + std::to_string(i) + "]"};
        }
        return std::nullopt;
    }, sample_count);

    // (xiv) a*a = a and a<>a = a on the unit-interval grid.
    scan("xiv", [&]() -> W {
        const auto tn = is_idempotent(model.tnorm, kIdempotencyGrid);
        if (!tn.idempotent) {
            const double a = *tn.witness;
            return IfnaWitness{{}, {}, a, {}, {}, tnorm_eval(model.tnorm, a, a), a,
                               "a*a = a (t-norm idempotency)", "grid"};
        }
        const auto tc = is_idempotent(model.tconorm, kIdempotencyGrid);
        if (!tc.idempotent) {
            const double a = *tc.witness;
            return IfnaWitness{{}, {}, a, {}, {}, tconorm_eval(model.tconorm, a, a), a,
                               "a<>a = a (t-conorm idempotency)", "grid"};
        }
        return std::nullopt;
    }, kIdempotencyGrid);

    return report;
}

} // namespace ifba

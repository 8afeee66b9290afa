#include "ifba/divisors.hpp"

#include <algorithm>
#include <cmath>

#include "ifba/errors.hpp"

namespace ifba {

namespace {

constexpr double kDecayGap = 0.01; // required closeness of mu(product,t) to 1

const char* kSeparationConvention =
    "complement of the open ball: mu(zn,t) <= 1-r or nu(zn,t) >= r "
    "(the definition's parenthetical states the strict form)";

std::vector<std::int64_t> trace_points(std::int64_t horizon) {
    std::vector<std::int64_t> pts;
    for (std::int64_t n = 1; n <= horizon; n = std::max(n + 1, n + n / 4))
        pts.push_back(n);
    if (pts.back() != horizon) pts.push_back(horizon);
    return pts;
}

} // namespace

std::string to_string(TdzSide side) {
    return side == TdzSide::left ? "left" : "right";
}

TdzSearchResult find_tdz_witness(const IFNormModel& model, const AlgebraElement& z, double r,
                                 double t, std::int64_t horizon, TdzSide side) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0,1)");
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    const auto& algebra = z.model();
    if (algebra.kind != AlgebraKind::matrix && algebra.kind != AlgebraKind::scalar)
        throw UnsupportedOperationError("TDZ search supports scalar and matrix models only");

    if (direct_inverse(z)) return {std::nullopt, "z is invertible per the direct oracle"};

    // Separation feasibility for unit-norm sequences under the induced norm:
    // mu(zn,t) = t/(t+1) must fail ball membership, i.e. r <= 1/(1+t).
    {
        const double mu_unit = t / (t + 1.0);
        const double nu_unit = 1.0 / (t + 1.0);
        if (mu_unit > 1.0 - r && nu_unit < r)
            return {std::nullopt,
                    "separation fails for unit-norm elements at this (r,t): "
                    "B(theta,r,t) contains the whole unit sphere"};
    }

    TDZWitness witness;
    witness.z = z;
    witness.side = side;
    witness.r = r;
    witness.t = t;
    witness.separation_convention = kSeparationConvention;

    if (algebra.kind == AlgebraKind::scalar) {
        witness.zn = AlgebraElement::from_scalar(1.0);
        witness.sequence_rule = "constant_unit_scalar";
    } else {
        const int n = algebra.dim;
        // Kernel direction of z (right kernel for the left product, left
        // kernel for the right product).
        std::optional<std::vector<double>> v;
        if (side == TdzSide::left) {
            v = kernel_vector(z);
        } else {
            std::vector<double> tdata(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    tdata[static_cast<std::size_t>(j) * n + i] =
                        z.data()[static_cast<std::size_t>(i) * n + j];
            v = kernel_vector(AlgebraElement(algebra, std::move(tdata)));
        }
        if (!v)
            return {std::nullopt, "oracle reports non-invertible but elimination found no kernel"};

        // Outer product against the first standard basis vector: for the left
        // side zn = v e1^T gives z*zn = (z v) e1^T ~ theta.
        std::vector<double> zn(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            if (side == TdzSide::left)
                zn[static_cast<std::size_t>(i) * n + 0] = (*v)[static_cast<std::size_t>(i)];
            else
                zn[static_cast<std::size_t>(0) * n + i] = (*v)[static_cast<std::size_t>(i)];
        }
        witness.zn = AlgebraElement(algebra, std::move(zn));
        witness.sequence_rule = "kernel_outer_product";
    }

    const auto product =
        side == TdzSide::left ? mul(z, witness.zn) : mul(witness.zn, z);
    witness.annihilation_norm = crisp_norm(product);

    const auto sep = membership(model, witness.zn, t);
    witness.separation_mu = sep.mu;
    witness.separation_nu = sep.nu;
    const bool separated = sep.mu <= 1.0 - r || sep.nu >= r;
    if (!separated)
        return {std::nullopt, "constructed zn does not stay outside B(theta,r,t)"};

    const auto decay = membership(model, product, t);
    if (1.0 - decay.mu >= kDecayGap || decay.nu >= kDecayGap)
        return {std::nullopt,
                "kernel quality insufficient: mu(z*zn,t) does not reach the limit"};

    for (std::int64_t n : trace_points(horizon)) {
        witness.decay_trace.push_back({n, decay.mu, decay.nu});
        witness.separation_trace.push_back({n, sep.mu, sep.nu});
    }
    return {std::move(witness), ""};
}

TdzPopulationReport verify_tdz_subset_singular(const IFNormModel& model,
                                               std::int64_t sample_count, std::uint64_t seed,
                                               double r, double t) {
    const auto& algebra = model.algebra;
    if (algebra.kind != AlgebraKind::matrix)
        throw UnsupportedOperationError("population verification requires a matrix model");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");

    TdzPopulationReport report;
    report.model = algebra.spec_string();
    report.samples = sample_count;
    report.seed = seed;
    report.r = r;
    report.t = t;

    Rng rng(seed);
    const int n = algebra.dim;
    for (std::int64_t i = 0; i < sample_count; ++i) {
        AlgebraElement z = AlgebraElement::zero(algebra);
        if (i % 2 == 0) {
            z = random_element(algebra, rng, -1.0, 1.0);
        } else {
            // Product with a rank-deficient diagonal: A * D * B with one
            // diagonal entry forced to exact zero.
            const auto a = random_element(algebra, rng, -1.0, 1.0);
            const auto b = random_element(algebra, rng, -1.0, 1.0);
            std::vector<double> diag(static_cast<std::size_t>(n) * n, 0.0);
            for (int k = 0; k < n; ++k)
                diag[static_cast<std::size_t>(k) * n + k] = rng.uniform(0.5, 2.0);
            const int dead = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
            diag[static_cast<std::size_t>(dead) * n + dead] = 0.0;
            z = mul(a, mul(AlgebraElement(algebra, std::move(diag)), b));
            ++report.constructed_singular_count;
        }

        const bool invertible = direct_inverse(z).has_value();
        if (!invertible) ++report.oracle_noninvertible_count;

        const auto search = find_tdz_witness(model, z, r, t, 64);
        if (search.found()) {
            ++report.witness_count;
            if (invertible) {
                ++report.violation_count;
                if (!report.first_violation) report.first_violation = z;
            }
        }
    }
    report.consistent = report.violation_count == 0 &&
                        report.witness_count == report.oracle_noninvertible_count;
    return report;
}

} // namespace ifba

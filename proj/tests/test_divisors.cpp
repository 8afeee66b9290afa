#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ifba/divisors.hpp"
#include "ifba/errors.hpp"
#include "support.hpp"

using namespace ifba;
using testsupport::matrix2;

namespace {
const auto kMatrix2 = IFNormModel::induced(AlgebraModel::matrix(2));
const auto kScalar = IFNormModel::induced(AlgebraModel::scalar());
} // namespace

TEST_CASE("canonical witness for diag(1,0)") {
    const auto z = matrix2(1, 0, 0, 0);
    const auto res = find_tdz_witness(kMatrix2, z, 0.4, 1.0, 64);
    REQUIRE(res.found());
    const auto& w = *res.witness;

    CHECK(w.side == TdzSide::left);
    CHECK(w.sequence_rule == "kernel_outer_product");
    // Kernel v = (0,1), zn = v e1^T = [[0,0],[1,0]].
    CHECK(w.zn.at(0, 0) == 0.0);
    CHECK(w.zn.at(0, 1) == 0.0);
    CHECK(w.zn.at(1, 0) == 1.0);
    CHECK(w.zn.at(1, 1) == 0.0);
    CHECK(w.annihilation_norm == 0.0);
    CHECK(w.separation_mu == 0.5); // mu of a norm-1 element at t=1
    CHECK(w.separation_mu <= 1.0 - w.r);
    CHECK_FALSE(w.separation_convention.empty());
    CHECK(w.decay_trace.back().mu >= 0.99);
}

TEST_CASE("witness zn has unit crisp norm and replays") {
    Rng rng(41);
    const auto model = IFNormModel::induced(AlgebraModel::matrix(4));
    for (int i = 0; i < 100; ++i) {
        // Rank-deficient product with three surviving directions.
        const auto a = random_element(model.algebra, rng, -1.0, 1.0);
        const auto b = random_element(model.algebra, rng, -1.0, 1.0);
        std::vector<double> diag(16, 0.0);
        for (int k = 1; k < 4; ++k) diag[static_cast<std::size_t>(k) * 4 + k] = 1.0;
        const auto z = mul(a, mul(AlgebraElement(model.algebra, std::move(diag)), b));

        const auto res = find_tdz_witness(model, z, 0.4, 1.0, 32);
        REQUIRE(res.found());
        const auto& w = *res.witness;
        CHECK(std::abs(crisp_norm(w.zn) - 1.0) <= 1e-12);
        CHECK(w.annihilation_norm <= 1e-10 * crisp_norm(z));

        // Replay from the stored fields.
        const auto product = mul(w.z, w.zn);
        CHECK(std::abs(crisp_norm(product) - w.annihilation_norm) <= 1e-12);
        const auto sep = membership(model, w.zn, w.t);
        CHECK(std::abs(sep.mu - w.separation_mu) <= 1e-12);
        CHECK(std::abs(sep.nu - w.separation_nu) <= 1e-12);
        CHECK((sep.mu <= 1.0 - w.r || sep.nu >= w.r));
    }
}

TEST_CASE("scalar zero admits the constant witness") {
    const auto res = find_tdz_witness(kScalar, AlgebraElement::from_scalar(0.0), 0.4, 1.0, 16);
    REQUIRE(res.found());
    CHECK(res.witness->zn.scalar_value() == 1.0);
    CHECK(res.witness->sequence_rule == "constant_unit_scalar");
    CHECK(res.witness->annihilation_norm == 0.0);
    CHECK(res.witness->separation_mu == 0.5);
}

TEST_CASE("invertible elements admit no witness") {
    const auto res = find_tdz_witness(kMatrix2, AlgebraElement::unit(kMatrix2.algebra), 0.4, 1.0, 16);
    CHECK_FALSE(res.found());
    CHECK(res.not_found_reason.find("invertible") != std::string::npos);

    const auto sres = find_tdz_witness(kScalar, AlgebraElement::from_scalar(2.0), 0.4, 1.0, 16);
    CHECK_FALSE(sres.found());
}

TEST_CASE("separation-infeasible (r,t) gives NotFound") {
    // r = 0.9, t = 1: B(theta, 0.9, 1) has crisp radius 9 and swallows every
    // unit-norm element.
    const auto res = find_tdz_witness(kMatrix2, matrix2(1, 0, 0, 0), 0.9, 1.0, 16);
    CHECK_FALSE(res.found());
    CHECK(res.not_found_reason.find("separation") != std::string::npos);
}

TEST_CASE("right-sided witness annihilates zn * z") {
    const auto z = matrix2(1, 0, 1, 0); // left kernel along (1,-1)
    const auto res = find_tdz_witness(kMatrix2, z, 0.4, 1.0, 16, TdzSide::right);
    REQUIRE(res.found());
    const auto& w = *res.witness;
    CHECK(w.side == TdzSide::right);
    CHECK(crisp_norm(mul(w.zn, w.z)) <= 1e-12);
    CHECK(std::abs(crisp_norm(w.zn) - 1.0) <= 1e-12);
}

TEST_CASE("domain and model preconditions") {
    const auto z = matrix2(1, 0, 0, 0);
    CHECK_THROWS_AS(find_tdz_witness(kMatrix2, z, 0.0, 1.0, 16), DomainError);
    CHECK_THROWS_AS(find_tdz_witness(kMatrix2, z, 1.0, 1.0, 16), DomainError);
    CHECK_THROWS_AS(find_tdz_witness(kMatrix2, z, 0.4, 0.0, 16), DomainError);
    CHECK_THROWS_AS(find_tdz_witness(kMatrix2, z, 0.4, 1.0, 0), DomainError);
    const auto series = IFNormModel::induced(AlgebraModel::truncated_series(3));
    CHECK_THROWS_AS(find_tdz_witness(series, AlgebraElement::zero(series.algebra), 0.4, 1.0, 16),
                    UnsupportedOperationError);
}

TEST_CASE("population check: witnesses exactly at the constructed singular draws") {
    const auto report = verify_tdz_subset_singular(kMatrix2, 200, 3);
    CHECK(report.violation_count == 0);
    CHECK(report.consistent);
    CHECK(report.constructed_singular_count == 100);
    CHECK(report.witness_count == 100);
    CHECK(report.oracle_noninvertible_count == 100);

    const auto m4 = IFNormModel::induced(AlgebraModel::matrix(4));
    const auto r4 = verify_tdz_subset_singular(m4, 100, 19);
    CHECK(r4.violation_count == 0);
    CHECK(r4.consistent);
}

TEST_CASE("population check is deterministic under a fixed seed") {
    const auto a = verify_tdz_subset_singular(kMatrix2, 50, 123);
    const auto b = verify_tdz_subset_singular(kMatrix2, 50, 123);
    CHECK(a.witness_count == b.witness_count);
    CHECK(a.oracle_noninvertible_count == b.oracle_noninvertible_count);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ifba/errors.hpp"
#include "ifba/if_norm.hpp"
#include "ifba/serialize.hpp"
#include "support.hpp"

using namespace ifba;
using testsupport::matrix2;
using testsupport::oracle_mu;
using testsupport::oracle_nu;

TEST_CASE("induced membership degrees") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    const auto theta = AlgebraElement::zero(model.algebra);

    for (double t : {0.01, 1.0, 100.0}) {
        const auto p = membership(model, theta, t);
        CHECK(p.mu == 1.0);
        CHECK(p.nu == 0.0);
    }

    // ||x||_F = 1, t = 1 -> (0.5, 0.5)
    const auto x = matrix2(1, 0, 0, 0);
    const auto p = membership(model, x, 1.0);
    CHECK(p.mu == 0.5);
    CHECK(p.nu == 0.5);

    CHECK_THROWS_AS(membership(model, x, 0.0), DomainError);
    CHECK_THROWS_AS(membership(model, x, -1.0), DomainError);

    const auto stranger = AlgebraElement::from_scalar(1.0);
    CHECK_THROWS_AS(membership(model, stranger, 1.0), ModelMismatchError);
    CHECK_THROWS_AS(in_open_ball(model, {theta, 0.5, 1.0}, stranger), ModelMismatchError);
}

TEST_CASE("scaling law: membership(2x, 1) == membership(x, 0.5)") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_element(model.algebra, rng, -10.0, 10.0);
        const auto lhs = membership(model, scale(2.0, x), 1.0);
        const auto rhs = membership(model, x, 0.5);
        CHECK(std::abs(lhs.mu - rhs.mu) <= 1e-12);
        CHECK(std::abs(lhs.nu - rhs.nu) <= 1e-12);
    }
}

TEST_CASE("mu + nu = 1 exactly for the induced construction") {
    const auto model = IFNormModel::induced(AlgebraModel::truncated_series(4));
    Rng rng(9);
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_element(model.algebra, rng, -10.0, 10.0);
        const double t = rng.log_uniform(1e-2, 1e2);
        const auto p = membership(model, x, t);
        CHECK(p.mu + p.nu == 1.0);
    }
}

TEST_CASE("monotonicity along the t-ladder") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    const auto ladder = default_t_ladder();
    REQUIRE(ladder.size() == 13);
    CHECK(ladder.front() == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(ladder.back() == doctest::Approx(1e3).epsilon(1e-12));
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_element(model.algebra, rng, -10.0, 10.0);
        for (std::size_t k = 0; k + 1 < ladder.size(); ++k) {
            CHECK(membership(model, x, ladder[k]).mu <= membership(model, x, ladder[k + 1]).mu);
            CHECK(membership(model, x, ladder[k]).nu >= membership(model, x, ladder[k + 1]).nu);
        }
    }
}

TEST_CASE("open-ball membership: scalar examples") {
    const auto model = IFNormModel::induced(AlgebraModel::scalar());
    const auto center = AlgebraElement::from_scalar(0.0);
    const auto y = AlgebraElement::from_scalar(1.0);

    CHECK(in_open_ball(model, {center, 0.6, 1.0}, y));       // mu = 0.5 > 0.4
    CHECK_FALSE(in_open_ball(model, {center, 0.3, 1.0}, y)); // mu = 0.5 <= 0.7
    CHECK(in_open_ball(model, {y, 0.1, 1.0}, y));            // center always inside

    CHECK_THROWS_AS(in_open_ball(model, {center, 1.5, 1.0}, y), DomainError);
    CHECK_THROWS_AS(in_open_ball(model, {center, 0.5, 0.0}, y), DomainError);
}

TEST_CASE("crisp ball radius inverts the induced formula") {
    const auto radius = [](double r, double t) { return crisp_ball_radius({{}, r, t}); };
    CHECK(radius(0.5, 1.0) == 1.0);
    CHECK(radius(0.4, 1.0) == doctest::Approx(0.4 / 0.6).epsilon(1e-15));
    CHECK(radius(0.01, 1.0) == doctest::Approx(0.01 / 0.99).epsilon(1e-15));
    CHECK(radius(0.5, 2.0) == 2.0);
}

TEST_CASE("ball membership agrees with the crisp radius predicate") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    Rng rng(6);
    const auto center = random_element(model.algebra, rng, -2.0, 2.0);
    for (int i = 0; i < 2000; ++i) {
        const double r = rng.uniform(0.05, 0.95);
        const double t = rng.log_uniform(1e-1, 1e1);
        const BallSpec ball{center, r, t};
        const auto y = random_element(model.algebra, rng, -4.0, 4.0);
        const bool fuzzy = in_open_ball(model, ball, y);
        const bool crisp = crisp_norm(sub(y, center)) < crisp_ball_radius(ball);
        CHECK(fuzzy == crisp);
    }
}

TEST_CASE("axiom checker on the induced matrix(2) model with (minimum, maximum)") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    const auto report = check_ifna_axioms(model, 2000, 7);

    const char* passing[] = {"i", "ii", "iii", "iv", "v", "vii", "viii", "ix", "x", "xi", "xiii",
                             "xiv"};
    for (const char* id : passing) {
        INFO("axiom ", id);
        CHECK(report.record(id).status == AxiomStatus::pass);
    }

    for (const char* id : {"vi", "xii"}) {
        const auto& rec = report.record(id);
        INFO("axiom ", id);
        REQUIRE(rec.status == AxiomStatus::fail);
        REQUIRE(rec.witness.has_value());
        CHECK(rec.witness->source.rfind("targeted", 0) == 0);
    }

    // The canonical unbalanced witness: x = diag(10,10), y = diag(0.001,0.001).
    const auto& w = *report.record("vi").witness;
    CHECK(w.x->at(0, 0) == 10.0);
    CHECK(w.y->at(0, 0) == 0.001);
    CHECK(w.lhs == doctest::Approx(0.99859).epsilon(1e-4));
    CHECK(w.rhs == doctest::Approx(0.99298).epsilon(1e-4));
}

TEST_CASE("axiom witnesses replay from their stored fields") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    const auto report = check_ifna_axioms(model, 2000, 17);

    const auto& w = *report.record("vi").witness;
    const double lhs = std::max(membership(model, *w.x, *w.s).mu, membership(model, *w.y, *w.t).mu);
    const double rhs = membership(model, mul(*w.x, *w.y), *w.s + *w.t).mu;
    CHECK(std::abs(lhs - w.lhs) <= 1e-12);
    CHECK(std::abs(rhs - w.rhs) <= 1e-12);
    CHECK(lhs > rhs); // the violation itself

    // Same replay through JSON serialization.
    const auto j = report::json_of(report);
    const auto& jw = j.at("axioms").at(5).at("witness");
    REQUIRE(j.at("axioms").at(5).at("id") == "vi");
    const auto x = report::element_from_json(jw.at("x"));
    const auto y = report::element_from_json(jw.at("y"));
    const double s = jw.at("s").get<double>();
    const double t = jw.at("t").get<double>();
    const double lhs2 = std::max(membership(model, x, s).mu, membership(model, y, t).mu);
    const double rhs2 = membership(model, mul(x, y), s + t).mu;
    CHECK(std::abs(lhs2 - jw.at("lhs").get<double>()) <= 1e-12);
    CHECK(std::abs(rhs2 - jw.at("rhs").get<double>()) <= 1e-12);
}

TEST_CASE("null-product model: multiplicative axioms hold vacuously") {
    const auto model = IFNormModel::induced(AlgebraModel::null_product(2));
    const auto report = check_ifna_axioms(model, 1000, 5);
    CHECK(report.record("vi").status == AxiomStatus::vacuous);
    CHECK(report.record("xii").status == AxiomStatus::vacuous);
    for (const char* id : {"i", "ii", "iii", "iv", "v", "vii", "viii", "ix", "x", "xi", "xiii"})
        CHECK(report.record(id).status == AxiomStatus::pass);
}

TEST_CASE("axiom checker with a non-idempotent pair fails postulate (xiv)") {
    IFNormModel model = IFNormModel::induced(AlgebraModel::scalar());
    model.tnorm = TriangularNorm{TNormKind::product, std::nullopt};
    const auto report = check_ifna_axioms(model, 100, 1);
    const auto& rec = report.record("xiv");
    REQUIRE(rec.status == AxiomStatus::fail);
    REQUIRE(rec.witness.has_value());
    const double a = *rec.witness->c;
    CHECK(std::abs(rec.witness->lhs - a * a) <= 1e-15);
}

TEST_CASE("axiom checker is deterministic for a fixed seed") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    const auto a = report::to_canonical_text(report::json_of(check_ifna_axioms(model, 500, 99)));
    const auto b = report::to_canonical_text(report::json_of(check_ifna_axioms(model, 500, 99)));
    CHECK(a == b);
    const auto c = report::to_canonical_text(report::json_of(check_ifna_axioms(model, 500, 100)));
    CHECK(a != c);
}

TEST_CASE("sample-count precondition") {
    const auto model = IFNormModel::induced(AlgebraModel::scalar());
    CHECK_THROWS_AS(check_ifna_axioms(model, 0, 1), DomainError);
}

TEST_CASE("independent oracle: induced degrees match hand-computed values") {
    const auto model = IFNormModel::induced(AlgebraModel::matrix(2));
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_element(model.algebra, rng, -10.0, 10.0);
        const double t = rng.log_uniform(1e-2, 1e2);
        const double norm = testsupport::oracle_frobenius(x.data());
        const auto p = membership(model, x, t);
        CHECK(p.mu == doctest::Approx(oracle_mu(norm, t)).epsilon(1e-14));
        CHECK(p.nu == doctest::Approx(oracle_nu(norm, t)).epsilon(1e-14));
    }
}

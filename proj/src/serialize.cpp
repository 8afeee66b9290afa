#include "ifba/serialize.hpp"

#include "ifba/errors.hpp"

namespace ifba::report {

namespace {

ojson double_array(std::span<const double> values) {
    ojson arr = ojson::array();
    for (double v : values) arr.push_back(v);
    return arr;
}

ojson trace_array(const std::vector<TracePoint>& trace) {
    ojson arr = ojson::array();
    for (const auto& p : trace)
        arr.push_back(ojson{{"n", p.n}, {"mu", p.mu}, {"nu", p.nu}});
    return arr;
}

ojson tdz_trace_array(const std::vector<TdzTracePoint>& trace) {
    ojson arr = ojson::array();
    for (const auto& p : trace)
        arr.push_back(ojson{{"n", p.n}, {"mu", p.mu}, {"nu", p.nu}});
    return arr;
}

} // namespace

ojson json_of(const AlgebraElement& x) {
    return ojson{{"model", x.model().spec_string()}, {"data", double_array(x.data())}};
}

AlgebraElement element_from_json(const nlohmann::json& j) {
    const auto model = AlgebraModel::parse(j.at("model").get<std::string>());
    std::vector<double> data;
    for (const auto& v : j.at("data")) data.push_back(v.get<double>());
    return AlgebraElement(model, std::move(data));
}

ojson json_of(const FuzzyDegreePair& p) {
    return ojson{{"mu", p.mu}, {"nu", p.nu}};
}

ojson json_of(const TriangularWitness& w) {
    return ojson{{"args", double_array(w.args)}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

ojson json_of(const TriangularAxiomReport& r) {
    ojson axioms = ojson::array();
    for (const auto& rec : r.axioms) {
        ojson item{{"axiom", rec.axiom}, {"pass", rec.pass}};
        if (rec.witness) item["witness"] = json_of(*rec.witness);
        axioms.push_back(std::move(item));
    }
    return ojson{{"op", r.op_name},
                 {"grid_resolution", r.grid_resolution},
                 {"interpolation", r.interpolation},
                 {"all_pass", r.all_pass()},
                 {"axioms", std::move(axioms)}};
}

ojson json_of(const IdempotencyResult& r) {
    ojson j{{"idempotent", r.idempotent}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

ojson json_of(const IfnaWitness& w) {
    ojson j = ojson::object();
    if (w.x) j["x"] = json_of(*w.x);
    if (w.y) j["y"] = json_of(*w.y);
    if (w.c) j["c"] = *w.c;
    if (w.s) j["s"] = *w.s;
    if (w.t) j["t"] = *w.t;
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    j["relation"] = w.relation;
    j["source"] = w.source;
    return j;
}

ojson json_of(const IfnaAxiomReport& r) {
    ojson axioms = ojson::array();
    for (const auto& rec : r.axioms) {
        ojson item{{"id", rec.id},
                   {"status", to_string(rec.status)},
                   {"samples_used", rec.samples_used}};
        if (rec.witness) item["witness"] = json_of(*rec.witness);
        axioms.push_back(std::move(item));
    }
    return ojson{{"model", r.model},
                 {"seed", r.seed},
                 {"samples", r.samples},
                 {"sampling",
                  ojson{{"tnorm", r.tnorm},
                        {"tconorm", r.tconorm},
                        {"t_ladder", double_array(r.t_ladder)},
                        {"element_law", r.element_law},
                        {"time_law", r.time_law},
                        {"scalar_law", r.scalar_law},
                        {"limit_gate", r.limit_gate}}},
                 {"axioms", std::move(axioms)}};
}

ojson json_of(const TracePoint& p) {
    return ojson{{"n", p.n}, {"mu", p.mu}, {"nu", p.nu}};
}

ojson json_of(const ConvergenceVerdict& v) {
    ojson j{{"status", to_string(v.status)}};
    if (v.converged()) j["n0"] = v.n0;
    j["r"] = v.r;
    j["t"] = v.t;
    j["horizon"] = v.horizon;
    if (v.p_max) j["p_max"] = *v.p_max;
    j["trace"] = trace_array(v.trace);
    return j;
}

ojson json_of(const LimitCheckResult& r) {
    ojson records = ojson::array();
    for (const auto& rec : r.records) {
        ojson verdicts = ojson::array();
        for (const auto& [rr, status] : rec.verdicts)
            verdicts.push_back(ojson{{"r", rr}, {"status", to_string(status)}});
        records.push_back(ojson{{"t", rec.t},
                                {"monotone_tail", rec.monotone_tail},
                                {"final_mu", rec.final_mu},
                                {"final_nu", rec.final_nu},
                                {"trend_ok", rec.trend_ok},
                                {"cross_checks", std::move(verdicts)}});
    }
    return ojson{{"passed", r.passed}, {"records", std::move(records)},
                 {"trace", trace_array(r.trace)}};
}

ojson json_of(const ProductConvergenceReport& r) {
    ojson j{{"x_verdict", json_of(r.x_verdict)}, {"y_verdict", json_of(r.y_verdict)}};
    if (r.product_verdict) j["product_verdict"] = json_of(*r.product_verdict);
    j["consistent"] = r.consistent;
    return j;
}

ojson json_of(const NeumannResult& r) {
    ojson j{{"approx_inverse", json_of(r.approx_inverse)},
            {"terms_used", r.terms_used},
            {"residual", r.residual},
            {"crisp_certificate",
             ojson{{"norm_x", r.crisp_certificate.norm_x},
                   {"contractive", r.crisp_certificate.contractive}}}};
    if (r.fuzzy_certificate)
        j["fuzzy_certificate"] = ojson{{"r", r.fuzzy_certificate->r},
                                       {"t", r.fuzzy_certificate->t},
                                       {"ball_member", r.fuzzy_certificate->ball_member}};
    return j;
}

ojson json_of(const InvertibleBallProbeReport& r) {
    ojson j{{"model", r.model},
            {"x0", json_of(r.x0)},
            {"t", r.t},
            {"r_star", r.r_star},
            {"r", r.r},
            {"bound_exceeded", r.bound_exceeded},
            {"crisp_radius", r.crisp_radius},
            {"samples", r.samples},
            {"seed", r.seed},
            {"sample_law", r.sample_law},
            {"invertible_count", r.invertible_count},
            {"noninvertible_count", r.noninvertible_count},
            {"uncertified_count", r.uncertified_count}};
    auto cx = [](const ProbeCounterexample& c) {
        return ojson{{"x", json_of(c.x)}, {"reason", c.reason}, {"sample_index", c.sample_index}};
    };
    if (r.first_noninvertible) j["first_noninvertible"] = cx(*r.first_noninvertible);
    if (r.first_uncertified) j["first_uncertified"] = cx(*r.first_uncertified);
    return j;
}

ojson json_of(const ClosedSetCheckReport& r) {
    ojson results = ojson::array();
    for (const auto& res : r.results)
        results.push_back(ojson{{"family", res.family},
                                {"terms_checked", res.terms_checked},
                                {"generator_ok", res.generator_ok},
                                {"limit_noninvertible", res.limit_noninvertible}});
    return ojson{{"model", r.model},
                 {"sequences", r.sequences},
                 {"seed", r.seed},
                 {"failures", r.failures},
                 {"results", std::move(results)}};
}

ojson json_of(const ContinuityProbeReport& r) {
    ojson counterexamples = ojson::array();
    for (const auto& c : r.counterexamples)
        counterexamples.push_back(ojson{{"x", json_of(c.x)},
                                        {"lhs", json_of(c.lhs)},
                                        {"rhs", json_of(c.rhs)},
                                        {"sample_index", c.sample_index}});
    return ojson{{"model", r.model},
                 {"x0", json_of(r.x0)},
                 {"epsilon", r.epsilon},
                 {"samples", r.samples},
                 {"seed", r.seed},
                 {"sample_law", r.sample_law},
                 {"holds_count", r.holds_count},
                 {"fails_count", r.fails_count},
                 {"counterexample_cap", r.counterexample_cap},
                 {"counterexamples", std::move(counterexamples)}};
}

ojson json_of(const TDZWitness& w) {
    return ojson{{"z", json_of(w.z)},
                 {"zn", json_of(w.zn)},
                 {"side", to_string(w.side)},
                 {"sequence_rule", w.sequence_rule},
                 {"r", w.r},
                 {"t", w.t},
                 {"annihilation_norm", w.annihilation_norm},
                 {"separation_mu", w.separation_mu},
                 {"separation_nu", w.separation_nu},
                 {"separation_convention", w.separation_convention},
                 {"decay_trace", tdz_trace_array(w.decay_trace)},
                 {"separation_trace", tdz_trace_array(w.separation_trace)}};
}

ojson json_of(const TdzSearchResult& r) {
    ojson j{{"found", r.found()}};
    if (r.witness)
        j["witness"] = json_of(*r.witness);
    else
        j["not_found_reason"] = r.not_found_reason;
    return j;
}

ojson json_of(const TdzPopulationReport& r) {
    ojson j{{"model", r.model},
            {"samples", r.samples},
            {"seed", r.seed},
            {"r", r.r},
            {"t", r.t},
            {"witness_count", r.witness_count},
            {"oracle_noninvertible_count", r.oracle_noninvertible_count},
            {"constructed_singular_count", r.constructed_singular_count},
            {"violation_count", r.violation_count},
            {"consistent", r.consistent}};
    if (r.first_violation) j["first_violation"] = json_of(*r.first_violation);
    return j;
}

} // namespace ifba::report

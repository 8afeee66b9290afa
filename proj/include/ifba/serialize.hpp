#pragma once

#include "ifba/convergence.hpp"
#include "ifba/divisors.hpp"
#include "ifba/inversion.hpp"
#include "ifba/report_json.hpp"
#include "ifba/triangular.hpp"

namespace ifba::report {

ojson json_of(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j);

ojson json_of(const FuzzyDegreePair& p);
ojson json_of(const TriangularWitness& w);
ojson json_of(const TriangularAxiomReport& r);
ojson json_of(const IdempotencyResult& r);
ojson json_of(const IfnaWitness& w);
ojson json_of(const IfnaAxiomReport& r);
ojson json_of(const TracePoint& p);
ojson json_of(const ConvergenceVerdict& v);
ojson json_of(const LimitCheckResult& r);
ojson json_of(const ProductConvergenceReport& r);
ojson json_of(const NeumannResult& r);
ojson json_of(const InvertibleBallProbeReport& r);
ojson json_of(const ClosedSetCheckReport& r);
ojson json_of(const ContinuityProbeReport& r);
ojson json_of(const TDZWitness& w);
ojson json_of(const TdzSearchResult& r);
ojson json_of(const TdzPopulationReport& r);

} // namespace ifba::report

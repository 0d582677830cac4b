#pragma once

#include <json.hpp>

#include "ck/cascade.hpp"
#include "ck/invariants.hpp"
#include "ck/report.hpp"
#include "ck/rootsys.hpp"

namespace ck {

using Json = nlohmann::ordered_json;

// Cascade forest of one type: nodes in cascade order with roots as
// simple-root coefficient vectors.
Json cascade_json(const RootSystem& rs, const Cascade& c);

// Stable check-by-check report: {check, type, kind, seed, samples, status}
// plus the witness on failures.
Json report_json(const VerificationReport& rep);

// Generator table of one type: cascade roots, generator weights over B and
// over the simples, degrees, transition matrix and determinant.
Json generators_json(const RootSystem& rs, const Cascade& c, const GeneratorSet& g);

// Full polynomial dump: {weight, degree, terms: [{exponents, coefficient}]}.
Json invariant_json(const RootSystem& rs, const PolyInvariant& inv);

}  // namespace ck

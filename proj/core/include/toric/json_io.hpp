#pragma once

#include <nlohmann/json.hpp>

#include "toric/binomial.hpp"
#include "toric/bound.hpp"
#include "toric/graph.hpp"
#include "toric/graph_circuits.hpp"
#include "toric/graph_graver.hpp"
#include "toric/kernel.hpp"
#include "toric/matrix.hpp"

namespace toric {

using json = nlohmann::json;

// Exponents fit comfortably in 64 bits at the scales the CLI accepts;
// anything larger is refused loudly rather than rounded.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json to_json(const ExponentVector& v);
json to_json(const Binomial& b);
Binomial binomial_from_json(const json& j);

json to_json(const BinomialSet& s);
BinomialSet binomial_set_from_json(const json& j);

json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const json& j);

json to_json(const KernelLattice& k);

json to_json(const Graph& g, const CircuitWitness& w);
json to_json(const Graph& g, const PrimitiveSubgraph& p);

json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const json& j);

}  // namespace toric

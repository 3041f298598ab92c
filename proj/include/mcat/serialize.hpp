#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mcat/chain.hpp"
#include "mcat/counting.hpp"
#include "mcat/qone.hpp"
#include "mcat/tabchain.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

using Json = nlohmann::ordered_json;

Json to_json(const Shape& s);
Json to_json(const WeightPoly& p);
Json to_json(const Monomial& m);
Json to_json(const RatePoint& p);
Json to_json(const DEDecomposition& d);
Json to_json(const CondensedTableau& t);
Json to_json(const StaircaseTableau& t);
Json to_json(const AltTableau& t);
Json to_json(const TheoremReport& r);
Json to_json(const AnsatzReport& r);
Json to_json(const BalanceReport& r);
Json to_json(const ProjectionReport& r);
Json to_json(const DetCheckReport& r);
Json to_json(const ConjectureReport& r);
Json to_json(const ConsistencyReport& r);
Json to_json(const std::vector<SweepEntry>& sweep);

/// Parses [{"a":..,"b":..,"c":..,"coeff":"..."}] back into a polynomial.
WeightPoly poly_from_json(const Json& j);

/// "word,probability" lines under a header.
std::string stationary_csv(const StationaryVector& v);
Json stationary_json(const SectorChain& chain, const StationaryVector& v);

/// Tableau chain as JSON nodes/edges, CSV edge list or Graphviz dot.
std::string chain_graph(const TableauChain& chain, const std::string& format);

}  // namespace mcat

#ifndef ASYMGRAPH_REPORT_HPP
#define ASYMGRAPH_REPORT_HPP

#include <json.hpp>

#include "asymgraph/automorphism.hpp"
#include "asymgraph/constructions.hpp"
#include "asymgraph/enumeration.hpp"

namespace asymgraph {

/// All report schemas carry a top-level "schema" tag; corpus files outlive
/// code revisions.
nlohmann::json aut_report_json(const AutReport& rep);
nlohmann::json census_json(const CensusReport& rep, bool asymmetric_only = false);
nlohmann::json construction_spec_json(const ConstructionSpec& spec);
ConstructionSpec construction_spec_from_json(const nlohmann::json& j);

/// {spec, n, degrees, graph6, is_asymmetric, group_order, hamiltonian}.
nlohmann::json certificate_json(const ConstructionSpec& spec, const Graph& g);

nlohmann::json group_order_json(const BigCount& order);

}  // namespace asymgraph

#endif

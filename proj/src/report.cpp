#include "asymgraph/report.hpp"

namespace asymgraph {

using nlohmann::json;

json group_order_json(const BigCount& order) {
    if (order.fits_uint64()) return order.to_uint64();
    return order.to_string();  // decimal string above 2^64
}

json aut_report_json(const AutReport& rep) {
    json j;
    j["schema"] = "asymgraph/aut-report/v1";
    j["n"] = rep.n;
    j["group_order"] = group_order_json(rep.group_order);
    j["is_asymmetric"] = rep.is_asymmetric;
    json gens = json::array();
    for (const auto& g : rep.generators) gens.push_back(g.cycle_notation());
    j["generators"] = std::move(gens);
    json orbits = json::array();
    for (const auto& orbit : rep.orbits) {
        json cell = json::array();
        for (int v : orbit) cell.push_back(v + 1);  // 1-based names outward
        orbits.push_back(std::move(cell));
    }
    j["orbits"] = std::move(orbits);
    return j;
}

json census_json(const CensusReport& rep, bool asymmetric_only) {
    json j;
    j["schema"] = "asymgraph/census/v1";
    j["n"] = rep.n;
    j["total_count"] = rep.total_count;
    j["asymmetric_count"] = rep.asymmetric_count;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        if (asymmetric_only && !e.is_asymmetric) continue;
        entries.push_back({{"canonical", e.canonical},
                           {"group_order", group_order_json(e.group_order)},
                           {"is_asymmetric", e.is_asymmetric}});
    }
    j["entries"] = std::move(entries);
    return j;
}

json construction_spec_json(const ConstructionSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    if (spec.family == Family::subdivided_star) j["arms"] = spec.arms;
    else j["n"] = spec.n;
    if (spec.seed != 0) j["seed"] = spec.seed;
    if (spec.budget != 0) j["budget"] = spec.budget;
    return j;
}

ConstructionSpec construction_spec_from_json(const json& j) {
    ConstructionSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    if (j.contains("n")) spec.n = j.at("n").get<int>();
    if (j.contains("arms")) spec.arms = j.at("arms").get<std::vector<int>>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) spec.budget = j.at("budget").get<std::uint64_t>();
    spec.validate();
    return spec;
}

json certificate_json(const ConstructionSpec& spec, const Graph& g) {
    json j;
    j["schema"] = "asymgraph/certificate/v1";
    j["spec"] = construction_spec_json(spec);
    j["n"] = g.vertex_count();
    std::vector<int> degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    j["degrees"] = degrees;
    j["graph6"] = encode_graph6(g);
    auto aut = automorphism_group(g);
    j["group_order"] = group_order_json(aut.group_order);
    j["is_asymmetric"] = aut.is_asymmetric;
    bool hamiltonian = g.vertex_count() >= 3 &&
                       (dirac_guarantees_hamiltonian(g) || find_hamiltonian_cycle(g).has_value());
    j["hamiltonian"] = hamiltonian;
    return j;
}

}  // namespace asymgraph

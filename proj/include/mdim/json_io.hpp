// json_io.hpp
// JSON surfaces: the edge-list graph schema, DimensionReport, and
// TheoremCheck. All timing data lives under a single "timing" key so that
// reproducibility checks can strip it and compare runs byte for byte.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mdim/graph.hpp"
#include "mdim/solver.hpp"
#include "mdim/theorems.hpp"

namespace mdim {

// {"n": int, "edges": [[u,v],...], "name": string}, edges with u < v in
// lexicographic order.
inline nlohmann::json to_edge_list_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["name"] = g.name();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_edge_list_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("edge-list JSON: expected an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("edge-list JSON: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("edge-list JSON: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    const std::string name = j.value("name", std::string{});
    return Graph(n, edges, name);
}

inline Graph graph_from_edge_list_json(const std::string& text) {
    return graph_from_edge_list_json(nlohmann::json::parse(text));
}

inline nlohmann::json to_json(const LowerBoundInfo& info) {
    return {{"value", info.value}, {"source", info.source}};
}

// {"graph", "n", "dim" (exact only) or "dim_lo"/"dim_hi", "exact",
//  "witness", "lower_bound", "stats", "timing"}.
inline nlohmann::json to_json(const DimensionReport& report) {
    nlohmann::json j;
    j["graph"] = report.graph_name;
    j["n"] = report.n;
    j["exact"] = report.exact;
    if (report.exact) {
        j["dim"] = report.dim_lower;
    } else {
        j["dim_lo"] = report.dim_lower;
        j["dim_hi"] = report.dim_upper;
    }
    j["witness"] = report.witness;
    j["lower_bound"] = to_json(report.lower_bound_used);
    auto levels = nlohmann::json::array();
    for (const auto& lvl : report.stats.levels)
        levels.push_back({{"size", lvl.size},
                          {"subsets_examined", lvl.subsets_examined},
                          {"prunes", lvl.prunes}});
    j["stats"] = {{"levels", std::move(levels)},
                  {"subsets_examined", report.stats.subsets_examined},
                  {"prunes", report.stats.prunes}};
    j["timing"] = {{"wall_seconds", report.stats.wall_seconds}};
    return j;
}

inline std::string theorem_id_string(TheoremId id) {
    switch (id) {
        case TheoremId::AndK: return "AND_K";
        case TheoremId::Complement: return "COMPLEMENT";
        case TheoremId::PrismPath: return "PRISM_PATH";
        case TheoremId::CycleProduct: return "CYCLE_PRODUCT";
        case TheoremId::SmallCases: return "SMALL_CASES";
    }
    throw std::logic_error("theorem_id_string: unknown id");
}

inline nlohmann::json to_json(const TheoremCheck& tc) {
    nlohmann::json j;
    j["theorem"] = theorem_id_string(tc.theorem_id);
    j["name"] = theorem_name(tc.theorem_id);
    if (tc.k) j["k"] = *tc.k;
    if (tc.n) j["n"] = *tc.n;
    j["passed"] = tc.passed();
    auto claims = nlohmann::json::array();
    for (const auto& c : tc.claims)
        claims.push_back(
            {{"claim", c.description}, {"passed", c.passed}, {"evidence", c.evidence}});
    j["claims"] = std::move(claims);
    return j;
}

}  // namespace mdim

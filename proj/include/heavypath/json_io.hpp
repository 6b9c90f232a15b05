#pragma once

#include <json.hpp>

#include "heavypath/families.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/graph6.hpp"
#include "heavypath/harness.hpp"
#include "heavypath/invariants.hpp"
#include "heavypath/orepath.hpp"
#include "heavypath/search.hpp"

namespace heavypath {

using ordered_json = nlohmann::ordered_json;

inline ordered_json family_witness_to_json(const FamilyWitness& w) {
    ordered_json j;
    j["family"] = family_name(w.family);
    ordered_json blocks = ordered_json::object();
    for (const auto& [name, vs] : w.blocks) blocks[name] = vs;
    j["blocks"] = blocks;
    return j;
}

inline ordered_json verdict_to_json(const HeavyVerdict& v) {
    ordered_json j;
    j["kind"] = verdict_kind_name(v.kind);
    if (v.cycle) j["cycle"] = v.cycle->vertices();
    if (v.path) j["path"] = v.path->vertices();
    if (v.family) j["family"] = family_witness_to_json(*v.family);
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

inline ordered_json report_to_json(const VerificationReport& r, bool with_wall_time = true) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["graphs_checked"] = r.graphs_checked;
    j["witnesses"] = r.witnesses;
    j["exceptional_matches"] = r.exceptional_matches;
    j["not_applicable"] = r.not_applicable;
    j["counterexamples"] = r.counterexamples;
    ordered_json list = ordered_json::array();
    for (const auto& c : r.counterexample_list) {
        ordered_json e;
        e["graph6"] = c.graph6;
        e["reason"] = c.reason;
        e["replay"] = "verify --theorem " + r.theorem + " --graph6 -";
        list.push_back(e);
    }
    j["counterexample_list"] = list;
    if (with_wall_time) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

inline ordered_json analyze_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    CliqueResult cr = clique_number(g);
    j["omega"] = cr.omega;
    j["clique"] = cr.witness.to_vector();
    j["min_degree"] = min_degree(g);
    j["two_connected"] = is_two_connected(g);
    auto bp = is_bipartite(g);
    j["bipartite"] = bp.bipartite;
    j["components"] = component_count(g);
    ordered_json fams = ordered_json::object();
    auto put = [&](const char* key, const std::optional<FamilyWitness>& w) {
        fams[key] = w ? family_witness_to_json(*w) : ordered_json(nullptr);
    };
    put("cycle_exception", is_cycle_exception(g));
    put("path_exception", is_path_exception(g));
    put("h_class", is_in_h_class(g));
    j["families"] = fams;
    return j;
}

inline ordered_json repair_to_json(const RepairResult& r) {
    ordered_json j;
    j["input_deficit"] = r.input_deficit;
    ordered_json moves = ordered_json::array();
    for (const auto& m : r.moves) {
        ordered_json e;
        e["type"] = m.kind == RepairMove::Insert ? "insert" : "crossover";
        e["i"] = m.gap;
        e["j_or_x"] = m.other;
        moves.push_back(e);
    }
    j["moves"] = moves;
    j["path"] = r.path.vertices();
    return j;
}

}  // namespace heavypath

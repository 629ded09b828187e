#pragma once

#include <json.hpp>

#include "aglab/aggroup.hpp"
#include "aglab/census.hpp"
#include "aglab/inflation.hpp"
#include "aglab/structure.hpp"
#include "aglab/table_io.hpp"

// JSON report builders shared by the CLI and the schema tests. Key order in
// the emitted text is alphabetical (nlohmann's default), which together with
// integer-only numbers makes every report byte-deterministic.
namespace aglab::reports {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json element_set_json(const ElementSet& set) {
    json out = json::array();
    for (int x : set) out.push_back(x);
    return out;
}

inline json table_json(const FiniteGroupoid& g) {
    json rows = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.at(a, b));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json groupoid_json(const FiniteGroupoid& g) {
    json out{{"order", g.order()}, {"table", table_json(g)}};
    if (g.has_labels()) out["labels"] = g.labels();
    return out;
}

inline json envelope(const std::string& command) {
    return json{{"schema", kSchemaVersion}, {"command", command}};
}

inline json law_report_json(const LawReport& r) {
    json out = envelope("check");
    out["law"] = law_name(r.law);
    out["holds"] = r.holds;
    if (r.counterexample) {
        out["counterexample"] = json{{"tuple", r.counterexample->tuple},
                                     {"lhs", r.counterexample->lhs},
                                     {"rhs", r.counterexample->rhs}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

inline json counterexample_json(const std::optional<LawCounterexample>& c) {
    if (!c) return nullptr;
    return json{{"tuple", c->tuple}, {"lhs", c->lhs}, {"rhs", c->rhs}};
}

inline json property_report_json(const PropertyReport& r) {
    json out = envelope("classify");
    out["ag"] = r.ag;
    out["ag_star_star"] = r.ag_star_star;
    out["strongly_regular"] = r.strongly_regular;
    out["e_semilattice"] = r.e_semilattice;
    out["completely_inverse"] = r.completely_inverse;
    out["invertive_witness"] = counterexample_json(r.invertive_witness);
    out["agss_witness"] = counterexample_json(r.agss_witness);
    out["irregular_element"] = r.irregular_element ? json(*r.irregular_element) : json(nullptr);
    out["bad_inverse_element"] =
        r.bad_inverse_element ? json(*r.bad_inverse_element) : json(nullptr);
    out["e_semilattice_witness"] = r.e_witness ? json(*r.e_witness) : json(nullptr);
    out["cond_completely_inverse_agss"] = r.cond_completely_inverse_agss;
    out["cond_strongly_regular_ag_esl"] = r.cond_strongly_regular_ag_esl;
    out["cond_strongly_regular_agss"] = r.cond_strongly_regular_agss;
    out["class3"] = r.class3 == Class3::all_three ? "all-three" : "none";
    out["theorem3_violation"] = r.theorem3_violation;
    return out;
}

inline json inverse_data_json(const InverseData& data) {
    json out = envelope("inverses");
    json left = json::array();
    json v = json::array();
    for (const ElementSet& set : data.left_inverses) left.push_back(element_set_json(set));
    for (const ElementSet& set : data.v) v.push_back(element_set_json(set));
    out["left_inverses"] = std::move(left);
    out["v"] = std::move(v);
    out["inverse_map"] = data.inverse_map ? json(*data.inverse_map) : json(nullptr);
    out["commuting"] = json(std::vector<bool>(data.commuting.begin(), data.commuting.end()));
    return out;
}

inline json automorphism_json(const Automorphism& a) {
    return json{{"perm", a.perm.images()},
                {"involutive", a.involutive},
                {"e_fixed", a.e_fixed}};
}

inline json derive_json(const DerivedGroupoid& d) {
    json out = envelope("derive");
    out["derived"] = groupoid_json(d.derived);
    out["base_inverse"] = d.base_inverse;
    out["commutative"] = true;
    out["associative"] = true;
    return out;
}

inline json clifford_json(const CliffordDecomposition& d) {
    json out = envelope("decompose");
    out["idempotents"] = element_set_json(d.idempotent_set);
    json order_pairs = json::array();
    for (int e : d.idempotent_set) {
        for (int f : d.idempotent_set) {
            if (e != f && d.leq(e, f)) order_pairs.push_back(json::array({e, f}));
        }
    }
    out["order"] = std::move(order_pairs);  // pairs (e, f) with e < f in the semilattice
    json groups = json::object();
    for (const auto& [e, members] : d.groups) {
        groups[std::to_string(e)] =
            json{{"members", element_set_json(members)}, {"abelian", d.abelian.at(e)}};
    }
    out["groups"] = std::move(groups);
    json links = json::object();
    for (const auto& [pair, map] : d.linking) {
        const auto& [f, e] = pair;
        if (f == e) continue;
        json entries = json::object();
        for (int a : d.groups.at(f)) entries[std::to_string(a)] = map[a];
        links[std::to_string(f) + "->" + std::to_string(e)] = std::move(entries);
    }
    out["linking"] = std::move(links);
    out["inverse_map"] = d.inverse;
    return out;
}

inline json left_simple_json(const LeftSimpleReport& r) {
    json out{{"left_simple", r.left_simple}};
    out["witness_ideal"] = r.witness ? element_set_json(*r.witness) : json(nullptr);
    return out;
}

inline json ag_group_report_json(const AgGroupReport& r) {
    json out = envelope("aggroup");
    out["left_identity"] = r.left_identity ? json(*r.left_identity) : json(nullptr);
    out["cond1_ag_group"] = r.cond1;
    out["cond2_right_solutions"] = r.cond2;
    out["cond3_unique_inverses"] = r.cond3;
    out["cond4_unique_left_division"] = r.cond4;
    out["left_simple"] = left_simple_json(r.left_simple);
    out["is_ag_group"] = r.is_ag_group;
    return out;
}

inline json inflation_witness_json(const InflationWitness& w) {
    json out{{"base_elements", element_set_json(w.base_elements)},
             {"retraction", w.retraction}};
    json fibers = json::object();
    for (const auto& [u, members] : w.fibers) {
        fibers[std::to_string(u)] = element_set_json(members);
    }
    out["fibers"] = std::move(fibers);
    return out;
}

inline json theorem10_json(const Theorem10Result& r) {
    json out = envelope("deflate");
    out["medial"] = r.medial;
    out["s2_good"] = r.s2_good;
    out["witness"] = r.witness ? inflation_witness_json(*r.witness) : json(nullptr);
    return out;
}

inline json census_stats_json(const SearchStats& stats) {
    // wall_seconds is deliberately omitted: the census report is required to
    // be byte-identical across runs and worker counts.
    return json{{"nodes", stats.nodes},
                {"pruned", stats.pruned},
                {"leaves", stats.leaves},
                {"accepted", stats.accepted}};
}

inline json census_json(const CensusResult& r) {
    json out = envelope("census");
    out["order"] = r.order;
    out["class"] = r.class_name;
    out["count"] = r.count();
    json tables = json::array();
    for (const FiniteGroupoid& g : r.canonical_tables) tables.push_back(table_json(g));
    out["canonical_tables"] = std::move(tables);
    out["stats"] = census_stats_json(r.stats);
    return out;
}

inline json omega_json(const OmegaReport& r) {
    json out = envelope("omega");
    out["order"] = r.order;
    out["equal"] = r.equal;
    out["direct_count"] = r.direct.size();
    out["generated_count"] = r.generated.size();
    json per = json::array();
    for (const OmegaPerSga& entry : r.per_sga) {
        per.push_back(json{{"sga", table_json(entry.sga)},
                           {"aut2e_count", entry.aut2e_count},
                           {"distinct_generated", entry.distinct_generated}});
    }
    out["per_sga"] = std::move(per);
    return out;
}

inline json theorem8_json(const Theorem8Result& r) {
    json out = envelope("theorem8");
    out["ag_group"] = r.ag_group;
    out["left_simple_cia"] = r.left_simple_cia;
    out["left_simple_ag_left_identity"] = r.left_simple_ag_left_id;
    out["holds"] = r.holds;
    return out;
}

}  // namespace aglab::reports

#pragma once

/**
 * @file json_io.hpp
 * @brief JSON renderings of the CLI reports (nlohmann::json).
 *
 * Every document carries "schema_version". Rationals are strings "p/q" and
 * infinity is "inf". Arrays follow the deterministic orders of the producing
 * modules, so equal inputs give byte-identical dumps.
 */

#include <json.hpp>

#include "troprec/coefficient_vector.hpp"
#include "troprec/detector.hpp"
#include "troprec/entropy.hpp"
#include "troprec/newton_polygon.hpp"
#include "troprec/recurrence.hpp"

namespace troprec::json_io {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json point(const lattice_point& p) { return json{{"index", p.index}, {"value", p.value.str()}}; }

inline json vector_report(const coefficient_vector& a) {
    const auto poly = compute_newton_polygon(a);
    const auto reg = classify_regular(a);
    json entries = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) entries.push_back(a[i].str());
    json hull = json::array();
    for (const auto& v : poly.hull_vertices) hull.push_back(point(v));
    json edges = json::array();
    for (const auto& e : poly.edges) {
        int d = 0;
        json diff = is_arithmetic_progression(e.on_edge, &d) ? json(d) : json(nullptr);
        edges.push_back(json{{"start", point(e.start)},
                             {"end", point(e.end)},
                             {"slope", e.slope.str()},
                             {"on_edge", e.on_edge},
                             {"progression_difference", diff}});
    }
    int zd = 0;
    const auto zero = a.zero_set();
    json zero_diff = is_arithmetic_progression(zero, &zd) ? json(zd) : json(nullptr);
    return json{{"schema_version", schema_version},
                {"entries", entries},
                {"n", a.n()},
                {"M", a.max_finite().str()},
                {"support", a.support()},
                {"zero_set", zero},
                {"zero_set_progression_difference", zero_diff},
                {"hull_vertices", hull},
                {"edges", edges},
                {"regular",
                 json{{"is_regular", reg.is_regular},
                      {"j_is_progression", reg.j_is_progression},
                      {"all_points_are_vertices", reg.all_points_are_vertices},
                      {"progression_difference",
                       reg.progression_difference ? json(*reg.progression_difference) : json(nullptr)}}}};
}

inline json labels(const window_graph& g, const std::vector<vertex_id>& path) {
    json out = json::array();
    for (vertex_id v : path) out.push_back(window_label(g.letters(), g.vertices()[v]));
    return out;
}

inline json detect_report(const detection& d, const std::optional<affine_normalization>& t = std::nullopt) {
    const auto& g = d.pruned;
    const auto& v = d.verdict;
    json cycles = json::array();
    for (const auto& c : v.cycles) {
        finite_word w;
        for (vertex_id x : c) w.values.push_back(g.letters().value(g.vertices()[x][0]));
        cycles.push_back(json{{"length", c.size()}, {"period_values", w.str()}});
    }
    json witness = nullptr;
    if (v.witness) {
        const auto& w = *v.witness;
        if (w.type == witness_structure::kind::branching) {
            witness = json{{"kind", "Branching"},
                           {"v0", labels(g, {w.v0})[0]},
                           {"v1", labels(g, {w.v1})[0]},
                           {"v2", labels(g, {w.v2})[0]},
                           {"loop_a", labels(g, w.loop_a)},
                           {"loop_b", labels(g, w.loop_b)}};
        } else {
            witness = json{{"kind", "TwoCycles"},
                           {"cycle_a", labels(g, w.cycle_a)},
                           {"connector", labels(g, w.connector)},
                           {"cycle_b", labels(g, w.cycle_b)}};
        }
        witness["word"] = unroll_witness(g, w, static_cast<std::size_t>(4 * (2 * g.letters().n + 1))).str();
    }
    const auto& s = v.stats;
    json out{{"schema_version", schema_version},
             {"verdict", to_string(v.verdict)},
             {"stable_periodic_only", v.stable_periodic_only},
             {"cycles", cycles},
             {"witness", witness},
             {"stats",
              json{{"alphabet_size", s.alphabet_size},
                   {"enumeration_nodes", s.enumeration_nodes},
                   {"g0_vertices", s.g0_vertices},
                   {"g0_arrows", s.g0_arrows},
                   {"prune_rounds", s.prune_rounds},
                   {"g_vertices", s.g_vertices},
                   {"g_arrows", s.g_arrows},
                   {"components", s.components}}}};
    if (t) out["normalization"] = json{{"alpha", t->alpha.str()}, {"beta", t->beta.str()}, {"scale", t->scale}};
    return out;
}

inline json entropy_report_json(const dimension_table& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(json{{"s", r.s}, {"dim", r.value}, {"ratio", r.ratio.str()}});
    return json{{"schema_version", schema_version},
                {"mode", to_string(t.mode)},
                {"rows", rows},
                {"h_upper", t.h_upper.str()},
                {"h_lower", t.h_lower ? json(t.h_lower->str()) : json(nullptr)},
                {"lower_family", t.lower_family},
                {"subadditive", t.subadditive},
                {"within_cap", t.within_cap}};
}

inline json check_report(const word_check& c) {
    return json{{"schema_version", schema_version},
                {"satisfies", c.satisfies},
                {"minimal", c.satisfies && c.minimal},
                {"failing_windows", c.failing_windows},
                {"non_minimal_positions", c.non_minimal_positions}};
}

inline json check_report(const periodic_check& c) {
    return json{{"schema_version", schema_version},
                {"satisfies", c.satisfies},
                {"minimal", c.satisfies && c.minimal},
                {"failing_windows", c.failing_windows},
                {"non_minimal_positions", c.non_minimal_positions}};
}

}  // namespace troprec::json_io

#pragma once

// JSON views of solver results and strict readers for run configurations.
// Reports contain no timings or host data, so a config and a seed fully
// determine the bytes written.

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "syl/axioms.hpp"
#include "syl/shooting.hpp"
#include "syl/suites.hpp"

namespace syl::report {

using nlohmann::json;

/// Bad or missing configuration entries.
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rejects keys outside `allowed`, so typos fail loudly.
inline void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw config_error(where + ": expected a JSON object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items())
        if (!ok.count(key)) throw config_error(where + ": unknown key '" + key + "'");
}

template <class T>
T required(const json& j, const char* key) {
    if (!j.contains(key)) throw config_error(std::string("missing required key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error(std::string("key '") + key + "' has the wrong type");
    }
}

template <class T>
T optional(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    return required<T>(j, key);
}

/// NaN and infinities become null.
inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline ScanSpec read_scan(const json& j, int n, int k) {
    ScanSpec s = ScanSpec::default_for(n, k);
    if (!j.contains("scan")) return s;
    const json& sc = j.at("scan");
    expect_keys(sc, {"lo", "hi", "points"}, "scan");
    s.lo = optional(sc, "lo", s.lo);
    s.hi = optional(sc, "hi", s.hi);
    s.points = optional<std::size_t>(sc, "points", s.points);
    return s;
}

inline json to_json(const AnnulusProblem& p) {
    return {{"n", p.n}, {"k", p.k}, {"R", p.R}, {"c1", p.c1}, {"c2", p.c2}};
}

inline json to_json(const ScanSpec& s) { return {{"lo", s.lo}, {"hi", s.hi}, {"points", s.points}}; }

inline json to_json(const ShootingResult& r) {
    json sols = json::array();
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        const auto& s = r.solutions[i];
        sols.push_back({{"index", i},
                        {"xi0", s.xi0},
                        {"xi_t0", s.xi_t0},
                        {"inner_residual", s.inner_residual},
                        {"outer_residual", s.outer_residual},
                        {"max_sigma_residual", s.max_sigma_residual},
                        {"steps", s.trajectory.points().size()}});
    }
    std::size_t candidates = 0;
    for (const auto& g : r.grid) candidates += g.candidate() ? 1 : 0;
    return {{"problem", to_json(r.problem)},
            {"scan", to_json(r.scan)},
            {"status", to_string(r.status)},
            {"solutions", sols},
            {"diagnostics",
             {{"seeds_integrated", r.grid.size()},
              {"seeds_reaching_R", candidates},
              {"inadmissible_seeds", r.inadmissible_seeds},
              {"sign_changes", r.sign_changes},
              {"widest_gap_cells", r.widest_gap},
              {"abandoned_brackets", r.abandoned_brackets},
              {"note", r.note}}}};
}

inline json to_json(const ThresholdResult& t) {
    json hist = json::array();
    for (const auto& h : t.history) hist.push_back({{"R", h.R}, {"status", to_string(h.status)}, {"solutions", h.solutions}});
    return {{"n", t.n},           {"k", t.k},         {"c1", t.c1},   {"c2", t.c2},
            {"status", to_string(t.status)},          {"R_star", number(t.R_star)},
            {"bracket", {number(t.lo), number(t.hi)}}, {"history", hist}, {"note", t.note}};
}

inline json to_json(const CounterexampleTable& tab) {
    json rows = json::array();
    for (const auto& r : tab.rows)
        rows.push_back({{"eps", r.eps},
                        {"xi0", r.xi0},
                        {"xi_t0", r.xi_t0},
                        {"xi_tt0", r.xi_tt0},
                        {"T", r.T},
                        {"stopped_by", r.stopped_by},
                        {"sup_u_inv_u_grad_u", r.c1_norm},
                        {"hessian_norm_at_1", r.hessian_at_1}});
    return {{"n", tab.n},
            {"k", tab.k},
            {"c", tab.c},
            {"delta", tab.delta},
            {"rows", rows},
            {"R0", number(tab.R0)},
            {"T_min", number(tab.T_min)},
            {"T_max", number(tab.T_max)},
            {"slope_log_xi_tt_vs_log_eps", number(tab.slope_xi_tt)},
            {"slope_log_hessian_vs_log_eps", number(tab.slope_hessian)},
            {"c1_norm_max_over_min", number(tab.c1_norm_ratio)}};
}

inline json to_json(const AxiomReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"max_violation", c.max_violation},
                          {"worst_sample", c.worst_sample},
                          {"observed", number(c.observed)}});
    return {{"all_passed", rep.all_passed()}, {"checks", checks}};
}

inline json to_json(const SuiteResult& r) {
    json metrics = json::array();
    for (const auto& m : r.metrics)
        metrics.push_back({{"name", m.name}, {"value", number(m.value)}, {"limit", m.limit}, {"ok", m.ok}});
    return {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"metrics", metrics}, {"note", r.note}};
}

}  // namespace syl::report

#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "seqspace/norm_attaining.hpp"
#include "seqspace/norms.hpp"
#include "seqspace/spaceability.hpp"

namespace seqspace {

using Json = nlohmann::json;

/// Round-trip decimal rendering; empty for NaN (CSV convention).
inline std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Json to_json(const PartialNormReport& r) {
    return Json{{"family", r.family},
                {"p", r.p},
                {"q", r.q},
                {"depth", r.depth},
                {"value", r.value},
                {"direction", to_string(r.direction)}};
}

/// CSV layout of a norm report; the column order is part of the interface.
inline constexpr const char* kPartialNormCsvHeader = "family,p,q,N,value,direction";

inline std::string to_csv_row(const PartialNormReport& r) {
    return r.family + "," + format_double(r.p) + "," + format_double(r.q) + "," +
           std::to_string(r.depth) + "," + format_double(r.value) + "," +
           to_string(r.direction);
}

inline Json to_json(const DivergenceCertificate& c) {
    return Json{{"crossed", c.crossed},
                {"depth", c.depth},
                {"value", c.value},
                {"exponent", c.exponent},
                {"threshold", c.threshold}};
}

inline Json to_json(const EmbeddingReport& r) {
    Json j{{"m", r.m},
           {"inner_depth", r.inner_depth},
           {"stilde", r.stilde},
           {"combination_value", r.combination_value},
           {"witness_upper", r.witness_upper},
           {"coefficient_stilde_sum", r.coefficient_stilde_sum},
           {"inequality_holds", r.inequality_holds},
           {"pass", r.pass()}};
    if (r.has_lp_identity) {
        j["lp_identity_lhs"] = r.lp_identity_lhs;
        j["lp_identity_rhs"] = r.lp_identity_rhs;
        j["lp_identity_rel_gap"] = r.lp_identity_rel_gap;
    }
    return j;
}

inline Json to_json(const AvoidanceReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.exponents)
        rows.push_back(Json{{"q", row.q},
                            {"scaled_threshold", row.scaled_threshold},
                            {"certificate", to_json(row.certificate)},
                            {"block_value", row.block_value},
                            {"profile_bound", row.profile_bound}});
    Json j{{"block", r.block},
           {"alpha", r.alpha},
           {"coordinate_depth", r.coordinate_depth},
           {"coordinate_identity_ok", r.coordinate_identity_ok},
           {"outside_blocks_zero", r.outside_blocks_zero},
           {"exponents", rows},
           {"pass", r.pass()}};
    if (r.has_c0) {
        j["delta"] = r.delta;
        j["c0_required"] = r.c0_required;
        j["c0_verified"] = r.c0_verified;
    }
    return j;
}

inline Json to_json(const AxiomsReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"sample", row.sample},
                            {"nonzero_count", row.nonzero_count},
                            {"norm_full", row.norm_full},
                            {"norm_zerofree", row.norm_zerofree},
                            {"b1_relative_gap", row.b1_relative_gap},
                            {"b2_violation", row.b2_violation}});
    return Json{{"K", r.K},
                {"max_b1_relative_gap", r.max_b1_relative_gap},
                {"max_b2_violation", r.max_b2_violation},
                {"rows", rows}};
}

inline Json to_json(const AttainmentReport& r) {
    return Json{{"d", r.d},
                {"r", r.r},
                {"q", r.q},
                {"m", r.m},
                {"value_at_x0", r.value_at_x0},
                {"analytic_norm", r.analytic_norm},
                {"max_found", r.max_found},
                {"max_ratio", r.max_ratio},
                {"samples", r.samples},
                {"seed", r.seed},
                {"tolerance", r.tolerance},
                {"mode", r.mode},
                {"pass", r.pass()}};
}

inline Json to_json(const PropositionReport& r) {
    return Json{{"samples", r.samples},
                {"members", r.members},
                {"zerofree_invariance_failures", r.zerofree_invariance_failures},
                {"submultiple_cases", r.submultiple_cases},
                {"submultiple_closure_failures", r.submultiple_closure_failures},
                {"witness_avoids", r.witness_avoids},
                {"witness_zerofree_nonzero", r.witness_zerofree_nonzero},
                {"pass", r.pass()}};
}

inline Json to_json(const SpaceDescriptor& s) {
    return Json{{"family", s.family_name()},
                {"p", s.p},
                {"q", s.q},
                {"K", s.K},
                {"stilde", s.stilde}};
}

inline Json to_json(const AvoidanceSet& a) {
    switch (a.kind) {
        case AvoidanceSet::Kind::UnionLq: return Json{{"kind", "union-lq"}, {"gamma", a.gamma}};
        case AvoidanceSet::Kind::C0: return Json{{"kind", "c0"}};
        case AvoidanceSet::Kind::Custom: return Json{{"kind", "custom"}};
    }
    return Json{};
}

/// Named catalog record: {space, params, avoid, formula-id,
/// certificate-params}. Sequences serialize by name and parameters, never by
/// closure capture.
inline Json witness_entry_json(const Witness& w) {
    Json cert;
    if (w.membership) {
        cert["envelope"] = Json{{"formula", w.membership->envelope.formula_id()},
                                {"scale", w.membership->envelope.scale()},
                                {"a", w.membership->envelope.power_exponent()},
                                {"b", w.membership->envelope.log_exponent()},
                                {"nonincreasing", w.membership->norms_nonincreasing}};
    }
    Json profiles = Json::array();
    for (const auto& d : w.divergence)
        profiles.push_back(Json{{"q", d.q}, {"A", d.A}, {"B", d.B}, {"scale", d.scale}});
    cert["divergence_profiles"] = profiles;
    if (w.separation) cert["delta"] = w.separation->delta;

    Json params;
    if (w.powerlog) params = Json{{"a", w.powerlog->a}, {"b", w.powerlog->b}};

    return Json{{"space", to_json(w.home)},
                {"params", params},
                {"avoid", to_json(w.avoidance)},
                {"formula-id", w.formula_id},
                {"certificate-params", cert}};
}

/// Flattens a JSON value into deterministic "path,value" CSV rows
/// (object keys are already sorted by nlohmann's ordered map).
inline void flatten_json(const Json& j, const std::string& prefix,
                         std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        std::size_t k = 0;
        for (const auto& value : j) flatten_json(value, prefix + "[" + std::to_string(k++) + "]", out);
    } else if (j.is_number_float()) {
        out.emplace_back(prefix, format_double(j.get<double>()));
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

inline std::string report_to_csv(const Json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten_json(report, "", rows);
    std::string csv = "field,value\n";
    for (const auto& [path, value] : rows) csv += path + "," + value + "\n";
    return csv;
}

} // namespace seqspace

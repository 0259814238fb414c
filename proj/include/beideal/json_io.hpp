#pragma once

#include <json.hpp>

#include "beideal/sweep.hpp"

namespace bei {

inline nlohmann::json to_json(const InvariantBundle& b) {
    return {
        {"n", b.n},         {"d", b.d},           {"f", b.f},
        {"kappa", b.kappa}, {"iv", b.iv},         {"omega", b.omega},
        {"chordal", b.chordal}, {"connected", b.connected},
        {"complete", b.complete}, {"gap", b.gap},
    };
}

inline nlohmann::json to_json(const DepthResult& r) {
    nlohmann::json j{
        {"lower", r.lower},
        {"upper", r.upper},
        {"rule", depth_rule_name(r.rule)},
        {"class", class_tag_name(r.label.tag)},
        {"certificate", r.certificate},
    };
    if (r.exact) j["exact"] = *r.exact;
    if (r.label.config) {
        const auto& c = *r.label.config;
        nlohmann::json cfg{{"u", c.u}, {"v", c.v}, {"path", c.path}};
        if (c.off_path_internal) cfg["off_path_internal"] = *c.off_path_internal;
        if (c.j) cfg["j"] = *c.j;
        switch (c.pattern) {
            case Pattern::H: cfg["pattern"] = "H"; break;
            case Pattern::HPrime: cfg["pattern"] = "HPrime"; break;
            case Pattern::HDoublePrime: cfg["pattern"] = "HDoublePrime"; break;
            case Pattern::None: cfg["pattern"] = "None"; break;
        }
        if (c.h2_square) {
            cfg["h2_square"] = std::vector<int>(c.h2_square->begin(), c.h2_square->end());
        }
        j["config"] = cfg;
    }
    if (!r.label.notes.empty()) j["notes"] = r.label.notes;
    return j;
}

inline nlohmann::json to_json(const OracleReport& r) {
    nlohmann::json betti = nlohmann::json::array();
    for (const auto& [key, value] : r.initial_betti.beta) {
        betti.push_back({key.first, key.second, value});
    }
    nlohmann::json extremal = nlohmann::json::array();
    for (const auto& [i, jj] : r.initial_betti.extremal_corners) extremal.push_back({i, jj});
    return {
        {"n", r.n},
        {"depth", r.depth},
        {"pd", r.pd},
        {"reg", r.reg},
        {"extremal", extremal},
        {"betti_initial", betti},
        {"order", "diaglex"},
        {"field", field_name(r.field)},
    };
}

inline nlohmann::json to_json(const GraphRecord& rec) {
    nlohmann::json j{
        {"index", rec.index},
        {"graph6", rec.graph6},
        {"invariants", to_json(rec.bundle)},
        {"consistent", rec.consistent},
    };
    if (rec.complete) j["complete"] = true;
    if (rec.class_tag) j["class"] = *rec.class_tag;
    if (rec.predicted) j["predicted"] = to_json(*rec.predicted);
    if (rec.oracle) {
        j["oracle"] = {{"depth", rec.oracle->depth},
                       {"pd", rec.oracle->pd},
                       {"reg", rec.oracle->reg}};
    }
    if (rec.has_long_induced_cycle) j["induced_c5_or_longer"] = true;
    if (rec.q53_probe) j["q53_probe"] = true;
    return j;
}

inline nlohmann::json to_json(const SweepSummary& s) {
    nlohmann::json j{
        {"total", s.total},
        {"processed", s.processed},
        {"with_oracle", s.with_oracle},
        {"mismatches", s.mismatches},
        {"by_class", s.by_class},
        {"mismatch_graphs", s.mismatch_graphs},
        {"q53_graphs", s.q53_graphs},
    };
    if (s.resume_token) j["resume_token"] = *s.resume_token;
    return j;
}

}  // namespace bei

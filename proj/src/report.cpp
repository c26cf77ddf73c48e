#include "ordcalc/report.hpp"

#include <json.hpp>

namespace ordcalc {

namespace {

nlohmann::json card_json(const CardClass& c) {
    nlohmann::json j;
    switch (c.kind) {
        case CardClass::Kind::Fin:
            j["class"] = "fin";
            j["n"] = c.n;
            break;
        case CardClass::Kind::Aleph0: j["class"] = "aleph0"; break;
        case CardClass::Kind::Kappa: j["class"] = "kappa"; break;
    }
    return j;
}

nlohmann::json ord_json(const CnfOrdinal& o) {
    nlohmann::json j;
    j["text"] = o.str();
    j["terms"] = nlohmann::json::array();
    for (const auto& t : o.terms())
        j["terms"].push_back({{"exp", ord_json(t.exp)}, {"coeff", t.coeff}});
    return j;
}

nlohmann::json opt_bool(const std::optional<bool>& b) {
    if (!b) return "n/a";
    return *b;
}

} // namespace

std::string ordinal_json(const CnfOrdinal& o) { return ord_json(o).dump(2); }

std::string attr_report_json(const TermPtr& t, const AttrReport& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["term"] = t->str();
    j["card"] = card_json(r.card);
    j["linear"] = r.linear;
    j["fac"] = r.fac;
    j["kappa_ac"] = r.kappa_ac;
    j["ac_card"] = card_json(r.ac_card);
    j["wf_omega"] = r.wf_omega;
    j["wf_kappa"] = r.wf_kappa;
    j["cowf_omega"] = r.cowf_omega;
    j["cowf_kappa"] = r.cowf_kappa;
    j["has_first"] = opt_bool(r.has_first);
    j["has_last"] = opt_bool(r.has_last);
    j["has_adjacent_pair"] = opt_bool(r.has_adjacent_pair);
    j["weakly_kappa_dense"] = r.weakly_kappa_dense;
    j["embeds_weakly_kappa_dense"] = r.embeds_weakly_kappa_dense;
    j["weakly_kappa_scattered"] = r.weakly_kappa_scattered;
    j["strongly_kappa_scattered"] = r.strongly_kappa_scattered;
    j["scattered_omega"] = r.scattered_omega;
    j["hier"]["in_h"] = r.hier.in_h;
    j["hier"]["alpha_bound"] = r.hier.in_h ? nlohmann::json(r.hier.alpha_bound.str())
                                           : nlohmann::json(nullptr);
    if (r.hier.rho_bound) {
        j["hier"]["rho_bound"] = r.hier.rho_bound->str();
        j["hier"]["rho_tag"] = card_json(r.hier.rho_tag);
    } else {
        j["hier"]["rho_bound"] = nullptr;
    }
    return j.dump(2);
}

std::string rank_json(const TermPtr& t, const std::string& kind, const CnfOrdinal& value,
                      bool in_h, const std::string& method) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["term"] = t->str();
    j["kind"] = kind;
    j["value"] = value.str();
    j["structured"] = ord_json(value);
    j["method"] = method;
    if (kind == "hierarchy") j["in_h"] = in_h;
    return j.dump(2);
}

std::string condensation_json(const TermPtr& t, const std::string& mode,
                              const CondensationResult& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["term"] = t->str();
    j["mode"] = mode;
    j["indeterminate"] = r.indeterminate;
    if (r.indeterminate) {
        j["note"] = r.note;
    } else {
        j["quotient"] = r.quotient->str();
        j["steps"] = r.steps;
        j["class_map"] = nlohmann::json::array();
        for (const auto& c : r.class_map)
            j["class_map"].push_back({{"pattern", c.pattern}, {"representative", c.representative}});
    }
    return j.dump(2);
}

} // namespace ordcalc

#include "gonality/json.hpp"

#include "gonality/version.hpp"

namespace gonality {

void to_json(Json& j, const Divisor& d) {
    j = d.vector();
}

void from_json(const Json& j, Divisor& d) {
    d = Divisor(j.get<std::vector<Chips>>());
}

void to_json(Json& j, const FiringScript& x) {
    j = x.times;
}

void to_json(Json& j, const VertexSet& s) {
    j = s.members();
}

void to_json(Json& j, const BurnResult& b) {
    Json order = Json::array();
    for (auto step : b.burn_order)
        order.push_back({{"vertex", step.vertex}, {"step", step.step}});
    j = {{"unburned", b.unburned}, {"burn_order", order}};
}

void to_json(Json& j, const CertificateEntry& e) {
    j = {{"target", e.target}, {"witness", e.witness}, {"script", e.script}};
}

void to_json(Json& j, const RankCertificate& c) {
    j = {{"entries", c.entries}, {"uncovered", c.uncovered ? Json(*c.uncovered) : Json(nullptr)}};
}

void to_json(Json& j, const DegreeStats& s) {
    j = {{"degree", s.degree}, {"candidates", s.candidates}, {"pruned", s.pruned}, {"exhaustive", s.exhaustive}};
}

void to_json(Json& j, const GonalityReport& r) {
    j = {{"graph", r.graph_id},
         {"r", r.r},
         {"dgon", r.value},
         {"base", r.base},
         {"witness", r.witness},
         {"certificate", r.certificate},
         {"degrees", r.degrees},
         {"candidates", r.candidates},
         {"pruned", r.pruned},
         {"truncated", r.truncated},
         {"used_separator", r.used_separator},
         {"seconds", r.seconds}};
}

void to_json(Json& j, const BrillNoetherCheck& b) {
    j = {{"genus", b.genus}, {"bound", b.bound}, {"dgon", b.dgon}, {"satisfied", b.satisfied}};
}

void to_json(Json& j, const SweepResult& s) {
    Json entries = Json::array();
    for (auto e : s.entries)
        entries.push_back({{"k", e.k}, {"dgon", e.value}});
    j = {{"r", s.r}, {"kmax", s.kmax}, {"entries", entries}, {"minimum", s.minimum}};
}

void to_json(Json& j, const ScanRecord& r) {
    j = {{"schema", schema_version}, {"seq", r.seq}, {"graph", r.graph}};
    if (r.error) {
        j["error"] = *r.error;
        return;
    }
    j["n"] = r.n;
    j["m"] = r.m;
    j["dgon"] = r.dgon;
    j["dgon_sigma2"] = r.dgon_sigma2;
    j["counterexample"] = r.counterexample;
    j["bn"] = r.bn;
    j["subdivision_bound_ok"] = r.subdivision_bound_ok;
    j["factor_two_ok"] = r.factor_two_ok;
    j["seconds"] = r.seconds;
}

void from_json(const Json& j, ScanRecord& r) {
    r = ScanRecord{};
    r.seq = j.at("seq").get<std::uint64_t>();
    r.graph = j.at("graph").get<std::string>();
    if (j.contains("error")) {
        r.error = j.at("error").get<std::string>();
        return;
    }
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.dgon = j.at("dgon").get<Chips>();
    r.dgon_sigma2 = j.at("dgon_sigma2").get<Chips>();
    r.counterexample = j.at("counterexample").get<bool>();
    const auto& bn = j.at("bn");
    r.bn.genus = bn.at("genus").get<int>();
    r.bn.bound = bn.at("bound").get<int>();
    r.bn.dgon = bn.at("dgon").get<Chips>();
    r.bn.satisfied = bn.at("satisfied").get<bool>();
    r.subdivision_bound_ok = j.at("subdivision_bound_ok").get<bool>();
    r.factor_two_ok = j.at("factor_two_ok").get<bool>();
    r.seconds = j.value("seconds", 0.0);
}

} // namespace gonality

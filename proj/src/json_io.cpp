#include "sumsets/json_io.hpp"

#include <stdexcept>

namespace sumsets {

ojson form_to_json(const StructureForm& form) {
    ojson j;
    j["tag"] = tag_of(form);
    ojson params = ojson::object();
    struct Visitor {
        ojson& p;
        void operator()(const S2CaseI& f) const { p["c"] = f.c; p["d"] = f.d; }
        void operator()(const S2CaseII& f) const { p["c"] = f.c; p["d"] = f.d; }
        void operator()(const S2CaseIII& f) const { p["c"] = f.c; p["d"] = f.d; }
        void operator()(const S2CaseIV& f) const { p["d"] = f.d; p["s"] = f.s; p["t"] = f.t; }
        void operator()(const S2CaseV& f) const { p["d"] = f.d; p["s"] = f.s; p["t"] = f.t; }
        void operator()(const SnOdd& f) const {
            p["n"] = f.n; p["b"] = f.b; p["c"] = f.c; p["d"] = f.d;
        }
        void operator()(const SnEven& f) const { p["n"] = f.n; p["b"] = f.b; p["d"] = f.d; }
        void operator()(const NwedgeAp& f) const {
            p["start"] = f.start; p["diff"] = f.diff; p["len"] = f.len;
        }
        void operator()(const NotExtremal& f) const { p["reason"] = f.reason; }
    };
    std::visit(Visitor{params}, form);
    j["params"] = std::move(params);
    return j;
}

ojson bound_report_to_json(const BoundReport& report) {
    ojson j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["bound"] = report.bound;
    j["actual"] = report.actual;
    j["slack"] = report.slack;
    j["equality"] = report.equality;
    j["applicable"] = report.applicable;
    return j;
}

ojson witness_to_json(const WitnessRecord& record) {
    ojson j;
    j["type"] = "witness";
    j["n"] = record.n;
    j["k"] = record.k;
    j["set"] = record.set;
    j["canonical"] = record.canonical;
    if (record.form) {
        j["actual"] = record.actual;
        j["bound"] = record.bound;
        j["form"] = form_to_json(*record.form);
    } else if (record.bound != 0 || record.detail.empty()) {
        j["actual"] = record.actual;
        j["bound"] = record.bound;
    }
    if (!record.detail.empty()) j["detail"] = record.detail;
    return j;
}

ojson counterexample_to_json(const CounterexampleRecord& record) {
    ojson j;
    j["type"] = "counterexample";
    j["n"] = record.n;
    j["k"] = record.k;
    j["set"] = record.set;
    j["detail"] = record.detail;
    return j;
}

ojson campaign_spec_to_json(const CampaignSpec& spec) {
    ojson j;
    j["theorem"] = theorem_name(spec.theorem);
    j["n"] = ojson::array({spec.n_lo, spec.n_hi});
    j["k"] = ojson::array({spec.k_lo, spec.k_hi});
    j["max_abs"] = spec.max_abs;
    j["workers"] = spec.workers;
    j["survey"] = spec.survey;
    j["budget"] = spec.budget;
    if (!spec.output_path.empty()) j["out"] = spec.output_path;
    return j;
}

CampaignSpec campaign_spec_from_json(const ojson& j) {
    CampaignSpec spec;
    auto id = theorem_from_name(j.at("theorem").get<std::string>());
    if (!id) throw std::invalid_argument("campaign spec: unknown theorem id");
    spec.theorem = *id;
    auto range = [&](const char* key, std::int64_t& lo, std::int64_t& hi) {
        if (!j.contains(key)) return;
        if (j[key].is_array()) {
            lo = j[key].at(0).get<std::int64_t>();
            hi = j[key].at(1).get<std::int64_t>();
        } else {
            lo = hi = j[key].get<std::int64_t>();
        }
    };
    std::int64_t n_lo = spec.n_lo, n_hi = spec.n_hi;
    range("n", n_lo, n_hi);
    spec.n_lo = int(n_lo);
    spec.n_hi = int(n_hi);
    range("k", spec.k_lo, spec.k_hi);
    if (j.contains("max_abs")) spec.max_abs = j["max_abs"].get<std::int64_t>();
    if (j.contains("workers")) spec.workers = j["workers"].get<int>();
    if (j.contains("survey")) spec.survey = j["survey"].get<bool>();
    if (j.contains("budget")) spec.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("out")) spec.output_path = j["out"].get<std::string>();
    return spec;
}

} // namespace sumsets

#include "coarsepath/json_io.hpp"

#include <sstream>

namespace coarsepath {

Json decomposition_json(const PathDecomposition& pd) {
    Json bags = Json::array();
    for (const auto& bag : pd.bags) bags.push_back(bag.to_vector());
    return Json{{"bags", bags}};
}

Json metrics_json(const DecompositionMetrics& m) {
    Json j;
    j["length"] = m.length;
    j["breadth"] = m.breadth;
    j["inner_length"] = m.inner_length;
    j["inner_breadth"] = m.inner_breadth;
    j["strong_breadth"] = m.strong_breadth ? Json(*m.strong_breadth) : Json(nullptr);
    return j;
}

Json caterpillar_json(const Caterpillar& t) {
    Json attach = Json::object();
    for (int v = 0; v < t.n; ++v)
        if (t.attach[v] >= 0) attach[std::to_string(v)] = t.attach[v];
    return Json{{"spine", t.spine}, {"attach", attach}};
}

Json qi_json(const WeightedPath& p, const QuasiIsometryMap& m) {
    Json weights = Json::array();
    for (const auto& w : p.weights) weights.push_back(rational_to_string(w));
    Json psi = Json::object();
    for (std::size_t v = 0; v < m.psi.size(); ++v)
        psi[std::to_string(v)] = m.psi[v];
    return Json{{"path_weights", weights},
                {"psi", psi},
                {"L", rational_to_string(m.L)},
                {"C", rational_to_string(m.C)}};
}

Json layout_json(const LinearLayout& layout) {
    return Json{{"sigma", layout.sigma}, {"mu", layout.mu}};
}

Json domination_json(const DominatingPair& w) {
    Json vertices = Json::array();
    if (w.pair.first >= 0) vertices = {w.pair.first, w.pair.second};
    return Json{{"kind", "pair"}, {"vertices", vertices}, {"k", w.k}};
}

Json domination_json(const DominatingPath& w) {
    return Json{{"kind", "path"}, {"vertices", w.path}, {"k", w.k}};
}

Json fat_minor_json(const FatMinorWitness& w) {
    Json sets = Json::array();
    for (const auto& h : w.branch_sets) sets.push_back(h.to_vector());
    return Json{{"kind", w.kind == FatMinorWitness::Kind::K3 ? "K3" : "K13"},
                {"branch_sets", sets},
                {"paths", w.paths},
                {"K", w.K}};
}

Json report_json(const ParameterReport& r, int n) {
    Json j;
    j["graph6"] = r.graph6;
    j["n"] = n;
    Json absent = Json::object();
    auto put = [&](const char* name, const std::optional<long long>& v,
                   const char* reason) {
        if (v) {
            j[name] = *v;
        } else {
            j[name] = nullptr;
            absent[name] = reason;
        }
    };
    put("pl", report_value(r, "pl"), "vertex count above the pl oracle cap");
    put("pb", report_value(r, "pb"), "vertex count above the pl oracle cap");
    j["delta"] = r.layering.delta;
    j["rho"] = r.layering.rho;
    put("adc", report_value(r, "adc"), "vertex count above the adc oracle cap");
    j["pat"] = r.pat.k;
    j["pcc"] = r.pcc;
    j["dpr"] = r.dpr.k;
    put("dsp", report_value(r, "dsp"), "geodesic enumeration cap exceeded");
    j["mci"] = r.mci.r;
    j["mfi_lb"] = r.mfi_lower;
    if (!absent.empty()) j["absent"] = absent;

    Json w = Json::object();
    if (r.pl) w["pl"] = decomposition_json(r.pl->witness);
    if (r.pb) w["pb"] = decomposition_json(r.pb->witness);
    w["layering_start"] = r.layering.start;
    w["pat"] = Json{{"k", r.pat.k}, {"admissible", r.pat.admissible}};
    w["dpr"] = domination_json(r.dpr);
    if (r.dsp) w["dsp"] = domination_json(*r.dsp);
    if (r.mci.certificate) {
        const auto& c = *r.mci.certificate;
        w["mci"] = Json{{"triple", c.triple},
                        {"paths", Json::array({c.paths[0], c.paths[1], c.paths[2]})}};
    }
    if (r.mfi_witness) w["fat_minor"] = fat_minor_json(*r.mfi_witness);
    j["witnesses"] = w;
    return j;
}

std::string report_csv_header() {
    return "graph6,n,pl,pb,delta,rho,adc,pat,pcc,dpr,dsp,mci,mfi_lb";
}

std::string report_csv_row(const ParameterReport& r, int n) {
    std::ostringstream out;
    auto cell = [&](const std::optional<long long>& v) {
        out << ',';
        if (v) out << *v;
    };
    out << r.graph6 << ',' << n;
    for (const char* p : {"pl", "pb", "delta", "rho", "adc", "pat", "pcc", "dpr",
                          "dsp", "mci", "mfi_lb"})
        cell(report_value(r, p));
    return out.str();
}

}  // namespace coarsepath

#include "pwqh/json_io.hpp"

#include <cmath>
#include <sstream>

namespace pwqh {
namespace {

BiPoly poly_from_json(const json& arr) {
    BiPoly p;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("polynomial terms must be [i, j, coeff] triples");
        p.add_term(t[0].get<int>(), t[1].get<int>(), t[2].get<double>());
    }
    return p;
}

json poly_to_json(const BiPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k.first, k.second, c});
    return arr;
}

json axis_set_to_json(const AxisSet& s) {
    json j;
    switch (s.kind) {
        case AxisSet::Kind::empty: j["kind"] = "empty"; break;
        case AxisSet::Kind::whole_axis: j["kind"] = "whole-axis"; break;
        case AxisSet::Kind::points:
            j["kind"] = "points";
            j["points"] = s.points;
            break;
        case AxisSet::Kind::axis_minus_points:
            j["kind"] = "axis-minus-points";
            j["removed"] = s.points;
            break;
        case AxisSet::Kind::intervals: {
            j["kind"] = "intervals";
            json iv = json::array();
            for (const auto& [a, b] : s.intervals) {
                json pairj = json::array();
                pairj.push_back(std::isinf(a) ? json("-inf") : json(a));
                pairj.push_back(std::isinf(b) ? json("inf") : json(b));
                iv.push_back(pairj);
            }
            j["intervals"] = iv;
            if (!s.points.empty()) j["points"] = s.points;
            break;
        }
    }
    return j;
}

const std::vector<std::string>& param_names(Variant v) {
    static const std::vector<std::string> i = {"a1", "b1", "a1_tilde"};
    static const std::vector<std::string> ii = {"a2", "b21", "b22", "a2_tilde"};
    static const std::vector<std::string> iii = {"a31", "a32", "b3", "a31_tilde"};
    switch (v) {
        case Variant::I: return i;
        case Variant::II: return ii;
        case Variant::III: return iii;
    }
    return i;
}

std::map<std::pair<int, int>, double> family_from_json(const json& arr) {
    std::map<std::pair<int, int>, double> fam;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("coefficient entries must be [i, j, value] triples");
        fam[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<double>();
    }
    return fam;
}

json family_to_json(const std::map<std::pair<int, int>, double>& fam) {
    json arr = json::array();
    for (const auto& [k, v] : fam) arr.push_back({k.first, k.second, v});
    return arr;
}

} // namespace

PiecewiseField field_from_json(const json& j) {
    if (!j.contains("upper") || !j.contains("lower"))
        throw std::invalid_argument("system JSON needs \"upper\" and \"lower\" zones");
    return PiecewiseField(poly_from_json(j["upper"].at("P")), poly_from_json(j["upper"].at("Q")),
                          poly_from_json(j["lower"].at("P")), poly_from_json(j["lower"].at("Q")));
}

json field_to_json(const PiecewiseField& f) {
    json j;
    j["upper"]["P"] = poly_to_json(f.upper_p);
    j["upper"]["Q"] = poly_to_json(f.upper_q);
    j["lower"]["P"] = poly_to_json(f.lower_p);
    j["lower"]["Q"] = poly_to_json(f.lower_q);
    return j;
}

CanonicalForm form_from_params(const std::string& variant, const std::vector<double>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("form " + variant + " takes " + std::to_string(n) +
                                        " parameters");
    };
    if (variant == "I") {
        need(3);
        return CanonicalForm(FormI{params[0], params[1], params[2]});
    }
    if (variant == "II") {
        need(4);
        return CanonicalForm(FormII{params[0], params[1], params[2], params[3]});
    }
    if (variant == "III") {
        need(4);
        return CanonicalForm(FormIII{params[0], params[1], params[2], params[3]});
    }
    throw std::invalid_argument("unknown form variant: " + variant);
}

CanonicalForm form_from_json(const json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    const json& pj = j.at("params");
    std::vector<double> params;
    Variant v = variant == "I" ? Variant::I : (variant == "II" ? Variant::II : Variant::III);
    if (variant != "I" && variant != "II" && variant != "III")
        throw std::invalid_argument("unknown form variant: " + variant);
    for (const auto& name : param_names(v)) params.push_back(pj.at(name).get<double>());
    return form_from_params(variant, params);
}

json form_to_json(const CanonicalForm& form) {
    json j;
    j["variant"] = variant_name(form.variant());
    const auto& names = param_names(form.variant());
    for (std::size_t i = 0; i < names.size(); ++i) j["params"][names[i]] = form.params()[i];
    return j;
}

json transform_record_to_json(const TransformRecord& rec) {
    json j;
    j["x_scale"] = {{"num", rec.x_num}, {"den", rec.x_den}};
    j["t_scale"] = {{"upper", rec.t_upper}, {"lower", rec.t_lower}};
    return j;
}

json switching_analysis_to_json(const SwitchingAnalysis& sw) {
    json j;
    j["crossing"] = axis_set_to_json(sw.crossing);
    j["sliding"] = axis_set_to_json(sw.sliding);
    if (sw.singular.all_of_sliding) {
        j["singular"] = {{"kind", "whole-sliding-set"}};
    } else {
        j["singular"] = {{"kind", "points"}, {"points", sw.singular.points}};
    }
    if (sw.boundary_equilibria_whole_axis)
        j["boundary_equilibria"] = "whole-axis";
    else
        j["boundary_equilibria"] = sw.boundary_equilibria;
    return j;
}

json center_report_to_json(const CenterReport& rep) {
    json j;
    j["is_center"] = rep.is_center;
    j["reason"] = center_reason_name(rep.reason);
    j["global"] = rep.global;
    j["isochronous"] = rep.isochronous;
    return j;
}

json portrait_case_to_json(const PortraitCase& pc) {
    json j;
    j["variant"] = variant_name(pc.variant);
    j["case_id"] = pc.case_id;
    j["signature"] = pc.signature;
    j["has_center"] = pc.has_center;
    json inf = json::array();
    for (const auto& eq : pc.infinity) {
        inf.push_back({{"zone", eq.zone == Zone::upper ? "upper" : "lower"},
                       {"location", infinity_location_name(eq.location)},
                       {"type", infinity_type_name(eq.type)}});
    }
    j["infinity"] = inf;
    return j;
}

PerturbationSpec perturbation_from_json(const json& j) {
    PerturbationSpec p;
    p.n = j.at("n").get<int>();
    if (j.contains("c_plus")) p.c_plus = family_from_json(j["c_plus"]);
    if (j.contains("c_minus")) p.c_minus = family_from_json(j["c_minus"]);
    if (j.contains("d_plus")) p.d_plus = family_from_json(j["d_plus"]);
    if (j.contains("d_minus")) p.d_minus = family_from_json(j["d_minus"]);
    p.validate();
    return p;
}

json perturbation_to_json(const PerturbationSpec& p) {
    json j;
    j["n"] = p.n;
    j["c_plus"] = family_to_json(p.c_plus);
    j["c_minus"] = family_to_json(p.c_minus);
    j["d_plus"] = family_to_json(p.d_plus);
    j["d_minus"] = family_to_json(p.d_minus);
    return j;
}

json melnikov_poly_to_json(const MelnikovPoly& m) {
    json j;
    j["n"] = m.n;
    j["exponents"] = m.exponents();
    json xi;
    for (const auto& [k, v] : m.terms) {
        std::ostringstream key;
        key << "(" << k.first << "," << k.second << ")";
        xi[key.str()] = v;
    }
    j["xi"] = xi;
    j["xi_max"] = xi_max(m.n);
    std::vector<double> coeffs;
    for (const auto& [e, c] : m.s_coefficients()) coeffs.push_back(c);
    j["variations"] = descartes_variations(coeffs);
    json roots = json::array();
    if (!m.terms.empty()) {
        for (const auto& r : positive_roots(m))
            roots.push_back({{"h", r.h}, {"simple", r.simple}});
    }
    j["roots"] = roots;
    return j;
}

std::string trajectory_to_csv(const Trajectory& tr) {
    std::ostringstream os;
    os << "t,x,y,event\n";
    os.precision(17);
    std::size_t ev = 0;
    for (const auto& s : tr.samples) {
        std::string kind;
        while (ev < tr.events.size() && tr.events[ev].t < s[0]) ++ev;
        if (ev < tr.events.size() && tr.events[ev].t == s[0]) kind = event_kind_name(tr.events[ev].kind);
        os << s[0] << "," << s[1] << "," << s[2] << "," << kind << "\n";
    }
    return os.str();
}

json analyze_system(const PiecewiseField& f) {
    json j;
    j["system"] = field_to_json(f);

    json weights;
    auto wv_json = [](const std::optional<WeightVector>& w) -> json {
        if (!w) return nullptr;
        return {{"s1", w->s1}, {"s2", w->s2}, {"d", w->d}};
    };
    weights["upper"] = wv_json(minimal_weight_vector(f.upper_p, f.upper_q));
    weights["lower"] = wv_json(minimal_weight_vector(f.lower_p, f.lower_q));
    j["weight_vectors"] = weights;

    const auto [form, rec] = canonicalize(f);
    j["canonical_form"] = form_to_json(form);
    j["transform"] = transform_record_to_json(rec);
    j["switching"] = switching_analysis_to_json(switching_analysis(f));
    j["center"] = center_report_to_json(center_report(form));
    j["portrait"] = portrait_case_to_json(classify_case(form));
    return j;
}

} // namespace pwqh

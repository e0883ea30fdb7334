// Python bindings for the pwqh core. Scalar operations are exposed directly;
// structured data crosses the boundary as JSON strings and is rehydrated into
// dicts by the pwqh package wrappers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwqh/json_io.hpp"
#include "pwqh/specfun.hpp"

namespace py = pybind11;
using namespace pwqh;

namespace {

json trajectory_json(const Trajectory& tr) {
    json j;
    json samples = json::array();
    for (const auto& s : tr.samples) samples.push_back({s[0], s[1], s[2]});
    j["samples"] = samples;
    json events = json::array();
    for (const auto& e : tr.events)
        events.push_back({{"t", e.t}, {"x", e.x}, {"kind", event_kind_name(e.kind)}});
    j["events"] = events;
    j["reached_tmax"] = tr.reached_tmax;
    return j;
}

} // namespace

PYBIND11_MODULE(_pwqh, m) {
    m.doc() = "piecewise smooth quadratic quasi-homogeneous systems: core operations";

    // --- counting and special values
    m.def("xi_max", &xi_max, py::arg("n"),
          "maximal limit cycle count for degree-n perturbations");
    m.def("exponent_set", &exponent_set, py::arg("n"));
    m.def("base_integral", &base_integral, py::arg("k"), py::arg("j"));
    m.def("descartes_variations",
          [](const std::vector<double>& coeffs) { return descartes_variations(coeffs); },
          py::arg("coeffs"));
    m.def("lanczos_gamma", &lanczos_gamma, py::arg("z"));

    // --- weight vectors
    m.def(
        "minimal_weight_vector",
        [](const std::vector<std::tuple<int, int, double>>& p_terms,
           const std::vector<std::tuple<int, int, double>>& q_terms)
            -> std::optional<std::tuple<int, int, int>> {
            BiPoly p, q;
            for (const auto& [i, j, c] : p_terms) p.add_term(i, j, c);
            for (const auto& [i, j, c] : q_terms) q.add_term(i, j, c);
            const auto w = minimal_weight_vector(p, q);
            if (!w) return std::nullopt;
            return std::make_tuple(w->s1, w->s2, w->d);
        },
        py::arg("p_terms"), py::arg("q_terms"));

    // --- center and period
    m.def("center_report_json", [](const std::string& variant, const std::vector<double>& params) {
        const CanonicalForm form = form_from_params(variant, params);
        return center_report_to_json(center_report(form)).dump();
    });
    m.def("period_beta0",
          [](double a1, double b1, double a1t) { return period_beta0(FormI{a1, b1, a1t}); });
    m.def("period_closed_form", [](double a1, double b1, double a1t, double r0) {
        return period_closed_form(FormI{a1, b1, a1t}, r0).T;
    });
    m.def("period_numeric", [](double a1, double b1, double a1t, double r0) {
        return period_numeric(FormI{a1, b1, a1t}, r0);
    });
    m.def("numeric_return_map", [](double a1, double b1, double a1t, double r, double tol) {
        return numeric_return_map(FormI{a1, b1, a1t}, r, tol);
    }, py::arg("a1"), py::arg("b1"), py::arg("a1_tilde"), py::arg("r"), py::arg("tol") = 1e-10);

    // --- systems: analysis, switching, simulation
    m.def("analyze_json", [](const std::string& system_json) {
        return analyze_system(field_from_json(json::parse(system_json))).dump();
    });
    m.def("switching_analysis_json", [](const std::string& system_json) {
        return switching_analysis_to_json(switching_analysis(field_from_json(json::parse(system_json))))
            .dump();
    });
    m.def("sigma_at", [](const std::string& system_json, double x) {
        return sigma_at(field_from_json(json::parse(system_json)), x);
    });
    m.def("integrate_json",
          [](const std::string& system_json, double x0, double y0, double tmax, double tol) {
              const auto tr = integrate(field_from_json(json::parse(system_json)), {x0, y0}, tmax, tol);
              return trajectory_json(tr).dump();
          },
          py::arg("system_json"), py::arg("x0"), py::arg("y0"), py::arg("tmax"),
          py::arg("tol") = 1e-10);

    // --- Melnikov machinery
    m.def("melnikov_json", [](double a1, double b1, double a1t, const std::string& pert_json) {
        const auto pert = perturbation_from_json(json::parse(pert_json));
        return melnikov_poly_to_json(melnikov_poly(FormI{a1, b1, a1t}, pert)).dump();
    });
    m.def("realize_roots_json",
          [](double a1, double b1, double a1t, int n, const std::vector<double>& roots) {
              return perturbation_to_json(realize_roots(FormI{a1, b1, a1t}, n, roots)).dump();
          });
    m.def("displacement",
          [](double a1, double b1, double a1t, const std::string& pert_json, double h, double eps) {
              const auto pert = perturbation_from_json(json::parse(pert_json));
              return displacement(FormI{a1, b1, a1t}, pert, h, eps).d;
          });
    m.def("find_limit_cycles",
          [](double a1, double b1, double a1t, const std::string& pert_json, double eps, double h_lo,
             double h_hi, int grid) {
              const auto pert = perturbation_from_json(json::parse(pert_json));
              const auto scan = find_limit_cycles(FormI{a1, b1, a1t}, pert, eps, {h_lo, h_hi}, grid);
              return py::make_tuple(scan.zeros, scan.warnings);
          });

    // --- portraits
    m.def("classify_json", [](const std::string& variant, const std::vector<double>& params) {
        return portrait_case_to_json(classify_case(form_from_params(variant, params))).dump();
    });
    m.def("render_svg",
          [](const std::string& variant, const std::vector<double>& params, int grid, double radius) {
              RenderOptions opts;
              opts.grid = grid;
              opts.radius = radius;
              return render(form_from_params(variant, params), opts);
          },
          py::arg("variant"), py::arg("params"), py::arg("grid") = 12, py::arg("radius") = 4.0);
}

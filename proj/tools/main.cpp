// pwqh: analysis of planar piecewise smooth quadratic quasi-homogeneous
// systems. Subcommands: analyze, center, melnikov, realize, cycles, portrait,
// simulate, xi-max.
//
// Exit codes: 0 success, 1 domain error (error JSON on stderr), 2 usage or
// IO error (error JSON on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pwqh/json_io.hpp"

namespace {

using pwqh::json;

std::vector<double> parse_csv(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad number in list: " + item);
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << data;
}

void emit_json(const std::string& out_path, const json& j) {
    write_output(out_path, j.dump(2) + "\n");
}

pwqh::CanonicalForm form_from_flags(const std::string& variant, const std::string& params_csv) {
    if (params_csv.empty()) throw std::invalid_argument("--params is required");
    return pwqh::form_from_params(variant, parse_csv(params_csv));
}

pwqh::FormI form_i_from_flags(const std::string& params_csv) {
    return form_from_flags("I", params_csv).form_i();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise smooth quadratic quasi-homogeneous system toolbox"};
    app.require_subcommand(1);

    std::string out_path, params_csv, variant = "I", pert_path, system_path;
    std::string x0_csv = "1,0", roots_csv, h_range_csv = "0.2,60";
    int n = 0, grid = 40;
    double eps = 1e-3, tmax = 10.0, tol = 1e-10, radius = 4.0;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output path"); };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a system JSON file");
    analyze->add_option("system", system_path, "system JSON file")->required();
    add_out(analyze);

    CLI::App* center = app.add_subcommand("center", "center condition and period table");
    center->add_option("--params", params_csv, "a1,b1,a1_tilde")->required();
    add_out(center);

    CLI::App* melnikov = app.add_subcommand("melnikov", "first-order Melnikov function");
    melnikov->add_option("pert", pert_path, "perturbation JSON file")->required();
    melnikov->add_option("--params", params_csv, "a1,b1,a1_tilde")->required();
    add_out(melnikov);

    CLI::App* realize = app.add_subcommand("realize", "perturbation with prescribed cycles");
    realize->add_option("--n", n, "perturbation degree")->required();
    realize->add_option("--params", params_csv, "a1,b1,a1_tilde")->required();
    realize->add_option("--roots", roots_csv, "target levels h, comma separated");
    add_out(realize);

    CLI::App* cycles = app.add_subcommand("cycles", "limit cycles of the perturbed system");
    cycles->add_option("pert", pert_path, "perturbation JSON file")->required();
    cycles->add_option("--params", params_csv, "a1,b1,a1_tilde")->required();
    cycles->add_option("--eps", eps, "perturbation size");
    cycles->add_option("--h-range", h_range_csv, "scan range lo,hi");
    cycles->add_option("--grid", grid, "scan grid size");
    add_out(cycles);

    CLI::App* portrait = app.add_subcommand("portrait", "SVG phase portrait");
    portrait->add_option("--form", variant, "I, II or III")->required();
    portrait->add_option("--params", params_csv, "canonical parameters")->required();
    portrait->add_option("--grid", grid, "seed grid size")->default_val(12);
    portrait->add_option("--radius", radius, "clip disk radius");
    add_out(portrait);

    CLI::App* simulate = app.add_subcommand("simulate", "integrate one trajectory to CSV");
    simulate->add_option("system", system_path, "system JSON file (or use --form/--params)");
    simulate->add_option("--form", variant, "I, II or III");
    simulate->add_option("--params", params_csv, "canonical parameters");
    simulate->add_option("--x0", x0_csv, "start point x,y");
    simulate->add_option("--tmax", tmax, "integration time");
    simulate->add_option("--tol", tol, "integration tolerance");
    add_out(simulate);

    CLI::App* ximax = app.add_subcommand("xi-max", "maximal cycle count for degree n");
    ximax->add_option("--n", n, "perturbation degree")->required();
    add_out(ximax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err = {{"error", {{"kind", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (*analyze) {
            emit_json(out_path, pwqh::analyze_system(pwqh::field_from_json(read_json_file(system_path))));
        } else if (*center) {
            const pwqh::CanonicalForm form = form_from_flags("I", params_csv);
            json j;
            j["form"] = pwqh::form_to_json(form);
            j["report"] = pwqh::center_report_to_json(pwqh::center_report(form));
            if (pwqh::center_report(form).is_center) {
                const pwqh::FormI f = form.form_i();
                j["beta0"] = pwqh::period_beta0(f);
                json table = json::array();
                for (double r0 : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                    const double tc = pwqh::period_closed_form(f, r0).T;
                    const double tq = pwqh::period_numeric(f, r0);
                    table.push_back({{"r0", r0},
                                     {"T_closed", tc},
                                     {"T_quad", tq},
                                     {"rel_err", std::abs(tc - tq) / tc}});
                }
                j["periods"] = table;
            }
            emit_json(out_path, j);
        } else if (*melnikov) {
            const pwqh::FormI f = form_i_from_flags(params_csv);
            const pwqh::PerturbationSpec pert =
                pwqh::perturbation_from_json(read_json_file(pert_path));
            emit_json(out_path, pwqh::melnikov_poly_to_json(pwqh::melnikov_poly(f, pert)));
        } else if (*realize) {
            const pwqh::FormI f = form_i_from_flags(params_csv);
            const auto pert = pwqh::realize_roots(f, n, parse_csv(roots_csv));
            emit_json(out_path, pwqh::perturbation_to_json(pert));
        } else if (*cycles) {
            const pwqh::FormI f = form_i_from_flags(params_csv);
            const pwqh::PerturbationSpec pert =
                pwqh::perturbation_from_json(read_json_file(pert_path));
            const auto range = parse_csv(h_range_csv);
            if (range.size() != 2) throw std::invalid_argument("--h-range needs lo,hi");
            const auto scan =
                pwqh::find_limit_cycles(f, pert, eps, {range[0], range[1]}, grid);
            json j;
            j["eps"] = eps;
            j["zeros"] = scan.zeros;
            j["warnings"] = scan.warnings;
            json mroots = json::array();
            const auto m = pwqh::melnikov_poly(f, pert);
            if (!m.terms.empty())
                for (const auto& r : pwqh::positive_roots(m)) mroots.push_back(r.h);
            j["melnikov_roots"] = mroots;
            emit_json(out_path, j);
        } else if (*portrait) {
            const pwqh::CanonicalForm form = form_from_flags(variant, params_csv);
            pwqh::RenderOptions opts;
            opts.grid = grid;
            opts.radius = radius;
            write_output(out_path, pwqh::render(form, opts));
        } else if (*simulate) {
            pwqh::PiecewiseField field = [&] {
                if (!system_path.empty())
                    return pwqh::field_from_json(read_json_file(system_path));
                return pwqh::canonical_field(form_from_flags(variant, params_csv));
            }();
            const auto x0 = parse_csv(x0_csv);
            if (x0.size() != 2) throw std::invalid_argument("--x0 needs x,y");
            const auto traj = pwqh::integrate(field, {x0[0], x0[1]}, tmax, tol);
            write_output(out_path, pwqh::trajectory_to_csv(traj));
        } else if (*ximax) {
            json j;
            j["n"] = n;
            j["xi_max"] = pwqh::xi_max(n);
            emit_json(out_path, j);
        }
    } catch (const pwqh::Error& e) {
        json err = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err = {{"error", {{"kind", "io"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}

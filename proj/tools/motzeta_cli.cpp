// Command-line front end: model ingestion, subcommand dispatch, reports.
//
// Exit codes: 0 success, 1 validation failure, 2 parse error.

#include "motzeta/abelian.hpp"
#include "motzeta/class_parser.hpp"
#include "motzeta/json_io.hpp"
#include "motzeta/monodromy.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/zeta_expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifndef MOTZETA_CORPUS_DIR
#define MOTZETA_CORPUS_DIR ""
#endif

namespace {

using nlohmann::json;
using namespace motzeta;

struct RunConfig {
    std::vector<std::string> inputs;
    std::string format = "text";
    int depth = 10;
    std::string pole_q;
    long n = -1;
    std::string piece;
    bool batch = false;
};

std::string resolve_input(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* env = std::getenv("MOTZETA_CORPUS_DIR")) {
        fs::path p = fs::path(env) / path;
        if (fs::exists(p)) return p.string();
    }
    fs::path builtin = fs::path(MOTZETA_CORPUS_DIR) / path;
    if (!std::string(MOTZETA_CORPUS_DIR).empty() && fs::exists(builtin)) return builtin.string();
    throw IoError("cannot open '" + path + "'");
}

json run_zeta(const SncModelData& m, const RunConfig&) {
    json out;
    out["model"] = m.name;
    out["normal_form"] = normal_form_json(zeta_from_model(m).normal_form());
    return out;
}

json run_series(const SncModelData& m, const RunConfig& cfg) {
    json out;
    out["model"] = m.name;
    out["depth"] = cfg.depth;
    json coeffs = json::array();
    for (const auto& c : zeta_from_model(m).series_expand(cfg.depth))
        coeffs.push_back(c.to_string());
    out["coefficients"] = coeffs;
    return out;
}

json run_poles(const SncModelData& m, const RunConfig& cfg) {
    json out;
    out["model"] = m.name;
    ZetaExpr z = zeta_from_model(m);
    if (!cfg.pole_q.empty()) {
        const Rat q = parse_rat(cfg.pole_q);
        auto [lower, upper] = z.certify_pole_order(q);
        out["poles"] = pole_report_json({PoleEntry{q, upper, lower}});
    } else {
        out["poles"] = pole_report_json(pole_report(z));
    }
    return out;
}

json run_skeleton(const SncModelData& m, const RunConfig&) {
    json out;
    out["model"] = m.name;
    Skeleton sk = essential_skeleton(m);
    out["delta"] = sk.delta;
    out["min_weight"] = rat_str(sk.min_weight);
    out["largest_pole"] = rat_str(largest_pole(m));
    out["faces"] = sk.faces;
    json w = json::object();
    for (const auto& [id, wt] : sk.vertex_weights) w[id] = rat_str(wt);
    out["vertex_weights"] = w;
    return out;
}

json run_topology(const SncModelData& m, const RunConfig&) {
    json out;
    out["model"] = m.name;
    out["skeleton_betti"] = skeleton_homology(m);
    out["dual_complex_betti"] = dual_complex_homology(m);
    auto pm = pseudo_manifold_check(m);
    out["pseudo_manifold"] = {{"connected", pm.connected},
                              {"pure", pm.pure},
                              {"codim1_at_most_two", pm.codim1_at_most_two},
                              {"closed", pm.closed()},
                              {"boundary", pm.boundary}};
    return out;
}

json run_monodromy(const SncModelData& m, const RunConfig&) {
    json out;
    out["model"] = m.name;
    CycloProduct z = acampo_zeta(m);
    out["acampo"] = z.to_string();
    json exps = json::object();
    for (const auto& [d, e] : z.exps) exps[std::to_string(d)] = to_long(e);
    out["exponents"] = exps;
    json cm = json::object();
    for (const auto& [mm, c] : cyclotomic_multiplicities(z)) cm[std::to_string(mm)] = to_long(c);
    out["cyclotomic"] = cm;
    json orders = json::array();
    for (long mm : certified_eigenvalues(z)) orders.push_back(mm);
    out["certified_orders"] = orders;
    return out;
}

json run_checkmp(const SncModelData& m, const RunConfig&) {
    json out = mp_report_json(check_monodromy_property(m));
    out["model"] = m.name;
    return out;
}

json run_blowup(const SncModelData& m, const RunConfig& cfg) {
    if (cfg.piece.empty()) throw std::invalid_argument("blowup requires --piece");
    return model_to_json(blowup_stratum(m, cfg.piece));
}

json run_validate(const SncModelData& m, const RunConfig&) {
    json out;
    out["model"] = m.name;
    auto diag = validate(m);
    out["diagnostics"] = diag;
    out["valid"] = diag.empty();
    return out;
}

json run_abelian_input(const std::string& path, const RunConfig& cfg, bool& valid) {
    AbelianInput in = load_abelian_file(path);
    json out;
    if (!in.is_table) {
        out["mode"] = "semiabelian";
        ZetaExpr z = zeta_semiabelian(in.semiabelian);
        out["zeta"] = normal_form_json(z.normal_form());
        out["poles"] = pole_report_json(pole_report(z));
        AbelianVerdict v = check_abelian_theorem(z, Rat(0), in.semiabelian.t);
        out["theorem"] = {{"c", "0"},
                          {"t_pot", in.semiabelian.t},
                          {"pass", v.pass},
                          {"detail", v.detail}};
        valid = true;
        return out;
    }
    out["mode"] = "table";
    auto diag = validate_oracle_table(in.table);
    out["diagnostics"] = diag;
    out["valid"] = diag.empty();
    valid = diag.empty();
    long maxd = 0;
    for (const auto& [d, row] : in.table.rows) maxd = std::max(maxd, d);
    const int depth = std::min<long>(cfg.depth, maxd);
    ScaledExpansion exp = zeta_truncated(in.table, depth);
    json coeffs = json::array();
    const std::string var = exp.e == 1 ? "u" : "w";
    for (const auto& c : exp.coeffs) coeffs.push_back(c.to_string(var));
    out["expansion"] = {{"variable", exp.e == 1 ? "u" : "w = u^(1/" + std::to_string(exp.e) + ")"},
                        {"depth", depth},
                        {"coefficients", coeffs}};
    return out;
}

void print_text(const std::string& cmd, const json& rep, std::ostream& os) {
    if (rep.contains("model")) os << "model: " << rep["model"].get<std::string>() << "\n";
    if (cmd == "zeta") {
        os << "zeta = " << rep["normal_form"]["display"].get<std::string>() << "\n";
    } else if (cmd == "series") {
        const auto& cs = rep["coefficients"];
        for (std::size_t d = 0; d < cs.size(); ++d)
            os << "T^" << (d + 1) << ": " << cs[d].get<std::string>() << "\n";
    } else if (cmd == "poles") {
        for (const auto& p : rep["poles"])
            os << "q = " << p["q"].get<std::string>() << "  order: lower " << p["lower"]
               << ", upper " << p["upper"]
               << (p["certified"].get<bool>() ? "  [certified]" : "  [gap]") << "\n";
    } else if (cmd == "skeleton") {
        os << "delta = " << rep["delta"] << ", min(omega) = "
           << rep["min_weight"].get<std::string>() << ", largest pole = "
           << rep["largest_pole"].get<std::string>() << "\n";
        os << "faces:";
        for (const auto& f : rep["faces"]) os << " " << f.get<std::string>();
        os << "\nvertex weights:";
        for (const auto& [k, v] : rep["vertex_weights"].items())
            os << " " << k << "=" << v.get<std::string>();
        os << "\n";
    } else if (cmd == "topology") {
        os << "skeleton betti:";
        for (const auto& b : rep["skeleton_betti"]) os << " " << b;
        os << "\ndual complex betti:";
        for (const auto& b : rep["dual_complex_betti"]) os << " " << b;
        const auto& pm = rep["pseudo_manifold"];
        os << "\npseudo-manifold: connected=" << pm["connected"] << " pure=" << pm["pure"]
           << " codim1<=2=" << pm["codim1_at_most_two"] << " closed=" << pm["closed"] << "\n";
        os << "boundary:";
        for (const auto& b : pm["boundary"]) os << " " << b.get<std::string>();
        os << "\n";
    } else if (cmd == "monodromy") {
        os << "acampo zeta = " << rep["acampo"].get<std::string>() << "\n";
        os << "cyclotomic multiplicities:";
        for (const auto& [k, v] : rep["cyclotomic"].items()) os << " c_" << k << "=" << v;
        os << "\ncertified eigenvalue orders:";
        for (const auto& o : rep["certified_orders"]) os << " " << o;
        os << "\n";
    } else if (cmd == "check-mp") {
        for (const auto& p : rep["poles"])
            os << "pole q = " << p["q"].get<std::string>() << "  m = " << p["m"]
               << "  c_m = " << p["c_m"] << "  " << p["status"].get<std::string>() << "\n";
        os << "verdict: " << rep["verdict"].get<std::string>() << "\n";
        const auto& pr = rep["predictions"];
        os << "predictions: eigenvalue " << pr["eigenvalue"].get<std::string>()
           << ", jordan block >= " << pr["jordan_block_at_least"] << "\n";
    } else if (cmd == "validate") {
        if (rep["valid"].get<bool>()) {
            os << "valid\n";
        } else {
            for (const auto& d : rep["diagnostics"]) os << "diagnostic: " << d.get<std::string>() << "\n";
        }
    } else if (cmd == "abelian") {
        if (rep["mode"] == "semiabelian") {
            os << "zeta = " << rep["zeta"]["display"].get<std::string>() << "\n";
            for (const auto& p : rep["poles"])
                os << "q = " << p["q"].get<std::string>() << "  order: lower " << p["lower"]
                   << ", upper " << p["upper"] << "\n";
            os << "unique-pole theorem: " << (rep["theorem"]["pass"].get<bool>() ? "pass" : "fail")
               << " (" << rep["theorem"]["detail"].get<std::string>() << ")\n";
        } else {
            os << (rep["valid"].get<bool>() ? "table valid\n" : "table INVALID\n");
            for (const auto& d : rep["diagnostics"]) os << "diagnostic: " << d.get<std::string>() << "\n";
            const auto& ex = rep["expansion"];
            os << "expansion in " << ex["variable"].get<std::string>() << ":\n";
            const auto& cs = ex["coefficients"];
            for (std::size_t d = 0; d < cs.size(); ++d)
                os << "T^" << (d + 1) << ": " << cs[d].get<std::string>() << "\n";
        }
    } else {
        os << rep.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"motzeta: exact motivic zeta functions of snc-degenerations"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::vector<std::string> commands = {"zeta",     "series",   "poles",
                                               "skeleton", "topology", "monodromy",
                                               "check-mp", "blowup",   "abelian", "validate"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("inputs", cfg.inputs, "input JSON files")->required();
        sub->add_option("--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--depth", cfg.depth, "series depth D")->check(CLI::PositiveNumber);
        sub->add_option("--q", cfg.pole_q, "pole target (reduced rational)");
        sub->add_option("--n", cfg.n, "parameter for generator models (kodaira_In)");
        sub->add_option("--piece", cfg.piece, "piece id for blowup");
        sub->add_flag("--batch", cfg.batch, "emit an array of reports");
        subs[name] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string cmd;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) cmd = name;

    int exit_code = 0;
    json reports = json::array();
    try {
        for (const auto& input : cfg.inputs) {
            const std::string path = resolve_input(input);
            json rep;
            if (cmd == "abelian") {
                bool ok = true;
                rep = run_abelian_input(path, cfg, ok);
                if (!ok) exit_code = std::max(exit_code, 1);
            } else {
                SncModelData m = load_model_file(path, cfg.n);
                if (cmd == "validate") {
                    rep = run_validate(m, cfg);
                    if (!rep["valid"].get<bool>()) exit_code = std::max(exit_code, 1);
                } else if (cmd == "zeta") {
                    rep = run_zeta(m, cfg);
                } else if (cmd == "series") {
                    rep = run_series(m, cfg);
                } else if (cmd == "poles") {
                    rep = run_poles(m, cfg);
                } else if (cmd == "skeleton") {
                    rep = run_skeleton(m, cfg);
                } else if (cmd == "topology") {
                    rep = run_topology(m, cfg);
                } else if (cmd == "monodromy") {
                    rep = run_monodromy(m, cfg);
                } else if (cmd == "check-mp") {
                    rep = run_checkmp(m, cfg);
                } else if (cmd == "blowup") {
                    rep = run_blowup(m, cfg);
                }
            }
            reports.push_back(std::move(rep));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const bool as_array = cfg.batch || cfg.inputs.size() > 1;
    if (cfg.format == "json") {
        if (as_array)
            std::cout << reports.dump(2) << "\n";
        else
            std::cout << reports[0].dump(2) << "\n";
    } else {
        bool first = true;
        for (const auto& rep : reports) {
            if (!first) std::cout << "\n";
            first = false;
            if (cmd == "blowup")
                std::cout << rep.dump(2) << "\n";
            else
                print_text(cmd, rep, std::cout);
        }
    }
    return exit_code;
}

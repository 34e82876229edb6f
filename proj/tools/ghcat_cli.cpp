#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghcat/catalog.hpp"
#include "ghcat/cuntz.hpp"
#include "ghcat/io.hpp"
#include "ghcat/orbifold.hpp"
#include "ghcat/orbit.hpp"
#include "ghcat/solver.hpp"

namespace {

using namespace ghcat;

std::vector<int> parse_factors(const std::string& spec) {
    std::vector<int> factors;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        factors.push_back(std::stoi(item));
    }
    if (factors.empty()) throw error::invalid_group("empty group spec");
    return factors;
}

int max_order_from_env(int fallback) {
    if (const char* env = std::getenv("GHC_MAX_GROUP_ORDER")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

int cmd_verify(const std::string& path, double tol, bool formal) {
    const SolutionTriple s = read_solution_file(path);
    const auto report = evaluate_residuals(s, tol);
    const auto q = check_qsystem(s, tol);
    std::cout << report_to_json(report, q) << "\n";
    bool ok = report.pass();
    if (formal) {
        const auto inter = verify_rho_intertwiners(s);
        std::cout << "{\n  \"formal_s_defect\": " << inter.s_defect
                  << ",\n  \"formal_t_defect\": " << inter.t_defect;
        ok = ok && inter.s_defect < 1e-9 && inter.t_defect < 1e-9;
        if (q.q1) {
            const auto w = verify_qsystem_isometry(s);
            std::cout << ",\n  \"qsystem_unit\": " << (w.unit ? "true" : "false")
                      << ",\n  \"qsystem_intertwines\": " << (w.intertwines ? "true" : "false");
            ok = ok && w.unit && w.intertwines;
        }
        std::cout << "\n}\n";
    }
    return ok ? 0 : 1;
}

void write_class_files(const std::vector<SolutionTriple>& sols, const std::string& dir,
                       const std::string& stem) {
    std::filesystem::create_directories(dir);
    int idx = 0;
    for (const auto& s : sols) {
        const std::string path = dir + "/" + stem + "-" + std::to_string(idx++) + ".json";
        write_solution_file(s, path, stem + "-" + std::to_string(idx - 1), "solver");
        std::cerr << "wrote " << path << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Haagerup category toolkit"};
    app.require_subcommand(1);

    std::string file, group_spec, out_path, aut_spec;
    double tol = 1e-9;
    bool formal = false;
    SolveOptions opts;
    int z_index = 0;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_spec, "invariant factors, e.g. 2,2")->required();
        cmd->add_option("--restarts", opts.restarts, "restarts per batch");
        cmd->add_option("--seed", opts.seed, "random seed");
        cmd->add_option("--tol", opts.tol_accept, "acceptance tolerance");
        cmd->add_flag("--require-qsystem", opts.require_qsystem,
                      "keep only solutions with a Q-system");
        cmd->add_option("--out", out_path, "directory for per-class solution files");
    };

    auto* verify = app.add_subcommand("verify", "check a solution file against all equations");
    verify->add_option("file", file)->required();
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_flag("--formal", formal, "also run the formal intertwiner checks");

    auto* solve = app.add_subcommand("solve", "find all gauge classes of solutions");
    add_solver_flags(solve);
    auto* classify_cmd = app.add_subcommand("classify", "find all symmetry orbits of solutions");
    add_solver_flags(classify_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "symmetry orbit and stabilizer of a solution");
    orbit_cmd->add_option("file", file)->required();
    orbit_cmd->add_option("--tol", tol);

    auto* outgroup = app.add_subcommand("out-group", "outer-symmetry group of a solution");
    outgroup->add_option("file", file)->required();
    outgroup->add_option("--tol", tol);

    auto* accompany = app.add_subcommand("accompany", "crossed-product accompanying solution");
    accompany->add_option("file", file)->required();
    accompany->add_option("--out", out_path, "output solution file");

    auto* deq = app.add_subcommand("deq", "quotient fusion data by an order-two invertible");
    deq->add_option("file", file)->required();
    deq->add_option("--z", z_index, "index of the order-two element")->required();

    auto* eqv = app.add_subcommand("eqv", "equivariantization fusion data along an automorphism");
    eqv->add_option("file", file)->required();
    eqv->add_option("--aut", aut_spec, "generator images, e.g. 3,2")->required();

    auto* dual = app.add_subcommand("dual-graph", "dual principal graph census");
    dual->add_option("--group", group_spec)->required();

    auto* catalog = app.add_subcommand("catalog", "named solutions");
    auto* cat_list = catalog->add_subcommand("list", "list entry names");
    auto* cat_show = catalog->add_subcommand("show", "closed forms and JSON of an entry");
    std::string cat_name, cat_file;
    cat_show->add_option("name", cat_name)->required();
    auto* cat_export = catalog->add_subcommand("export", "write an entry to a solution file");
    cat_export->add_option("name", cat_name)->required();
    cat_export->add_option("file", cat_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << (e.get_exit_code() == 0 ? "" : app.help());
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        opts.max_group_order = max_order_from_env(opts.max_group_order);

        if (verify->parsed()) return cmd_verify(file, tol, formal);

        if (solve->parsed()) {
            const Group g(parse_factors(group_spec));
            const auto sols = solve_all(g, opts);
            if (!out_path.empty()) write_class_files(sols, out_path, group_to_string(g));
            std::cout << "{\n  \"gauge_classes\": " << sols.size() << "\n}\n";
            return 0;
        }
        if (classify_cmd->parsed()) {
            const Group g(parse_factors(group_spec));
            const auto records = classify(g, opts);
            if (!out_path.empty()) {
                std::vector<SolutionTriple> reps;
                for (const auto& r : records) reps.push_back(r.representative);
                write_class_files(reps, out_path, group_to_string(g));
            }
            std::cout << classes_to_json(records) << "\n";
            return 0;
        }
        if (orbit_cmd->parsed() || outgroup->parsed()) {
            const SolutionTriple s = read_solution_file(file);
            const GammaGroup gamma(s.group);
            const auto orbit = gamma_orbit(gamma, s, tol);
            const auto stab = describe_stabilizer(gamma, orbit.stabilizer);
            if (orbit_cmd->parsed()) {
                std::cout << orbit_to_json(orbit, stab) << "\n";
            } else {
                std::cout << "{\n  \"stabilizer_order\": " << stab.order << ",\n  \"name\": \""
                          << stab.name << "\",\n  \"amplitudes_nonzero\": "
                          << (orbit.amplitudes_nonzero ? "true" : "false") << "\n}\n";
            }
            return 0;
        }
        if (accompany->parsed()) {
            const SolutionTriple s = read_solution_file(file);
            const SolutionTriple acc =
                s.n() % 2 == 1 ? accompany_odd(s) : accompany_even(s);
            if (!out_path.empty()) {
                write_solution_file(acc, out_path, "accompanying", "accompany " + file);
                std::cerr << "wrote " << out_path << "\n";
            } else {
                std::cout << solution_to_json(acc, "accompanying", "accompany " + file) << "\n";
            }
            return 0;
        }
        if (deq->parsed()) {
            const SolutionTriple s = read_solution_file(file);
            std::cout << fusion_to_json(deequivariantize(s, z_index)) << "\n";
            return 0;
        }
        if (eqv->parsed()) {
            const SolutionTriple s = read_solution_file(file);
            const auto theta = map_from_gen_images(s.group, parse_factors(aut_spec));
            std::cout << fusion_to_json(equivariantize(s, theta)) << "\n";
            return 0;
        }
        if (dual->parsed()) {
            const Group g(parse_factors(group_spec));
            std::cout << dual_graph_to_json(dual_graph_data(g)) << "\n";
            return 0;
        }
        if (catalog->parsed()) {
            if (cat_list->parsed()) {
                for (const auto& name : catalog_list()) std::cout << name << "\n";
                return 0;
            }
            if (cat_show->parsed()) {
                const auto entry = catalog_get(cat_name);
                std::cout << "name: " << entry.name << "\n";
                std::cout << "closed forms: " << entry.description << "\n";
                for (const auto& note : entry.notes) std::cout << "note: " << note << "\n";
                std::cout << solution_to_json(entry.triple, entry.name, "catalog") << "\n";
                return 0;
            }
            if (cat_export->parsed()) {
                const auto entry = catalog_get(cat_name);
                write_solution_file(entry.triple, cat_file, entry.name, "catalog");
                std::cerr << "wrote " << cat_file << "\n";
                return 0;
            }
            std::cerr << "catalog needs one of: list, show, export\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

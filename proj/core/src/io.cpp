#include "ghcat/io.hpp"

#include <fstream>

#include <json.hpp>

namespace ghcat {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

std::string solution_to_json(const SolutionTriple& s, const std::string& name,
                             const std::string& source) {
    const int n = s.n();
    json j;
    j["group"] = {{"invariant_factors", s.group.factors()}};
    json eps = json::array();
    for (int h = 0; h < n; ++h) {
        json row = json::array();
        for (int g = 0; g < n; ++g) row.push_back(s.eps_at(h, g));
        eps.push_back(std::move(row));
    }
    j["epsilon"] = std::move(eps);
    json eta = json::array();
    for (int g = 0; g < n; ++g) eta.push_back(static_cast<int>(s.eta[g]));
    j["eta"] = std::move(eta);
    json A = json::array();
    for (int g = 0; g < n; ++g) {
        json plane = json::array();
        for (int h = 0; h < n; ++h) {
            json row = json::array();
            for (int k = 0; k < n; ++k) row.push_back(complex_to_json(s.a_at(g, h, k)));
            plane.push_back(std::move(row));
        }
        A.push_back(std::move(plane));
    }
    j["A"] = std::move(A);
    j["meta"] = {{"name", name}, {"source", source}};
    return j.dump(2);
}

SolutionTriple solution_from_json(const std::string& text) {
    const json j = json::parse(text);
    const auto factors = j.at("group").at("invariant_factors").get<std::vector<int>>();
    SolutionTriple s{Group(factors)};
    const int n = s.n();
    const auto& eps = j.at("epsilon");
    const auto& eta = j.at("eta");
    const auto& A = j.at("A");
    if (static_cast<int>(eps.size()) != n || static_cast<int>(eta.size()) != n ||
        static_cast<int>(A.size()) != n)
        throw error::shape("solution tables do not match the group order");
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            const int v = eps.at(h).at(g).get<int>();
            if (v != 1 && v != -1) throw error::shape("eps entries must be +/-1");
            s.set_eps(h, g, v);
        }
    for (int g = 0; g < n; ++g) {
        const int e = eta.at(g).get<int>();
        if (e < 0 || e > 2) throw error::shape("eta exponents must lie in {0,1,2}");
        s.eta[g] = static_cast<std::uint8_t>(e);
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                s.set_a(g, h, k, complex_from_json(A.at(g).at(h).at(k)));
    s.validate_shape();
    return s;
}

void write_solution_file(const SolutionTriple& s, const std::string& path,
                         const std::string& name, const std::string& source) {
    std::ofstream out(path);
    if (!out) throw error::lookup("cannot open for writing: " + path);
    out << solution_to_json(s, name, source) << "\n";
}

SolutionTriple read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error::lookup("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return solution_from_json(text);
}

std::string report_to_json(const ResidualReport& r, const QSystemFlags& q) {
    json j;
    j["families"] = r.family;
    j["overall"] = r.overall;
    j["tol"] = r.tol;
    j["pass"] = r.pass();
    j["q1"] = q.q1;
    j["q2"] = q.q2;
    j["q1_deviation"] = q.q1_deviation;
    j["q2_deviation"] = q.q2_deviation;
    return j.dump(2);
}

std::string orbit_to_json(const OrbitResult& orbit, const StabilizerSummary& stab) {
    json j;
    json reps = json::array();
    for (const auto& s : orbit.orbit) reps.push_back(json::parse(solution_to_json(s)));
    j["orbit"] = std::move(reps);
    j["orbit_size"] = orbit.orbit.size();
    json gens = json::array();
    for (const auto& e : orbit.stabilizer)
        gens.push_back(json{{"h2_class", e.h2_class},
                            {"translation", e.translation},
                            {"automorphism", e.aut}});
    j["stabilizer"] = std::move(gens);
    j["stabilizer_order"] = orbit.stabilizer_order;
    j["amplitudes_nonzero"] = orbit.amplitudes_nonzero;
    j["stabilizer_name"] = stab.name;
    json orders = json::object();
    for (const auto& [o, c] : stab.element_orders) orders[std::to_string(o)] = c;
    j["stabilizer_element_orders"] = std::move(orders);
    return j.dump(2);
}

std::string fusion_to_json(const FusionSummary& f) {
    json j;
    json objs = json::array();
    for (const auto& o : f.objects)
        objs.push_back(json{{"label", o.label}, {"dimension", o.dimension}});
    j["objects"] = std::move(objs);
    j["rho_squared"] = f.rho_squared;
    j["generator_dimension"] = f.generator_dimension;
    j["dimension_balance_defect"] = f.dimension_balance();
    j["q_system_preserved"] = f.q_system_preserved;
    if (!f.obstruction_sign_pattern.empty())
        j["obstruction_sign_pattern"] = f.obstruction_sign_pattern;
    if (!f.sigma_fusion.empty()) {
        json sf = json::object();
        for (const auto& [pair, decomp] : f.sigma_fusion)
            sf[pair.first + " x " + pair.second] = decomp;
        j["sigma_fusion"] = std::move(sf);
    }
    return j.dump(2);
}

std::string dual_graph_to_json(const DualGraphData& d) {
    json j;
    j["group_order"] = d.group_order;
    j["beta_count"] = d.beta_count;
    j["rho_beta_count"] = d.rho_beta_count;
    j["pi_transversal"] = d.j0;
    j["pi_count"] = d.j0.size();
    j["sigma_count"] = d.sigma_count;
    j["d"] = d.d;
    j["dim_iota"] = d.dim_iota;
    j["dim_kappa"] = d.dim_kappa;
    j["dim_sigma"] = d.dim_sigma;
    j["bookkeeping_defect"] = d.bookkeeping_defect();
    return j.dump(2);
}

std::string classes_to_json(const std::vector<ClassRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) {
        json j;
        j["solution"] = json::parse(solution_to_json(rec.representative));
        j["orbit_gauge_classes"] = rec.orbit_gauge_classes;
        j["stabilizer_order"] = rec.stabilizer_order;
        j["q1"] = rec.qsystem.q1;
        j["q2"] = rec.qsystem.q2;
        j["amplitudes_nonzero"] = rec.amplitudes_nonzero;
        arr.push_back(std::move(j));
    }
    json out;
    out["classes"] = std::move(arr);
    out["count"] = records.size();
    return out.dump(2);
}

}  // namespace ghcat

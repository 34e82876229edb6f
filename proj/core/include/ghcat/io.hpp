#pragma once

#include <string>

#include "ghcat/orbifold.hpp"
#include "ghcat/orbit.hpp"
#include "ghcat/solution.hpp"
#include "ghcat/solver.hpp"

namespace ghcat {

/// JSON wire format: {"group":{"invariant_factors":[...]},
/// "epsilon":[[...]] indexed [h][g], "eta":[e_g,...],
/// "A":[[[{"re":..,"im":..},..],..],..] indexed [g][h][k],
/// "meta":{"name":..,"source":..}}.  Numbers round-trip at full precision.
std::string solution_to_json(const SolutionTriple& s, const std::string& name = "",
                             const std::string& source = "");
SolutionTriple solution_from_json(const std::string& text);

void write_solution_file(const SolutionTriple& s, const std::string& path,
                         const std::string& name = "", const std::string& source = "");
SolutionTriple read_solution_file(const std::string& path);

std::string report_to_json(const ResidualReport& r, const QSystemFlags& q);
std::string orbit_to_json(const OrbitResult& orbit, const StabilizerSummary& stab);
std::string fusion_to_json(const FusionSummary& f);
std::string dual_graph_to_json(const DualGraphData& d);
std::string classes_to_json(const std::vector<ClassRecord>& records);

}  // namespace ghcat

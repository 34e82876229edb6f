#pragma once

#include <string>
#include <vector>

#include "ghcat/solution.hpp"

namespace ghcat {

/// A named explicit solution with its documented closed forms.
struct CatalogEntry {
    std::string name;
    std::string description;           // closed forms as text
    std::vector<std::string> notes;    // caveats, e.g. corrected constants
    bool expected_q1 = false;
    bool expected_q2 = false;
    SolutionTriple triple;
};

std::vector<std::string> catalog_list();
CatalogEntry catalog_get(const std::string& name);

/// The Z2xZ2 family: sign s in {+1,-1} and z = i^quarter * sqrt(d).
SolutionTriple make_z2x2(int s, int z_quarter);

}  // namespace ghcat

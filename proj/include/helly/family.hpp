#pragma once

#include "helly/lift.hpp"

#include <string>
#include <vector>

namespace helly {

struct NamedSet {
    std::string name;
    Polyhedron shape;
};

// A finite family of convex sets in R^dim, optionally partitioned into color
// classes (colors[i] = class of set i; empty vector = uncolored).
struct FamilyInstance {
    size_t dim = 0;
    std::vector<NamedSet> sets;
    std::vector<size_t> colors;

    std::vector<Polyhedron> shapes() const {
        std::vector<Polyhedron> out;
        out.reserve(sets.size());
        for (const auto& s : sets) out.push_back(s.shape);
        return out;
    }
};

}  // namespace helly

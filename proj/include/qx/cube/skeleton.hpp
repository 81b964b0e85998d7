#pragma once

#include <vector>

#include "qx/cube/corner.hpp"
#include "qx/cube/finab.hpp"

namespace qx::cube {

/// One entry per isomorphism class of n-cubes: corner forms for FdVect,
/// representative diagrams for FinAb.
struct SkeletonList {
    std::vector<CornerForm> corner_forms;
    std::vector<CubeDiagram> representatives;

    std::size_t size() const { return corner_forms.empty() ? representatives.size() : corner_forms.size(); }
};

/// Reduced drops the zero cube's class. Throws UniverseTooLarge past the caps.
SkeletonList enumerate_skeleton(const Category& cat, int n, bool reduced);

/// face_relations(nmax) as equalities of diagrams, checked on every class
/// representative (zero class included) of each source dimension. FinAb is
/// capped at nmax <= 2.
RelationReport verify_diagram_relations(const Category& cat, int nmax);

/// A random FdVect cube: a split cube moved along random automorphisms.
CubeDiagram random_cube(const Category& cat, int n, std::mt19937_64& rng);
/// A random class representative moved along random automorphisms.
CubeDiagram random_cube(const FinAbSkeleton& skeleton, std::mt19937_64& rng);

}  // namespace qx::cube

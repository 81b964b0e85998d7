#pragma once

#include <compare>
#include <random>
#include <vector>

#include <json.hpp>

#include "qx/cube/diagram.hpp"

namespace qx::cube {

/// Multiplicities on the corners {01,12}^n of a split cube of vector spaces.
/// Corner codes are binary with slot 1 most significant, 0 for 01, 1 for 12.
struct CornerForm {
    int n = 0;
    std::vector<int> m;

    static CornerForm zero(int n);
    int mass() const;
    bool is_zero() const;
    auto operator<=>(const CornerForm&) const = default;
};

MultiIndex corner_index(std::size_t code, int n);
/// The corner pair c (01 or 12) contributes to coordinate p.
bool compatible(IndexPair c, IndexPair p);

/// The split cube with F(x) the sum of F_q^m(c) over corners c compatible
/// with x, arrows being coordinate inclusions and projections.
/// Throws NotSplitInstance outside FdVect.
CubeDiagram split_cube(const Category& cat, const CornerForm& m);

/// m(c) = dim F(c); every dimension identity dim F(x) = sum of compatible
/// m(c) is checked. Throws NotSplitInstance for FinAb and InvalidInput if the
/// dimensions are inconsistent.
CornerForm canonical_corner_form(const CubeDiagram& c);

/// Action of faces and degeneracies on isomorphism classes.
CornerForm corner_face(const CornerForm& m, FaceSpec spec);
CornerForm corner_degeneracy(const CornerForm& m, DegenSpec spec);

/// All corner forms with total mass <= max_mass, lexicographic in m; the zero
/// form is dropped when reduced. Throws UniverseTooLarge above `cap` forms.
std::vector<CornerForm> enumerate_corner_forms(int n, int max_mass, bool reduced, std::size_t cap = 1u << 20);

/// {"n": n, "m": {"01.12": 2, ...}} listing nonzero multiplicities.
nlohmann::json to_json(const CornerForm& m);
CornerForm corner_form_from_json(const nlohmann::json& j);

/// A random morphism split_cube(src) -> split_cube(dst): a block for every
/// pair of corners c -> c' with c' <= c coordinatewise.
CubeMorphism random_split_morphism(const Category& cat, const CornerForm& src, const CornerForm& dst,
                                   std::mt19937_64& rng);
/// A random componentwise mono split_cube(src) -> split_cube(src + extra).
CubeMorphism random_split_mono(const Category& cat, const CornerForm& src, const CornerForm& extra,
                               std::mt19937_64& rng);
/// A random corner form of the given dimension with mass <= max_mass.
CornerForm random_corner_form(int n, int max_mass, std::mt19937_64& rng);

}  // namespace qx::cube

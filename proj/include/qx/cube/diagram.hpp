#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qx/cube/index.hpp"
#include "qx/exact/category.hpp"
#include "qx/exact/ses.hpp"

namespace qx::cube {

using exact::Category;
using exact::Mor;
using exact::Obj;

/// An n-cube of short exact sequences: an object at every nondegenerate
/// index and, along each axis r, the generating arrows a: (..01..) -> (..02..)
/// and b: (..02..) -> (..12..). Degenerate indices are the zero object.
class CubeDiagram {
public:
    /// The zero cube.
    CubeDiagram(Category cat, int n);

    int dim() const { return n_; }
    const Category& category() const { return cat_; }

    const Obj& at(const MultiIndex& x) const { return obj_[encode(x)]; }
    const Obj& at_code(std::size_t code) const { return obj_[code]; }
    /// Replaces the object; edges touching x must be reset afterwards.
    void set_object(const MultiIndex& x, Obj o);

    /// The arrow out of x along axis (1-based); x[axis] must be 01 or 02.
    const Mor& edge(int axis, const MultiIndex& x) const;
    /// Throws ShapeMismatch unless f runs between the current objects.
    void set_edge(int axis, const MultiIndex& x, Mor f);

    /// The composite arrow x -> y for x <= y coordinatewise (01 < 02 < 12).
    Mor map(const MultiIndex& x, const MultiIndex& y) const;

    bool is_zero() const;
    bool operator==(const CubeDiagram&) const = default;

private:
    std::size_t edge_slot(int axis, const MultiIndex& x) const;

    Category cat_;
    int n_;
    std::vector<Obj> obj_;
    std::vector<Mor> edges_;  // axis-major, then source code
};

/// x with coordinate `axis` (1-based) replaced.
MultiIndex with(const MultiIndex& x, int axis, IndexPair p);
/// The nondegenerate index one step further along the axis.
MultiIndex next_along(const MultiIndex& x, int axis);

struct Violation {
    std::string kind;  // "universe", "shape", "exactness", "commutativity"
    std::string where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    bool has(const std::string& kind) const;
    nlohmann::json to_json() const;
};

/// Checks objects lie in the universe, edges have the right endpoints, each
/// axis line is short exact (so the 12-end is the cokernel of a with b its
/// projection) and every generating square commutes.
ValidationReport validate(const CubeDiagram& c);

/// d_k(l)(c). Throws OutOfRange for bad specs and InvalidInput when c has
/// inconsistent edge shapes.
CubeDiagram apply_face(const CubeDiagram& c, FaceSpec spec);
/// s_k(l)(c): the new axis l has lines X = X -> 0 (k = 0) or 0 -> X = X (k = 1).
CubeDiagram apply_degeneracy(const CubeDiagram& c, DegenSpec spec);
/// Applies a functor word; its last op acts first.
CubeDiagram apply_word(const CubeDiagram& c, const Word& w);

/// A map of cubes: one component per nondegenerate index.
struct CubeMorphism {
    CubeDiagram src;
    CubeDiagram dst;
    std::vector<Mor> components;  // by index code

    const Mor& at(const MultiIndex& x) const { return components[encode(x)]; }
    /// Components run between the right objects and commute with every edge.
    bool commutes() const;
    bool is_cofibration() const;
    bool is_fibration() const;
    bool operator==(const CubeMorphism&) const = default;
};

CubeMorphism identity_morphism(const CubeDiagram& c);

/// X -f-> Y -g-> Z in S_2 of the (n-1)-cubes.
struct CubeSES {
    CubeDiagram X, Y, Z;
    CubeMorphism f, g;
};

/// Curries along axis 1: X = d_2(1)c, Y = d_1(1)c, Z = d_0(1)c.
/// Throws InvalidInput for 0-cubes.
CubeSES iteration_repack(const CubeDiagram& c);
/// Inverse of iteration_repack.
CubeDiagram iteration_unpack(const CubeSES& s);

struct CubePushout {
    CubeDiagram P;
    CubeMorphism inj_Y;
    CubeMorphism inj_W;
};

/// Pointwise pushout of a componentwise mono alpha: X -> Y along beta: X -> W.
/// Throws NotCofibration, ShapeMismatch, or OutOfUniverse.
CubePushout cube_pushout(const CubeMorphism& alpha, const CubeMorphism& beta);

/// Rows are the lines along axis 2, columns the lines along axis 1.
exact::NineGrid grid_from_cube(const CubeDiagram& c);

/// Moves c along isomorphisms iso[code]: at(x) -> new object; edges are
/// conjugated so the result is isomorphic to c.
CubeDiagram transport(const CubeDiagram& c, const std::vector<Mor>& iso);
CubeMorphism transport(const CubeMorphism& f, const std::vector<Mor>& src_iso, const std::vector<Mor>& dst_iso);
std::vector<Mor> random_automorphisms(const CubeDiagram& c, std::mt19937_64& rng);

/// {"category": ..., "n": n, "objects": {"01.12": ...}, "edges": {"1:*.12": {"a": M, "b": M}}}.
/// FdVect objects are written as dimensions, FinAb objects as lists of cyclic orders.
nlohmann::json to_json(const CubeDiagram& c);
/// Throws Format (or ShapeMismatch / InvalidInput for inconsistent maps).
CubeDiagram cube_from_json(const nlohmann::json& j);

}  // namespace qx::cube
